#pragma once

#include <iosfwd>
#include <vector>

namespace gwcut {

/*
 * Finite rooted tree on vertices 1..n given by a parent table (0 marks the
 * root). Children are stored in CSR form to keep per-tree allocation flat.
 * Trees produced by the samplers are labeled in breadth-first order with the
 * root at 1; nothing downstream requires that labeling, but it makes outputs
 * reproducible.
 */
struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;        // size n+1, 1-based; parent[root] == 0
    std::vector<int> child_offset;  // size n+2
    std::vector<int> child_list;    // size n-1

    int child_count(int v) const { return child_offset[v + 1] - child_offset[v]; }
    const int* children_begin(int v) const { return child_list.data() + child_offset[v]; }
    const int* children_end(int v) const { return child_list.data() + child_offset[v + 1]; }

    // Labels 1..n enumerate the vertices in breadth-first order, children ascending.
    bool bfs_labeled() const;

    static RootedTree from_parent_table(int n, std::vector<int> parent);
};

// Graph distances in T from vertex v (1-based; result[0] unused).
std::vector<int> tree_distances_from(const RootedTree& tree, int v);

/*
 * Planted version: an extra base vertex (id 0) joined to the root. The n
 * edges of the planted tree are identified with 1..n by mapping each edge to
 * its endpoint farthest from the base, so edge i joins vertex i to
 * lower_endpoint(i), and the base-to-root edge carries the root's label.
 */
struct PlantedTree {
    RootedTree tree;

    int n_edges() const { return tree.n; }
    int lower_endpoint(int edge) const { return tree.parent[edge]; }
};

PlantedTree plant(RootedTree tree);

// Text format: line 1 = n, line 2 = n space-separated parent indices (0 for root).
void write_tree_text(std::ostream& os, const RootedTree& tree);
RootedTree read_tree_text(std::istream& is);

}  // namespace gwcut
