#pragma once

#include <iosfwd>
#include <vector>

namespace gwcut {

/*
 * Rooted tree with k labeled leaves and real edge lengths: the shared shape
 * for reduced cut-trees and for the line-broken continuum tree. Node 0 is
 * the root; every other node stores its parent and the length of the edge
 * toward it.
 */
struct ReducedTree {
    int leaf_count = 0;
    std::vector<int> parent;      // parent[0] == -1
    std::vector<double> length;   // length[0] unused
    std::vector<int> leaf_node;   // label i (1-based) -> node id, at [i-1]

    int node_count() const { return static_cast<int>(parent.size()); }
    int edge_count() const { return node_count() - 1; }
    double total_length() const;

    // "k" then one line per edge: "edge_id parent_node child_node length".
    void write(std::ostream& os) const;
    static ReducedTree read(std::istream& is);
};

}  // namespace gwcut
