#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gwcut/schedule.hpp"
#include "gwcut/tree.hpp"

namespace gwcut {

/*
 * Genealogy of the blocks of the edge-deletion process on a planted tree.
 * Leaves are the edge labels 1..n (node ids 0..n-1); internal nodes are the
 * blocks, ids n..2n-1 in order of block destruction read backwards, so the
 * root block (the one holding every label) is id 2n-1. Each internal node
 * has 1..3 children: the blocks its removal splits off plus the removed
 * label's leaf. depth(leaf i) counts the removals performed on blocks
 * containing i. Distance queries go through depths plus a binary-lifting
 * ancestor table.
 */
class CutTree {
public:
    static constexpr std::uint32_t npos = UINT32_MAX;

    int n = 0;
    std::uint32_t root = 0;
    std::vector<std::uint32_t> parent;  // size 2n; parent[root] == npos
    std::vector<std::int32_t> depth;
    std::vector<std::uint32_t> child_offset;  // CSR, children ordered by min block label
    std::vector<std::uint32_t> child_list;
    std::vector<std::uint32_t> tin, tout;  // preorder intervals
    int log2ceil = 1;
    std::vector<std::uint32_t> up;  // binary lifting, level-major: up[l*2n + v]

    std::uint32_t leaf_node(int label) const { return static_cast<std::uint32_t>(label - 1); }
    bool is_leaf(std::uint32_t id) const { return id < static_cast<std::uint32_t>(n); }
    int node_count() const { return 2 * n; }

    std::uint32_t ancestor(std::uint32_t v, int level) const { return up[std::size_t(level) * parent.size() + v]; }
    std::uint32_t lca(std::uint32_t a, std::uint32_t b) const;
    bool is_ancestor(std::uint32_t a, std::uint32_t d) const { return tin[a] <= tin[d] && tout[d] <= tout[a]; }

    // Graph distance in the cut-tree between points of {0} u [n]; 0 is the root.
    long long cut_distance(int a, int b) const;

    // (m+1)x(m+1) pairwise distances with the root prepended at index 0.
    std::vector<std::vector<long long>> distance_matrix(const std::vector<int>& points) const;

    // Debug dump, one node per line: "id kind parent depth".
    void dump(std::ostream& os) const;

private:
    std::uint32_t node_from_point(int p) const;
};

CutTree build_cut_tree(const PlantedTree& planted, const RemovalSchedule& schedule);

void write_distance_matrix_csv(std::ostream& os, const std::vector<std::vector<long long>>& m);

}  // namespace gwcut
