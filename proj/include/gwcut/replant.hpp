#pragma once

#include <iosfwd>
#include <vector>

#include "gwcut/offspring.hpp"
#include "gwcut/rational.hpp"
#include "gwcut/tree.hpp"

namespace gwcut {

// Planar (ordered) rooted tree; vertex ids are arbitrary slots, order of the
// kid lists is structural. The planted version adds an implicit base vertex
// below the root.
struct PlanarTree {
    int root = 0;
    std::vector<std::vector<int>> kids;

    int size() const { return static_cast<int>(kids.size()); }
    bool operator==(const PlanarTree& o) const { return root == o.root && kids == o.kids; }
};

struct PointedPlantedTree {
    PlanarTree tree;
    int point = 0;  // a vertex of the tree, never the base

    bool operator==(const PointedPlantedTree& o) const {
        return point == o.point && tree == o.tree;
    }
};

/*
 * The re-planting involution: split off the subtree below the point v, strip
 * it from the planted tree, re-plant the remainder at v (the edge to v's
 * parent becomes the base edge, so v becomes the new base), and re-graft the
 * split subtree at the former base vertex, which becomes the new point.
 * Vertex slots are reused (the old base takes v's slot), so applying the
 * transform twice reproduces the input exactly. Along the reversed spine
 * each vertex's outgoing spine child is replaced in place, which is what
 * makes the map involutive on ordered trees.
 */
PointedPlantedTree replant_transform(const PointedPlantedTree& p);

PlanarTree planar_from_rooted(const RootedTree& tree);
RootedTree rooted_from_planar(const PlanarTree& tree);  // BFS labels

std::vector<int> preorder_code(const PlanarTree& tree);  // DFS offspring counts
std::vector<int> bfs_code(const PlanarTree& tree);
int preorder_rank(const PlanarTree& tree, int v);  // 1-based
int bfs_rank(const PlanarTree& tree, int v);       // 1-based

// All planar rooted trees with n vertices, ordered lexicographically by
// preorder code.
std::vector<PlanarTree> enumerate_planar_trees(int n);

// Product of offspring probabilities over the vertices (exact).
Rational gw_probability(const OffspringLaw& law, const PlanarTree& tree);

struct GwStarAtom {
    PlanarTree tree;
    int point = 0;       // vertex id
    Rational weight;     // GW probability of the tree
};

// All pointed planted trees with n edges carrying positive measure; the
// total equals n * P(|t| = n).
std::vector<GwStarAtom> enumerate_gw_star(const OffspringLaw& law, int n, int cap = 6);

// CSV dump: "tree_code,point,probability_num,probability_den"; tree codes are
// dash-joined breadth-first offspring counts, points are BFS ranks.
void write_gw_star_csv(std::ostream& os, const std::vector<GwStarAtom>& atoms);

}  // namespace gwcut
