#pragma once

#include <vector>

#include "gwcut/cut_tree.hpp"
#include "gwcut/rational.hpp"
#include "gwcut/reduced_tree.hpp"
#include "gwcut/schedule.hpp"
#include "gwcut/tree.hpp"

namespace gwcut {

// Number of removal steps applied to blocks holding at least one marked edge,
// until every marked edge is gone. Duplicate marks collapse.
long long count_cuts(const PlantedTree& planted, const RemovalSchedule& schedule,
                     const std::vector<int>& marked);

struct ReducedCutTree {
    ReducedTree shape;
    std::vector<int> leaf_labels;  // original edge label per reduced leaf label
    long long internal_nodes = 0;  // N: spanning internal nodes of the full cut-tree

    double total_length() const { return shape.total_length(); }
};

// Subtree of the cut-tree spanned by the root and the chosen leaves, unary
// chains contracted into integer-length edges.
ReducedCutTree reduce_cut_tree(const CutTree& ct, const std::vector<int>& leaf_labels);

// E delta(0,i) over uniform removal orders, exactly: sum_j 1/m_ij with
// m_ij = (distance between vertices i and j in T) + 1, the edge count of the
// path joining edges i and j in the planted tree, both ends included.
Rational expected_cut_distance_exact(const PlantedTree& planted, int edge);

// Definitional forward simulation: delta(0,i) for every i under one schedule,
// by recomputing surviving-edge connectivity at each step. Quadratic; this is
// the oracle the reverse construction is checked against.
std::vector<long long> forward_cut_depths(const PlantedTree& planted,
                                          const RemovalSchedule& schedule);

/*
 * Exact evaluation of the modified distance delta' for a continuous-mode
 * schedule: component sizes are piecewise constant between removal times, so
 * the mass integrals reduce to finite sums over inter-removal intervals.
 * One reverse sweep serves all tracked labels.
 */
class ContinuousCutStats {
public:
    ContinuousCutStats(const PlantedTree& planted, const RemovalSchedule& schedule,
                       std::vector<int> tracked);

    double root_distance(int label) const;          // delta'(0,i)
    double pair_distance(int a, int b) const;       // delta'(i,j); 0 means the root
    double disconnect_time(int a, int b) const;     // t_ij

private:
    int index_of(int label) const;

    int n_ = 0;
    std::vector<int> tracked_;
    std::vector<double> totals_;               // per tracked label: h_i
    std::vector<std::vector<double>> suffix_;  // suffix_[i][r] = integral of mu_i over [t_r, inf)
    std::vector<std::vector<int>> disconnect_rank_;
    std::vector<double> times_;
};

double modified_distance(const PlantedTree& planted, const RemovalSchedule& schedule,
                         int a, int b);

}  // namespace gwcut
