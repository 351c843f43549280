#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "gwcut/reduced_tree.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

// One atom of the Poisson random measure on time x skeleton. Edges are
// identified by their child node; offsets run from the parent end.
struct Mark {
    double time = 0.0;
    int edge = 0;
    double offset = 0.0;
};

struct MarkStopRule {
    double max_time = std::numeric_limits<double>::infinity();
    long long max_marks = -1;  // < 0: unbounded
};

// Streams the atoms in time order: inter-arrival Exp(total length),
// locations uniform by length.
class MarkGenerator {
public:
    MarkGenerator(const ReducedTree& tree, Rng& rng);
    Mark next();
    double total_length() const { return total_; }

private:
    Rng& rng_;
    double total_ = 0.0;
    double clock_ = 0.0;
    std::vector<double> cumulative_;  // over edges 1..N-1
};

std::vector<Mark> poisson_marks(const ReducedTree& tree, Rng& rng, MarkStopRule stop);

/*
 * Aldous-Pitman fragmentation restricted to a reduced tree. Marks arriving
 * on the skeleton cut it; the component of each tagged leaf is maintained
 * explicitly and its mass is estimated by the fraction of the k sample
 * leaves it contains. Heights accumulate (interval length) x (leaf count)/k
 * between marks; a component stops once the tagged leaf has no co-sample
 * leaf left and its skeleton length drops below eps, truncating the tail.
 * Marks restricted to the reduced tree see exactly the sample-leaf counts of
 * the full fragmentation, since a mark outside the spanned subtree never
 * separates two sample leaves.
 */
class FragmentationEstimator {
public:
    FragmentationEstimator(const ReducedTree& tree, std::vector<int> tagged_labels, double eps);

    void feed(const Mark& mark);
    bool finished() const;

    double height(int tagged_pos) const { return heights_[tagged_pos]; }
    double pair_delta(int pos_a, int pos_b) const;
    double pair_separation_time(int pos_a, int pos_b) const;
    double processed_time() const { return t_prev_; }

private:
    struct Component {
        std::vector<char> edge_in, touch_parent, touch_child, node_in;
        std::vector<double> lo, hi;
        int leaf_cnt = 0;
        double skel_len = 0.0;
        bool done = false;
        int tagged_node = 0;
    };

    bool tagged_below(const Component& c, int edge) const {
        return tin_[edge] <= tin_[c.tagged_node] && tin_[c.tagged_node] < tout_[edge];
    }
    void cut(Component& c, int edge, double offset);
    void flood(Component& c, int start, int via_edge);
    void check_done(Component& c) {
        if (!c.done && c.leaf_cnt == 1 && c.skel_len < eps_) c.done = true;
    }
    int pair_index(int a, int b) const;

    const ReducedTree* tree_ = nullptr;
    int k_ = 0;
    double eps_ = 0.0;
    std::vector<int> child_offset_, child_list_;
    std::vector<int> tin_, tout_, depth_;
    std::vector<char> is_leaf_;

    std::vector<int> tagged_nodes_;
    std::vector<Component> comps_;
    std::vector<double> heights_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<double> pair_sep_time_;  // negative until separated
    std::vector<double> pair_integral_;
    std::vector<std::vector<char>> pair_path_;
    int unseparated_ = 0;
    double t_prev_ = 0.0;
};

// Spec'd estimators. The mark-sequence forms raise HorizonError when the
// sequence ends before the stop condition; the adaptive forms extend the
// horizon internally.
double estimate_height(const ReducedTree& tree, const std::vector<Mark>& marks, int leaf,
                       double eps);
double estimate_height_adaptive(const ReducedTree& tree, Rng& rng, int leaf, double eps);
double estimate_delta(const ReducedTree& tree, const std::vector<Mark>& marks, int leaf_a,
                      int leaf_b, double eps);
double estimate_delta_adaptive(const ReducedTree& tree, Rng& rng, int leaf_a, int leaf_b,
                               double eps);

// One continuum sample of (delta(xi_i, xi_j) : 0 <= i,j <= m) using the first
// m of k leaves; row 0 holds heights. eps_rel scales the truncation tolerance
// by the tree's total length.
std::vector<std::vector<double>> delta_matrix_estimate(int k, int m, Rng& rng,
                                                       double eps_rel = 1e-3);

}  // namespace gwcut
