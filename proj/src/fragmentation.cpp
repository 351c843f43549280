#include "gwcut/fragmentation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwcut/errors.hpp"
#include "gwcut/line_breaking.hpp"

namespace gwcut {

MarkGenerator::MarkGenerator(const ReducedTree& tree, Rng& rng) : rng_(rng) {
    const int nodes = tree.node_count();
    cumulative_.resize(nodes);
    cumulative_[0] = 0.0;
    for (int v = 1; v < nodes; ++v) cumulative_[v] = cumulative_[v - 1] + tree.length[v];
    total_ = cumulative_.back();
    if (!(total_ > 0.0)) throw std::invalid_argument("poisson marks: tree has zero length");
}

Mark MarkGenerator::next() {
    std::exponential_distribution<double> expo(total_);
    clock_ += expo(rng_);
    std::uniform_real_distribution<double> unif(0.0, total_);
    const double u = unif(rng_);
    const int edge = static_cast<int>(
        std::upper_bound(cumulative_.begin() + 1, cumulative_.end(), u) - cumulative_.begin());
    return Mark{clock_, edge, u - cumulative_[edge - 1]};
}

std::vector<Mark> poisson_marks(const ReducedTree& tree, Rng& rng, MarkStopRule stop) {
    MarkGenerator gen(tree, rng);
    std::vector<Mark> marks;
    while (true) {
        if (stop.max_marks >= 0 && static_cast<long long>(marks.size()) >= stop.max_marks) break;
        Mark m = gen.next();
        if (m.time > stop.max_time) break;
        marks.push_back(m);
    }
    return marks;
}

FragmentationEstimator::FragmentationEstimator(const ReducedTree& tree,
                                               std::vector<int> tagged_labels, double eps)
    : tree_(&tree), k_(tree.leaf_count), eps_(eps) {
    const int nodes = tree.node_count();

    child_offset_.assign(nodes + 1, 0);
    for (int v = 1; v < nodes; ++v) ++child_offset_[tree.parent[v] + 1];
    for (int v = 1; v <= nodes; ++v) child_offset_[v] += child_offset_[v - 1];
    child_list_.assign(nodes - 1, 0);
    {
        std::vector<int> cursor(child_offset_.begin(), child_offset_.end() - 1);
        for (int v = 1; v < nodes; ++v) child_list_[cursor[tree.parent[v]]++] = v;
    }

    tin_.assign(nodes, 0);
    tout_.assign(nodes, 0);
    depth_.assign(nodes, 0);
    {
        int timer = 0;
        std::vector<std::pair<int, int>> stack{{0, 0}};
        tin_[0] = timer++;
        while (!stack.empty()) {
            auto& [v, ci] = stack.back();
            if (ci < child_offset_[v + 1] - child_offset_[v]) {
                int c = child_list_[child_offset_[v] + ci++];
                tin_[c] = timer++;
                depth_[c] = depth_[v] + 1;
                stack.emplace_back(c, 0);
            } else {
                tout_[v] = timer;
                stack.pop_back();
            }
        }
    }

    is_leaf_.assign(nodes, 0);
    for (int node : tree.leaf_node) is_leaf_[node] = 1;

    tagged_nodes_.reserve(tagged_labels.size());
    for (int label : tagged_labels) {
        if (label < 1 || label > k_)
            throw std::invalid_argument("fragmentation: tagged leaf label out of range");
        tagged_nodes_.push_back(tree.leaf_node[label - 1]);
    }

    const double total = tree.total_length();
    Component proto;
    proto.edge_in.assign(nodes, 1);
    proto.edge_in[0] = 0;
    proto.touch_parent.assign(nodes, 1);
    proto.touch_child.assign(nodes, 1);
    proto.node_in.assign(nodes, 1);
    proto.lo.assign(nodes, 0.0);
    proto.hi = tree.length;
    proto.leaf_cnt = k_;
    proto.skel_len = total;

    comps_.assign(tagged_nodes_.size(), proto);
    heights_.assign(tagged_nodes_.size(), 0.0);
    for (std::size_t i = 0; i < tagged_nodes_.size(); ++i) {
        comps_[i].tagged_node = tagged_nodes_[i];
        check_done(comps_[i]);
    }

    for (std::size_t i = 0; i < tagged_nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < tagged_nodes_.size(); ++j) {
            pairs_.emplace_back(static_cast<int>(i), static_cast<int>(j));
            std::vector<char> path(nodes, 0);
            int a = tagged_nodes_[i], b = tagged_nodes_[j];
            while (a != b) {
                if (depth_[a] < depth_[b]) std::swap(a, b);
                path[a] = 1;
                a = tree.parent[a];
            }
            pair_path_.push_back(std::move(path));
            pair_sep_time_.push_back(-1.0);
            pair_integral_.push_back(0.0);
        }
    }
    unseparated_ = static_cast<int>(pairs_.size());
}

void FragmentationEstimator::feed(const Mark& mark) {
    const double dt = mark.time - t_prev_;
    if (dt < 0.0) throw std::invalid_argument("fragmentation: marks must arrive in time order");

    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i].done)
            heights_[i] += dt * static_cast<double>(comps_[i].leaf_cnt) / static_cast<double>(k_);

    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (pair_sep_time_[p] < 0.0) continue;
        const Component& ca = comps_[pairs_[p].first];
        const Component& cb = comps_[pairs_[p].second];
        double mass = 0.0;
        if (!ca.done) mass += static_cast<double>(ca.leaf_cnt) / static_cast<double>(k_);
        if (!cb.done) mass += static_cast<double>(cb.leaf_cnt) / static_cast<double>(k_);
        pair_integral_[p] += dt * mass;
    }

    for (auto& c : comps_)
        if (!c.done) cut(c, mark.edge, mark.offset);

    if (unseparated_ > 0) {
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            if (pair_sep_time_[p] < 0.0 && pair_path_[p][mark.edge]) {
                pair_sep_time_[p] = mark.time;
                --unseparated_;
            }
        }
    }
    t_prev_ = mark.time;
}

void FragmentationEstimator::cut(Component& c, int edge, double offset) {
    if (!c.edge_in[edge]) return;
    if (offset <= c.lo[edge] || offset >= c.hi[edge]) return;  // outside the live segment

    if (tagged_below(c, edge)) {
        // keep the child side; the parent-side remainder and everything
        // beyond it leave the component
        c.skel_len -= offset - c.lo[edge];
        const bool spill = c.touch_parent[edge];
        c.lo[edge] = offset;
        c.touch_parent[edge] = 0;
        if (spill) flood(c, tree_->parent[edge], edge);
    } else {
        c.skel_len -= c.hi[edge] - offset;
        const bool spill = c.touch_child[edge];
        c.hi[edge] = offset;
        c.touch_child[edge] = 0;
        if (spill) flood(c, edge, edge);
    }
    check_done(c);
}

void FragmentationEstimator::flood(Component& c, int start, int via_edge) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (!c.node_in[u]) continue;
        c.node_in[u] = 0;
        if (is_leaf_[u]) --c.leaf_cnt;

        auto visit = [&](int f, bool u_is_parent) {
            if (f == via_edge || !c.edge_in[f]) return;
            const bool touches_u = u_is_parent ? c.touch_parent[f] : c.touch_child[f];
            if (!touches_u) return;
            c.skel_len -= c.hi[f] - c.lo[f];
            c.edge_in[f] = 0;
            const bool reaches_far = u_is_parent ? c.touch_child[f] : c.touch_parent[f];
            if (reaches_far) stack.push_back(u_is_parent ? f : tree_->parent[f]);
        };
        if (u != 0) visit(u, false);  // parent edge of u
        for (int ci = child_offset_[u]; ci < child_offset_[u + 1]; ++ci)
            visit(child_list_[ci], true);
    }
}

bool FragmentationEstimator::finished() const {
    if (unseparated_ > 0) return false;
    for (const auto& c : comps_)
        if (!c.done) return false;
    return true;
}

int FragmentationEstimator::pair_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (pairs_[p].first == a && pairs_[p].second == b) return static_cast<int>(p);
    throw std::invalid_argument("fragmentation: pair was not tracked");
}

double FragmentationEstimator::pair_delta(int pos_a, int pos_b) const {
    if (pos_a == pos_b) return 0.0;
    return pair_integral_[pair_index(pos_a, pos_b)];
}

double FragmentationEstimator::pair_separation_time(int pos_a, int pos_b) const {
    return pair_sep_time_[pair_index(pos_a, pos_b)];
}

namespace {

constexpr long long kAdaptiveMarkCap = 200'000'000;

void run_adaptive(const ReducedTree& tree, Rng& rng, FragmentationEstimator& est) {
    MarkGenerator gen(tree, rng);
    for (long long i = 0; i < kAdaptiveMarkCap; ++i) {
        if (est.finished()) return;
        est.feed(gen.next());
    }
    if (!est.finished()) throw HorizonError("fragmentation: adaptive mark cap exhausted");
}

}  // namespace

double estimate_height(const ReducedTree& tree, const std::vector<Mark>& marks, int leaf,
                       double eps) {
    FragmentationEstimator est(tree, {leaf}, eps);
    for (const Mark& m : marks) {
        if (est.finished()) break;
        est.feed(m);
    }
    if (!est.finished())
        throw HorizonError("estimate_height: mark sequence ended before the stop condition");
    return est.height(0);
}

double estimate_height_adaptive(const ReducedTree& tree, Rng& rng, int leaf, double eps) {
    FragmentationEstimator est(tree, {leaf}, eps);
    run_adaptive(tree, rng, est);
    return est.height(0);
}

double estimate_delta(const ReducedTree& tree, const std::vector<Mark>& marks, int leaf_a,
                      int leaf_b, double eps) {
    if (leaf_a == leaf_b) return 0.0;
    FragmentationEstimator est(tree, {leaf_a, leaf_b}, eps);
    for (const Mark& m : marks) {
        if (est.finished()) break;
        est.feed(m);
    }
    if (!est.finished())
        throw HorizonError("estimate_delta: mark sequence ended before the stop condition");
    return est.pair_delta(0, 1);
}

double estimate_delta_adaptive(const ReducedTree& tree, Rng& rng, int leaf_a, int leaf_b,
                               double eps) {
    if (leaf_a == leaf_b) return 0.0;
    FragmentationEstimator est(tree, {leaf_a, leaf_b}, eps);
    run_adaptive(tree, rng, est);
    return est.pair_delta(0, 1);
}

std::vector<std::vector<double>> delta_matrix_estimate(int k, int m, Rng& rng, double eps_rel) {
    if (m < 0 || m > k) throw std::invalid_argument("delta_matrix_estimate: need 0 <= m <= k");
    std::vector<std::vector<double>> mat(m + 1, std::vector<double>(m + 1, 0.0));
    if (m == 0) return mat;

    ReducedTree tree = line_break_reduced_tree(k, rng);
    std::vector<int> tagged(m);
    for (int i = 0; i < m; ++i) tagged[i] = i + 1;
    FragmentationEstimator est(tree, tagged, eps_rel * tree.total_length());
    run_adaptive(tree, rng, est);

    for (int i = 0; i < m; ++i) mat[0][i + 1] = mat[i + 1][0] = est.height(i);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            mat[i + 1][j + 1] = mat[j + 1][i + 1] = est.pair_delta(i, j);
    return mat;
}

}  // namespace gwcut
