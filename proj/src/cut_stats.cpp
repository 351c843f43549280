#include "gwcut/cut_stats.hpp"

#include <algorithm>
#include <stdexcept>

#include "gwcut/disjoint_set.hpp"

namespace gwcut {

long long count_cuts(const PlantedTree& planted, const RemovalSchedule& schedule,
                     const std::vector<int>& marked) {
    const int n = planted.n_edges();
    if (marked.empty()) throw std::invalid_argument("count_cuts: marked set is empty");
    std::vector<char> is_marked(n + 1, 0);
    for (int e : marked) {
        if (e < 1 || e > n) throw std::invalid_argument("count_cuts: marked label out of range");
        is_marked[e] = 1;
    }
    if (schedule.n() != n) throw std::invalid_argument("count_cuts: schedule/tree mismatch");

    // Reverse sweep; a step counts iff the block it destroys contains a
    // marked edge removed at that step or later.
    DisjointSet dsu(n + 1);
    std::vector<std::int32_t> marked_in(n + 1, 0);
    long long total = 0;
    for (int r = n - 1; r >= 0; --r) {
        const int e = schedule.order[r];
        const int ra = dsu.find(e);
        const int rb = dsu.find(planted.lower_endpoint(e));
        std::int32_t cnt = marked_in[ra] + (ra == rb ? 0 : marked_in[rb]) + is_marked[e];
        const int nr = dsu.unite(e, planted.lower_endpoint(e));
        marked_in[nr] = cnt;
        if (cnt > 0) ++total;
    }
    return total;
}

ReducedCutTree reduce_cut_tree(const CutTree& ct, const std::vector<int>& leaf_labels) {
    if (leaf_labels.empty()) throw std::invalid_argument("reduce_cut_tree: no leaves given");
    std::vector<int> labels;
    labels.reserve(leaf_labels.size());
    {
        std::vector<char> seen(ct.n + 1, 0);
        for (int l : leaf_labels) {
            if (l < 1 || l > ct.n) throw std::invalid_argument("reduce_cut_tree: bad leaf label");
            if (!seen[l]) { seen[l] = 1; labels.push_back(l); }
        }
    }

    // virtual tree over {root} + chosen leaves + pairwise LCAs
    std::vector<std::uint32_t> vs;
    vs.push_back(ct.root);
    for (int l : labels) vs.push_back(ct.leaf_node(l));
    std::sort(vs.begin() + 1, vs.end(), [&](std::uint32_t a, std::uint32_t b) { return ct.tin[a] < ct.tin[b]; });
    const std::size_t base = vs.size();
    for (std::size_t i = 2; i < base; ++i) vs.push_back(ct.lca(vs[i - 1], vs[i]));
    std::sort(vs.begin(), vs.end(), [&](std::uint32_t a, std::uint32_t b) { return ct.tin[a] < ct.tin[b]; });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (parent ct-node, child ct-node)
    for (std::uint32_t v : vs) {
        while (!stack.empty() && !ct.is_ancestor(stack.back(), v)) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), v);
        stack.push_back(v);
    }

    ReducedCutTree out;
    std::vector<std::uint32_t> id_map_keys;
    std::vector<int> id_map_vals;
    auto reduced_id = [&](std::uint32_t ctn) {
        for (std::size_t i = 0; i < id_map_keys.size(); ++i)
            if (id_map_keys[i] == ctn) return id_map_vals[i];
        id_map_keys.push_back(ctn);
        id_map_vals.push_back(static_cast<int>(id_map_keys.size()) - 1);
        out.shape.parent.push_back(-1);
        out.shape.length.push_back(0.0);
        return id_map_vals.back();
    };
    reduced_id(ct.root);  // node 0
    long long hops = 0;
    for (auto [p, c] : edges) {
        int rp = reduced_id(p);
        int rc = reduced_id(c);
        out.shape.parent[rc] = rp;
        long long len = ct.depth[c] - ct.depth[p];
        out.shape.length[rc] = static_cast<double>(len);
        hops += len;
    }
    out.leaf_labels = labels;
    out.shape.leaf_count = static_cast<int>(labels.size());
    out.shape.leaf_node.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.shape.leaf_node[i] = reduced_id(ct.leaf_node(labels[i]));
    // spanning subtree has hops+1 nodes, k of which are the chosen leaves
    out.internal_nodes = hops + 1 - static_cast<long long>(labels.size());
    return out;
}

Rational expected_cut_distance_exact(const PlantedTree& planted, int edge) {
    const int n = planted.n_edges();
    if (edge < 1 || edge > n) throw std::invalid_argument("expected_cut_distance_exact: bad edge");
    std::vector<int> dist = tree_distances_from(planted.tree, edge);
    Rational sum(0);
    for (int j = 1; j <= n; ++j) sum += Rational(1, dist[j] + 1);
    return sum;
}

std::vector<long long> forward_cut_depths(const PlantedTree& planted,
                                          const RemovalSchedule& schedule) {
    const int n = planted.n_edges();
    if (schedule.n() != n) throw std::invalid_argument("forward_cut_depths: schedule/tree mismatch");
    std::vector<long long> counter(n + 1, 0);
    std::vector<char> removed(n + 1, 0);
    for (int r = 0; r < n; ++r) {
        const int e = schedule.order[r];
        // connectivity among the edges still present before this step
        DisjointSet dsu(n + 1);
        for (int j = 1; j <= n; ++j)
            if (!removed[j]) dsu.unite(j, planted.lower_endpoint(j));
        const int comp = dsu.find(e);
        for (int j = 1; j <= n; ++j)
            if (!removed[j] && dsu.find(j) == comp) ++counter[j];
        removed[e] = 1;
    }
    return std::vector<long long>(counter.begin() + 1, counter.end());
}

ContinuousCutStats::ContinuousCutStats(const PlantedTree& planted,
                                       const RemovalSchedule& schedule,
                                       std::vector<int> tracked)
    : n_(planted.n_edges()), tracked_(std::move(tracked)), times_(schedule.times) {
    if (!schedule.continuous())
        throw std::invalid_argument("modified distance requires a continuous-mode schedule");
    if (schedule.n() != n_) throw std::invalid_argument("modified distance: schedule/tree mismatch");
    for (int l : tracked_)
        if (l < 1 || l > n_) throw std::invalid_argument("modified distance: bad tracked label");

    const int m = static_cast<int>(tracked_.size());
    const int n = n_;
    std::vector<int> tracked_index(n + 1, -1);
    for (int i = 0; i < m; ++i) {
        if (tracked_index[tracked_[i]] >= 0)
            throw std::invalid_argument("modified distance: duplicate tracked label");
        tracked_index[tracked_[i]] = i;
    }

    // interval r (0-based) spans [t_{r-1}, t_r); its forest is the state after
    // r removals, i.e. after reverse-inserting order[r..n-1]
    std::vector<std::vector<double>> contrib(m, std::vector<double>(n, 0.0));
    disconnect_rank_.assign(m, std::vector<int>(m, -1));
    std::vector<char> inserted(m, 0);

    DisjointSet dsu(n + 1);
    std::vector<std::int64_t> edges_in(n + 1, 0);
    for (int r = n - 1; r >= 0; --r) {
        const int e = schedule.order[r];
        const int ra = dsu.find(e);
        const int rb = dsu.find(planted.lower_endpoint(e));
        std::int64_t cnt = edges_in[ra] + (ra == rb ? 0 : edges_in[rb]) + 1;
        const int nr = dsu.unite(e, planted.lower_endpoint(e));
        edges_in[nr] = cnt;
        if (tracked_index[e] >= 0) inserted[tracked_index[e]] = 1;

        const double dt = times_[r] - (r > 0 ? times_[r - 1] : 0.0);
        for (int i = 0; i < m; ++i) {
            if (!inserted[i]) continue;
            contrib[i][r] = dt * static_cast<double>(edges_in[dsu.find(tracked_[i])]) /
                            static_cast<double>(n);
        }
        for (int i = 0; i < m; ++i) {
            if (!inserted[i]) continue;
            for (int j = i + 1; j < m; ++j) {
                if (!inserted[j] || disconnect_rank_[i][j] >= 0) continue;
                if (dsu.find(tracked_[i]) == dsu.find(tracked_[j])) {
                    disconnect_rank_[i][j] = disconnect_rank_[j][i] = r;
                }
            }
        }
    }

    totals_.assign(m, 0.0);
    suffix_.assign(m, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < m; ++i) {
        for (int r = n - 1; r >= 0; --r) suffix_[i][r] = suffix_[i][r + 1] + contrib[i][r];
        totals_[i] = suffix_[i][0];
    }
}

int ContinuousCutStats::index_of(int label) const {
    for (std::size_t i = 0; i < tracked_.size(); ++i)
        if (tracked_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("modified distance: label was not tracked");
}

double ContinuousCutStats::root_distance(int label) const { return totals_[index_of(label)]; }

double ContinuousCutStats::pair_distance(int a, int b) const {
    if (a == b) return 0.0;
    if (a == 0) return root_distance(b);
    if (b == 0) return root_distance(a);
    const int i = index_of(a), j = index_of(b);
    const int r = disconnect_rank_[i][j];
    // they disconnect at the removal ending interval r, so integrate from t_r on
    return suffix_[i][r + 1] + suffix_[j][r + 1];
}

double ContinuousCutStats::disconnect_time(int a, int b) const {
    const int r = disconnect_rank_[index_of(a)][index_of(b)];
    return times_[r];
}

double modified_distance(const PlantedTree& planted, const RemovalSchedule& schedule,
                         int a, int b) {
    std::vector<int> tracked;
    if (a != 0) tracked.push_back(a);
    if (b != 0 && b != a) tracked.push_back(b);
    if (tracked.empty()) return 0.0;
    ContinuousCutStats stats(planted, schedule, tracked);
    return stats.pair_distance(a, b);
}

}  // namespace gwcut
