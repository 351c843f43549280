#include "gwcut/cut_tree.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gwcut/disjoint_set.hpp"

namespace gwcut {

namespace {

void check_schedule(const PlantedTree& planted, const RemovalSchedule& schedule) {
    const int n = planted.n_edges();
    if (schedule.n() != n)
        throw std::invalid_argument("cut tree: schedule length does not match edge count");
    std::vector<char> seen(n + 1, 0);
    for (int e : schedule.order) {
        if (e < 1 || e > n || seen[e])
            throw std::invalid_argument("cut tree: schedule is not a permutation of the edge labels");
        seen[e] = 1;
    }
}

}  // namespace

CutTree build_cut_tree(const PlantedTree& planted, const RemovalSchedule& schedule) {
    check_schedule(planted, schedule);
    const int n = planted.n_edges();
    const std::uint32_t nodes = 2u * n;

    CutTree ct;
    ct.n = n;
    ct.parent.assign(nodes, CutTree::npos);
    ct.depth.assign(nodes, 0);

    /*
     * Reverse sweep: re-insert edges in backward removal order, merging
     * vertex components with union-find. Inserting the edge removed at step
     * r materializes the block that step destroys; its children are the
     * blocks previously rooted at the edge's two endpoints (0, 1 or 2 of
     * them exist) plus the removed label's leaf.
     */
    DisjointSet dsu(n + 1);
    std::vector<std::uint32_t> node_of(n + 1, CutTree::npos);
    std::vector<std::int32_t> min_label(n + 1, std::numeric_limits<std::int32_t>::max());

    for (int r = n - 1; r >= 0; --r) {
        const int e = schedule.order[r];
        const int a = e;
        const int b = planted.lower_endpoint(e);
        const std::uint32_t id = static_cast<std::uint32_t>(n + (n - 1 - r));

        const int ra = dsu.find(a);
        const int rb = dsu.find(b);
        if (node_of[ra] != CutTree::npos) ct.parent[node_of[ra]] = id;
        if (node_of[rb] != CutTree::npos) ct.parent[node_of[rb]] = id;
        ct.parent[ct.leaf_node(e)] = id;

        std::int32_t ml = std::min({min_label[ra], min_label[rb], static_cast<std::int32_t>(e)});
        const int nr = dsu.unite(a, b);
        node_of[nr] = id;
        min_label[nr] = ml;
    }
    ct.root = nodes - 1;

    // parents always carry larger ids, so one descending pass fixes depths
    for (std::uint32_t id = nodes - 1; id-- > 0;)
        ct.depth[id] = ct.depth[ct.parent[id]] + 1;

    // children CSR; within a node, blocks and leaf ordered by min block label
    // (block min labels fold bottom-up since children carry smaller ids)
    std::vector<std::int32_t> node_min_label(nodes, std::numeric_limits<std::int32_t>::max());
    for (int i = 0; i < n; ++i) node_min_label[i] = i + 1;
    for (std::uint32_t id = 0; id < nodes - 1; ++id)
        node_min_label[ct.parent[id]] = std::min(node_min_label[ct.parent[id]], node_min_label[id]);

    ct.child_offset.assign(nodes + 1, 0);
    for (std::uint32_t id = 0; id + 1 < nodes; ++id) ++ct.child_offset[ct.parent[id] + 1];
    for (std::uint32_t v = 1; v <= nodes; ++v) ct.child_offset[v] += ct.child_offset[v - 1];
    ct.child_list.assign(nodes - 1, 0);
    {
        std::vector<std::uint32_t> cursor(ct.child_offset.begin(), ct.child_offset.end() - 1);
        for (std::uint32_t id = 0; id + 1 < nodes; ++id) ct.child_list[cursor[ct.parent[id]]++] = id;
        for (std::uint32_t v = 0; v < nodes; ++v)
            std::sort(ct.child_list.begin() + ct.child_offset[v],
                      ct.child_list.begin() + ct.child_offset[v + 1],
                      [&](std::uint32_t x, std::uint32_t y) {
                          return node_min_label[x] < node_min_label[y];
                      });
    }

    // preorder intervals via iterative DFS
    ct.tin.assign(nodes, 0);
    ct.tout.assign(nodes, 0);
    {
        std::uint32_t timer = 0;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;  // (node, next child index)
        stack.reserve(64);
        stack.emplace_back(ct.root, 0);
        ct.tin[ct.root] = timer++;
        while (!stack.empty()) {
            auto& [v, ci] = stack.back();
            if (ci < ct.child_offset[v + 1] - ct.child_offset[v]) {
                std::uint32_t c = ct.child_list[ct.child_offset[v] + ci++];
                ct.tin[c] = timer++;
                stack.emplace_back(c, 0);
            } else {
                ct.tout[v] = timer;
                stack.pop_back();
            }
        }
    }

    // binary lifting table
    std::int32_t max_depth = 0;
    for (std::uint32_t id = 0; id < nodes; ++id) max_depth = std::max(max_depth, ct.depth[id]);
    ct.log2ceil = 1;
    while ((1 << ct.log2ceil) <= max_depth) ++ct.log2ceil;
    ct.up.assign(std::size_t(ct.log2ceil) * nodes, ct.root);
    for (std::uint32_t id = 0; id < nodes; ++id)
        ct.up[id] = (ct.parent[id] == CutTree::npos) ? id : ct.parent[id];
    for (int l = 1; l < ct.log2ceil; ++l)
        for (std::uint32_t id = 0; id < nodes; ++id)
            ct.up[std::size_t(l) * nodes + id] = ct.up[std::size_t(l - 1) * nodes + ct.up[std::size_t(l - 1) * nodes + id]];

    return ct;
}

std::uint32_t CutTree::lca(std::uint32_t a, std::uint32_t b) const {
    if (depth[a] < depth[b]) std::swap(a, b);
    int diff = depth[a] - depth[b];
    for (int l = 0; diff != 0; ++l, diff >>= 1)
        if (diff & 1) a = ancestor(a, l);
    if (a == b) return a;
    for (int l = log2ceil - 1; l >= 0; --l) {
        if (ancestor(a, l) != ancestor(b, l)) {
            a = ancestor(a, l);
            b = ancestor(b, l);
        }
    }
    return ancestor(a, 0);
}

std::uint32_t CutTree::node_from_point(int p) const {
    if (p == 0) return root;
    if (p < 1 || p > n) throw std::invalid_argument("cut_distance: label out of range");
    return leaf_node(p);
}

long long CutTree::cut_distance(int a, int b) const {
    const std::uint32_t na = node_from_point(a);
    const std::uint32_t nb = node_from_point(b);
    if (na == nb) return 0;
    const std::uint32_t l = lca(na, nb);
    return static_cast<long long>(depth[na]) + depth[nb] - 2LL * depth[l];
}

std::vector<std::vector<long long>> CutTree::distance_matrix(const std::vector<int>& points) const {
    const int m = static_cast<int>(points.size());
    std::vector<int> pts;
    pts.reserve(m + 1);
    pts.push_back(0);
    pts.insert(pts.end(), points.begin(), points.end());
    std::vector<std::vector<long long>> mat(m + 1, std::vector<long long>(m + 1, 0));
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            mat[i][j] = mat[j][i] = cut_distance(pts[i], pts[j]);
    return mat;
}

void CutTree::dump(std::ostream& os) const {
    for (std::uint32_t id = 0; id < parent.size(); ++id) {
        os << id << ' ' << (is_leaf(id) ? "leaf" : "block") << ' ';
        if (parent[id] == npos)
            os << -1;
        else
            os << parent[id];
        os << ' ' << depth[id] << '\n';
    }
}

void write_distance_matrix_csv(std::ostream& os, const std::vector<std::vector<long long>>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << 'p' << i;
    os << '\n';
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        os << '\n';
    }
}

}  // namespace gwcut
