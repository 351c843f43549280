#include "gwcut/tree.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace gwcut {

RootedTree RootedTree::from_parent_table(int n, std::vector<int> parent) {
    if (n < 1) throw std::invalid_argument("tree: n must be >= 1");
    if (static_cast<int>(parent.size()) == n) parent.insert(parent.begin(), 0);
    if (static_cast<int>(parent.size()) != n + 1)
        throw std::invalid_argument("tree: parent table has wrong length");

    RootedTree t;
    t.n = n;
    t.parent = std::move(parent);
    t.root = 0;
    for (int v = 1; v <= n; ++v) {
        int p = t.parent[v];
        if (p < 0 || p > n) throw std::invalid_argument("tree: parent index out of range");
        if (p == 0) {
            if (t.root != 0) throw std::invalid_argument("tree: more than one root");
            t.root = v;
        }
    }
    if (t.root == 0) throw std::invalid_argument("tree: no root");

    t.child_offset.assign(n + 2, 0);
    for (int v = 1; v <= n; ++v)
        if (v != t.root) ++t.child_offset[t.parent[v] + 1];
    for (int v = 1; v <= n + 1; ++v) t.child_offset[v] += t.child_offset[v - 1];
    t.child_list.assign(n - 1, 0);
    std::vector<int> cursor(t.child_offset.begin(), t.child_offset.end() - 1);
    for (int v = 1; v <= n; ++v)
        if (v != t.root) t.child_list[cursor[t.parent[v]]++] = v;

    // acyclicity: every vertex must reach the root
    std::vector<int> depth(n + 1, -1);
    depth[t.root] = 0;
    for (int v = 1; v <= n; ++v) {
        int u = v, steps = 0;
        while (depth[u] < 0 && steps <= n) { u = t.parent[u]; ++steps; }
        if (depth[u] < 0) throw std::invalid_argument("tree: parent table contains a cycle");
        // second pass fills depths along the walked path
        int d = depth[u] + steps;
        u = v;
        while (depth[u] < 0) { depth[u] = d--; u = t.parent[u]; }
    }
    return t;
}

bool RootedTree::bfs_labeled() const {
    if (root != 1) return false;
    int next = 2;
    for (int v = 1; v <= n; ++v) {
        for (const int* c = children_begin(v); c != children_end(v); ++c) {
            if (*c != next) return false;
            ++next;
        }
    }
    return next == n + 1;
}

std::vector<int> tree_distances_from(const RootedTree& tree, int v) {
    if (v < 1 || v > tree.n) throw std::invalid_argument("tree_distances_from: bad vertex");
    std::vector<int> dist(tree.n + 1, -1);
    std::vector<int> queue;
    queue.reserve(tree.n);
    dist[v] = 0;
    queue.push_back(v);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        int p = tree.parent[u];
        if (p != 0 && dist[p] < 0) { dist[p] = dist[u] + 1; queue.push_back(p); }
        for (const int* c = tree.children_begin(u); c != tree.children_end(u); ++c)
            if (dist[*c] < 0) { dist[*c] = dist[u] + 1; queue.push_back(*c); }
    }
    return dist;
}

PlantedTree plant(RootedTree tree) {
    PlantedTree pt;
    pt.tree = std::move(tree);
    return pt;
}

void write_tree_text(std::ostream& os, const RootedTree& tree) {
    os << tree.n << '\n';
    for (int v = 1; v <= tree.n; ++v) os << tree.parent[v] << (v == tree.n ? '\n' : ' ');
}

RootedTree read_tree_text(std::istream& is) {
    int n = 0;
    if (!(is >> n)) throw std::invalid_argument("tree text: missing vertex count");
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v)
        if (!(is >> parent[v])) throw std::invalid_argument("tree text: truncated parent table");
    return RootedTree::from_parent_table(n, std::move(parent));
}

}  // namespace gwcut
