#include "gwcut/reduced_tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace gwcut {

double ReducedTree::total_length() const {
    double total = 0.0;
    for (std::size_t v = 1; v < length.size(); ++v) total += length[v];
    return total;
}

void ReducedTree::write(std::ostream& os) const {
    os << leaf_count << '\n';
    int edge_id = 1;
    for (int v = 1; v < node_count(); ++v)
        os << edge_id++ << ' ' << parent[v] << ' ' << v << ' ' << length[v] << '\n';
}

ReducedTree ReducedTree::read(std::istream& is) {
    ReducedTree t;
    if (!(is >> t.leaf_count)) throw std::invalid_argument("reduced tree: missing leaf count");
    // leaf ids are not part of the wire format; callers relying on labels
    // should reconstruct them (leaves = nodes that never appear as parents)
    std::vector<std::tuple<int, int, double>> edges;
    int id, p, c;
    double len;
    while (is >> id >> p >> c >> len) edges.emplace_back(p, c, len);
    int nodes = 1;
    for (auto& [ep, ec, el] : edges) nodes = std::max({nodes, ep + 1, ec + 1});
    t.parent.assign(nodes, -1);
    t.length.assign(nodes, 0.0);
    for (auto& [ep, ec, el] : edges) {
        if (ec <= 0 || ec >= nodes || ep < 0 || ep >= nodes)
            throw std::invalid_argument("reduced tree: bad edge");
        t.parent[ec] = ep;
        t.length[ec] = el;
    }
    std::vector<char> has_child(nodes, 0);
    for (int v = 1; v < nodes; ++v) {
        if (t.parent[v] < 0) throw std::invalid_argument("reduced tree: disconnected node");
        has_child[t.parent[v]] = 1;
    }
    for (int v = 1; v < nodes; ++v)
        if (!has_child[v]) t.leaf_node.push_back(v);
    return t;
}

}  // namespace gwcut
