#include "gwcut/replant.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gwcut {

namespace {

std::vector<int> parent_table(const PlanarTree& t) {
    std::vector<int> parent(t.size(), -1);
    for (int v = 0; v < t.size(); ++v)
        for (int c : t.kids[v]) parent[c] = v;
    return parent;
}

}  // namespace

PointedPlantedTree replant_transform(const PointedPlantedTree& p) {
    const PlanarTree& t = p.tree;
    const int v = p.point;
    if (v < 0 || v >= t.size()) throw std::invalid_argument("replant: point out of range");

    PointedPlantedTree out;
    out.tree.kids = t.kids;  // v's slot becomes the re-grafted old base
    out.point = v;

    if (v == t.root) {
        // the remainder is just the base edge; re-planting it swaps the roles
        // of v and the base, leaving the shape unchanged
        out.tree.root = v;
        return out;
    }

    std::vector<int> parent = parent_table(t);
    std::vector<int> spine;  // v = u_0, u_1, ..., u_h = root
    for (int u = v; u != -1; u = parent[u]) spine.push_back(u);
    const int h = static_cast<int>(spine.size()) - 1;

    // reverse the spine: u_i's slot pointing at u_{i-1} now points at
    // u_{i+1}, the root's at the materialized old base (v's slot)
    for (int i = 1; i <= h; ++i) {
        const int u = spine[i];
        const int drop = spine[i - 1];
        const int gain = (i == h) ? v : spine[i + 1];
        auto& list = out.tree.kids[u];
        *std::find(list.begin(), list.end(), drop) = gain;
    }
    out.tree.root = spine[1];
    return out;
}

PlanarTree planar_from_rooted(const RootedTree& tree) {
    PlanarTree t;
    t.root = tree.root - 1;
    t.kids.resize(tree.n);
    for (int v = 1; v <= tree.n; ++v) {
        t.kids[v - 1].reserve(tree.child_count(v));
        for (const int* c = tree.children_begin(v); c != tree.children_end(v); ++c)
            t.kids[v - 1].push_back(*c - 1);
    }
    return t;
}

RootedTree rooted_from_planar(const PlanarTree& tree) {
    const int n = tree.size();
    std::vector<int> label(n, 0);
    std::vector<int> queue{tree.root};
    label[tree.root] = 1;
    int next = 2;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int c : tree.kids[queue[h]]) {
            label[c] = next++;
            queue.push_back(c);
        }
    std::vector<int> parent(n + 1, 0);
    for (int v = 0; v < n; ++v)
        for (int c : tree.kids[v]) parent[label[c]] = label[v];
    return RootedTree::from_parent_table(n, std::move(parent));
}

std::vector<int> preorder_code(const PlanarTree& tree) {
    std::vector<int> code;
    code.reserve(tree.size());
    std::vector<int> stack{tree.root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        code.push_back(static_cast<int>(tree.kids[v].size()));
        for (auto it = tree.kids[v].rbegin(); it != tree.kids[v].rend(); ++it)
            stack.push_back(*it);
    }
    return code;
}

std::vector<int> bfs_code(const PlanarTree& tree) {
    std::vector<int> code;
    code.reserve(tree.size());
    std::vector<int> queue{tree.root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int v = queue[h];
        code.push_back(static_cast<int>(tree.kids[v].size()));
        for (int c : tree.kids[v]) queue.push_back(c);
    }
    return code;
}

int preorder_rank(const PlanarTree& tree, int v) {
    int rank = 0;
    std::vector<int> stack{tree.root};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++rank;
        if (u == v) return rank;
        for (auto it = tree.kids[u].rbegin(); it != tree.kids[u].rend(); ++it)
            stack.push_back(*it);
    }
    throw std::invalid_argument("preorder_rank: vertex not reachable");
}

int bfs_rank(const PlanarTree& tree, int v) {
    std::vector<int> queue{tree.root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        if (queue[h] == v) return static_cast<int>(h) + 1;
        for (int c : tree.kids[queue[h]]) queue.push_back(c);
    }
    throw std::invalid_argument("bfs_rank: vertex not reachable");
}

namespace {

// preorder offspring sequences with valid Lukasiewicz paths, lexicographic
void gen_codes(int remaining, int open_slots, std::vector<int>& code,
               std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(code);
        return;
    }
    for (int c = 0; c <= remaining - 1; ++c) {
        const int slots = open_slots - 1 + c;
        const int rest = remaining - 1;
        if (rest == 0 ? slots != 0 : (slots < 1 || slots > rest)) continue;
        code.push_back(c);
        gen_codes(rest, slots, code, out);
        code.pop_back();
    }
}

PlanarTree tree_from_preorder(const std::vector<int>& code) {
    PlanarTree t;
    t.root = 0;
    t.kids.resize(code.size());
    int cursor = 0;
    // recursive fill via explicit stack: next vertex id in preorder
    struct Frame { int v; int want; };
    std::vector<Frame> stack;
    stack.push_back({0, code[0]});
    cursor = 1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (static_cast<int>(t.kids[f.v].size()) == f.want) {
            stack.pop_back();
            continue;
        }
        const int c = cursor++;
        t.kids[f.v].push_back(c);
        stack.push_back({c, code[c]});
    }
    return t;
}

}  // namespace

std::vector<PlanarTree> enumerate_planar_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_planar_trees: n must be >= 1");
    std::vector<std::vector<int>> codes;
    std::vector<int> code;
    gen_codes(n, 1, code, codes);
    std::vector<PlanarTree> trees;
    trees.reserve(codes.size());
    for (const auto& c : codes) trees.push_back(tree_from_preorder(c));
    return trees;
}

Rational gw_probability(const OffspringLaw& law, const PlanarTree& tree) {
    Rational prob(1);
    for (int v = 0; v < tree.size(); ++v) {
        prob *= law.pmf_rational(static_cast<int>(tree.kids[v].size()));
        if (prob == Rational(0)) return prob;
    }
    return prob;
}

std::vector<GwStarAtom> enumerate_gw_star(const OffspringLaw& law, int n, int cap) {
    if (n > cap) throw std::invalid_argument("enumerate_gw_star: n exceeds the enumeration cap");
    if (!law.has_rational_pmf())
        throw std::invalid_argument("enumerate_gw_star: law must have exact rational pmf");
    std::vector<GwStarAtom> atoms;
    for (PlanarTree& t : enumerate_planar_trees(n)) {
        Rational prob = gw_probability(law, t);
        if (prob == Rational(0)) continue;
        for (int v = 0; v < n; ++v) atoms.push_back({t, v, prob});
    }
    return atoms;
}

void write_gw_star_csv(std::ostream& os, const std::vector<GwStarAtom>& atoms) {
    os << "tree_code,point,probability_num,probability_den\n";
    for (const auto& atom : atoms) {
        const std::vector<int> code = bfs_code(atom.tree);
        for (std::size_t i = 0; i < code.size(); ++i) os << (i ? "-" : "") << code[i];
        os << ',' << bfs_rank(atom.tree, atom.point) << ',' << atom.weight.num() << ','
           << atom.weight.den() << '\n';
    }
}

}  // namespace gwcut
