#include <map>
#include <sstream>

#include "doctest.h"
#include "gwcut/gw_sampler.hpp"
#include "gwcut/replant.hpp"

using namespace gwcut;

namespace {

using Canonical = std::pair<std::vector<int>, int>;  // preorder code, point rank

Canonical canonical(const PointedPlantedTree& p) {
    return {preorder_code(p.tree), preorder_rank(p.tree, p.point)};
}

// distances from v over the planted tree, with the base materialized as an
// extra vertex attached to the root
std::vector<int> planted_distances(const PlanarTree& t, int v) {
    const int n = t.size();
    const int base = n;
    std::vector<std::vector<int>> adj(n + 1);
    for (int u = 0; u < n; ++u)
        for (int c : t.kids[u]) {
            adj[u].push_back(c);
            adj[c].push_back(u);
        }
    adj[t.root].push_back(base);
    adj[base].push_back(t.root);
    std::vector<int> dist(n + 1, -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int w : adj[queue[h]])
            if (dist[w] < 0) { dist[w] = dist[queue[h]] + 1; queue.push_back(w); }
    return dist;
}

std::vector<int> subtree_generation_sizes(const PlanarTree& t, int v) {
    std::vector<int> sizes;
    std::vector<std::pair<int, int>> stack{{v, 0}};
    while (!stack.empty()) {
        auto [u, d] = stack.back();
        stack.pop_back();
        if (static_cast<int>(sizes.size()) <= d) sizes.resize(d + 1, 0);
        ++sizes[d];
        for (int c : t.kids[u]) stack.emplace_back(c, d + 1);
    }
    return sizes;
}

std::vector<int> depths_from_root(const PlanarTree& t) {
    std::vector<int> depth(t.size(), -1);
    std::vector<int> stack{t.root};
    depth[t.root] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : t.kids[u]) { depth[c] = depth[u] + 1; stack.push_back(c); }
    }
    return depth;
}

}  // namespace

TEST_SUITE("replant") {

TEST_CASE("single vertex is a fixed point") {
    PointedPlantedTree p;
    p.tree.root = 0;
    p.tree.kids = {{}};
    p.point = 0;
    CHECK(replant_transform(p) == p);
}

TEST_CASE("pointing at the root keeps the shape") {
    PointedPlantedTree p;
    p.tree.root = 0;
    p.tree.kids = {{1, 2}, {}, {3}, {}};
    p.point = 0;
    auto q = replant_transform(p);
    CHECK(q.tree.kids == p.tree.kids);
    CHECK(q.point == q.tree.root);
    CHECK(replant_transform(q) == p);
}

TEST_CASE("hand case: pointing at a path leaf reverses the path") {
    PointedPlantedTree p;  // root 0 -> 1 -> 2
    p.tree.root = 0;
    p.tree.kids = {{1}, {2}, {}};
    p.point = 2;
    auto q = replant_transform(p);
    CHECK(q.tree.root == 1);
    CHECK(q.tree.kids[1] == std::vector<int>{0});
    CHECK(q.tree.kids[0] == std::vector<int>{2});
    CHECK(q.tree.kids[2].empty());
    CHECK(q.point == 2);
    CHECK(replant_transform(q) == p);
}

TEST_CASE("involution and vertex-count preservation on all small pointed trees") {
    for (int n = 1; n <= 5; ++n) {
        for (const PlanarTree& t : enumerate_planar_trees(n)) {
            for (int v = 0; v < n; ++v) {
                PointedPlantedTree p{t, v};
                auto q = replant_transform(p);
                CHECK(q.tree.size() == n);
                CHECK(replant_transform(q) == p);
            }
        }
    }
}

TEST_CASE("involution on random conditioned trees up to n = 200") {
    Rng rng = make_rng(61);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 200);
        PlanarTree t = planar_from_rooted(sample_conditioned_tree(OffspringLaw::poisson1(), n, rng));
        std::uniform_int_distribution<int> pick(0, n - 1);
        PointedPlantedTree p{t, pick(rng)};
        CHECK(replant_transform(replant_transform(p)) == p);
    }
}

TEST_CASE("generation counts around the point") {
    // #{u in planted tree, u != v : d(u, v) = k} = Z_{k-1}(remainder) + Z_k(subtree)
    Rng rng = make_rng(62);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 40);
        PlanarTree t = planar_from_rooted(sample_conditioned_tree(OffspringLaw::geometric_half(), n, rng));
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int v = pick(rng);

        auto dist = planted_distances(t, v);
        auto below = subtree_generation_sizes(t, v);

        PointedPlantedTree q = replant_transform({t, v});
        // remainder = transformed tree minus the strict descendants of the
        // new point; Z_j counts its vertices at depth j from its root
        auto depth = depths_from_root(q.tree);
        std::vector<char> dropped(q.tree.size(), 0);
        {
            std::vector<int> stack{q.point};
            bool self = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (!self) dropped[u] = 1;
                for (int c : q.tree.kids[u]) stack.push_back(c);
                self = false;
            }
        }
        std::vector<int> z_rest;
        for (int u = 0; u < q.tree.size(); ++u) {
            if (dropped[u]) continue;
            if (static_cast<int>(z_rest.size()) <= depth[u]) z_rest.resize(depth[u] + 1, 0);
            ++z_rest[depth[u]];
        }

        const int max_k = n + 1;
        for (int k = 1; k <= max_k; ++k) {
            int lhs = 0;
            for (int u = 0; u <= n; ++u)  // includes the materialized base, excludes v
                if (u != v && dist[u] == k) ++lhs;
            int rhs = 0;
            if (k - 1 < static_cast<int>(z_rest.size())) rhs += z_rest[k - 1];
            if (k < static_cast<int>(below.size())) rhs += below[k];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gw-star enumeration: frozen small measures") {
    {
        auto atoms = enumerate_gw_star(OffspringLaw::binary(), 1);
        REQUIRE(atoms.size() == 1);
        CHECK(atoms[0].weight == Rational(1, 2));
    }
    {
        auto atoms = enumerate_gw_star(OffspringLaw::binary(), 3);
        REQUIRE(atoms.size() == 3);  // one shape (the cherry), three points
        Rational total(0);
        for (const auto& a : atoms) {
            CHECK(a.weight == Rational(1, 8));
            total += a.weight;
        }
        CHECK(total == Rational(3, 8));
    }
    CHECK_THROWS_AS(enumerate_gw_star(OffspringLaw::binary(), 9), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_gw_star(OffspringLaw::poisson1(), 3), std::invalid_argument);
}

TEST_CASE("total gw-star measure equals n * P(|t| = n), two routes") {
    for (int n : {1, 2, 3, 4}) {
        auto law = OffspringLaw::geometric_half();
        Rational total(0);
        for (const auto& atom : enumerate_gw_star(law, n)) total += atom.weight;
        Rational p_n(0);
        for (const PlanarTree& t : enumerate_planar_trees(n)) p_n += gw_probability(law, t);
        CHECK(total == Rational(n) * p_n);
    }
}

TEST_CASE("exact pushforward invariance under the transform") {
    struct Cell { OffspringLaw law; int n; };
    std::vector<Cell> cells;
    for (int n : {1, 3, 5}) cells.push_back({OffspringLaw::binary(), n});
    for (int n : {1, 2, 3, 4}) cells.push_back({OffspringLaw::geometric_half(), n});

    for (const auto& cell : cells) {
        std::map<Canonical, Rational> original, pushed;
        for (const auto& atom : enumerate_gw_star(cell.law, cell.n)) {
            PointedPlantedTree p{atom.tree, atom.point};
            auto add = [](std::map<Canonical, Rational>& m, const Canonical& key, Rational w) {
                auto it = m.find(key);
                if (it == m.end())
                    m.emplace(key, w);
                else
                    it->second += w;
            };
            add(original, canonical(p), atom.weight);
            add(pushed, canonical(replant_transform(p)), atom.weight);
        }
        CHECK(original == pushed);
    }
}

TEST_CASE("csv dump") {
    std::ostringstream os;
    write_gw_star_csv(os, enumerate_gw_star(OffspringLaw::binary(), 3));
    CHECK(os.str() ==
          "tree_code,point,probability_num,probability_den\n"
          "2-0-0,1,1,8\n"
          "2-0-0,2,1,8\n"
          "2-0-0,3,1,8\n");
}

}  // TEST_SUITE
