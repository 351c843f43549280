#include <sstream>

#include "doctest.h"
#include "gwcut/cut_stats.hpp"
#include "gwcut/cut_tree.hpp"
#include "gwcut/gw_sampler.hpp"

using namespace gwcut;

namespace {

PlantedTree path_tree(int n) {
    std::vector<int> parent(n);
    for (int v = 1; v <= n; ++v) parent[v - 1] = v - 1;
    return plant(RootedTree::from_parent_table(n, std::move(parent)));
}

RemovalSchedule fixed_order(std::vector<int> order) {
    RemovalSchedule s;
    s.order = std::move(order);
    return s;
}

}  // namespace

TEST_SUITE("cut_tree") {

TEST_CASE("single edge") {
    auto pt = path_tree(1);
    auto ct = build_cut_tree(pt, fixed_order({1}));
    CHECK(ct.node_count() == 2);
    CHECK(ct.depth[ct.leaf_node(1)] == 1);
    CHECK(ct.cut_distance(0, 1) == 1);
    CHECK(ct.cut_distance(0, 0) == 0);
}

TEST_CASE("two-edge path, both removal orders") {
    auto pt = path_tree(2);

    auto ct12 = build_cut_tree(pt, fixed_order({1, 2}));
    CHECK(ct12.depth[ct12.leaf_node(1)] == 1);
    CHECK(ct12.depth[ct12.leaf_node(2)] == 2);
    CHECK(ct12.cut_distance(1, 2) == 3);
    CHECK(ct12.cut_distance(0, 2) == 2);

    auto ct21 = build_cut_tree(pt, fixed_order({2, 1}));
    CHECK(ct21.depth[ct21.leaf_node(2)] == 1);
    CHECK(ct21.depth[ct21.leaf_node(1)] == 2);
    CHECK(ct21.cut_distance(1, 2) == 3);
}

TEST_CASE("schedule validation") {
    auto pt = path_tree(3);
    CHECK_THROWS_AS(build_cut_tree(pt, fixed_order({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(build_cut_tree(pt, fixed_order({1, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(build_cut_tree(pt, fixed_order({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("structure invariants on random instances") {
    Rng rng = make_rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 80);
        auto pt = plant(sample_conditioned_tree(OffspringLaw::poisson1(), n, rng));
        auto sched = sample_schedule(n, rng, ScheduleMode::discrete);
        auto ct = build_cut_tree(pt, sched);

        CHECK(ct.root == static_cast<std::uint32_t>(2 * n - 1));
        CHECK(ct.depth[ct.root] == 0);
        int leaves = 0;
        for (int id = 0; id < ct.node_count(); ++id)
            if (ct.is_leaf(id)) ++leaves;
        CHECK(leaves == n);
        for (int id = n; id < ct.node_count(); ++id) {
            const int kids = ct.child_offset[id + 1] - ct.child_offset[id];
            CHECK(kids >= 1);
            CHECK(kids <= 3);
        }
    }
}

TEST_CASE("cut-tree depths equal the forward simulation counter") {
    Rng rng = make_rng(12);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 60);
        auto pt = plant(sample_conditioned_tree(OffspringLaw::geometric_half(), n, rng));
        auto sched = sample_schedule(n, rng, ScheduleMode::discrete);
        auto ct = build_cut_tree(pt, sched);
        auto forward = forward_cut_depths(pt, sched);
        for (int i = 1; i <= n; ++i)
            CHECK(ct.depth[ct.leaf_node(i)] == forward[i - 1]);
    }
}

TEST_CASE("distance matrix hand case and invariants") {
    auto pt = path_tree(2);
    auto ct = build_cut_tree(pt, fixed_order({1, 2}));
    auto m = ct.distance_matrix({1, 2});
    CHECK(m[0][1] == 1);
    CHECK(m[0][2] == 2);
    CHECK(m[1][2] == 3);
    for (int i = 0; i < 3; ++i) CHECK(m[i][i] == 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m[i][j] == m[j][i]);

    auto empty = build_cut_tree(path_tree(1), fixed_order({1})).distance_matrix({});
    CHECK(empty.size() == 1);
    CHECK(empty[0][0] == 0);
}

TEST_CASE("sampled points form a metric") {
    Rng rng = make_rng(13);
    const int n = 120;
    auto pt = plant(sample_conditioned_tree(OffspringLaw::poisson1(), n, rng));
    auto ct = build_cut_tree(pt, sample_schedule(n, rng, ScheduleMode::discrete));
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(pick(rng));
    auto m = ct.distance_matrix(pts);
    const int sz = static_cast<int>(m.size());
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            CHECK(m[i][j] >= 0);
            for (int k = 0; k < sz; ++k) CHECK(m[i][j] <= m[i][k] + m[k][j]);
        }
}

TEST_CASE("dump format") {
    auto ct = build_cut_tree(path_tree(2), fixed_order({1, 2}));
    std::ostringstream os;
    ct.dump(os);
    CHECK(os.str() ==
          "0 leaf 3 1\n"
          "1 leaf 2 2\n"
          "2 block 3 1\n"
          "3 block -1 0\n");

    std::ostringstream mos;
    write_distance_matrix_csv(mos, ct.distance_matrix({1, 2}));
    CHECK(mos.str() ==
          "p0,p1,p2\n"
          "0,1,2\n"
          "1,0,3\n"
          "2,3,0\n");
}

}  // TEST_SUITE
