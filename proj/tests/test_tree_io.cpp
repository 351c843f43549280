#include <sstream>

#include "doctest.h"
#include "gwcut/gw_sampler.hpp"
#include "gwcut/line_breaking.hpp"
#include "gwcut/reduced_tree.hpp"
#include "gwcut/tree.hpp"

using namespace gwcut;

TEST_SUITE("tree_io") {

TEST_CASE("tree text round trip on random trees") {
    Rng rng = make_rng(71);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 100);
        RootedTree t = sample_conditioned_tree(OffspringLaw::geometric_half(), n, rng);
        std::stringstream ss;
        write_tree_text(ss, t);
        RootedTree back = read_tree_text(ss);
        CHECK(back.n == t.n);
        CHECK(back.parent == t.parent);
    }
}

TEST_CASE("tree validation rejects malformed tables") {
    CHECK_THROWS_AS(RootedTree::from_parent_table(2, {0, 0}), std::invalid_argument);  // two roots
    CHECK_THROWS_AS(RootedTree::from_parent_table(2, {2, 1}), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(RootedTree::from_parent_table(2, {0, 5}), std::invalid_argument);  // range
    CHECK_THROWS_AS(RootedTree::from_parent_table(0, {}), std::invalid_argument);
    std::stringstream bad("3\n0 1");
    CHECK_THROWS_AS(read_tree_text(bad), std::invalid_argument);
}

TEST_CASE("reduced tree serialization round trip") {
    Rng rng = make_rng(72);
    ReducedTree t = line_break_reduced_tree(7, rng);
    std::stringstream ss;
    t.write(ss);
    ReducedTree back = ReducedTree::read(ss);
    CHECK(back.node_count() == t.node_count());
    CHECK(back.parent == t.parent);
    for (int v = 1; v < t.node_count(); ++v)
        CHECK(back.length[v] == doctest::Approx(t.length[v]));
    CHECK(back.total_length() == doctest::Approx(t.total_length()));
}

}  // TEST_SUITE
