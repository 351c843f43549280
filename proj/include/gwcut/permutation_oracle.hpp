#pragma once

#include <vector>

#include "gwcut/rational.hpp"
#include "gwcut/tree.hpp"

namespace gwcut {

// Average of delta(0,i) over all n! removal orders, exact, by running the
// forward deletion definition on each permutation. Capped at n <= 7.
Rational permutation_oracle(const PlantedTree& planted, int edge);

// Same, all edges in one sweep over the permutations.
std::vector<Rational> permutation_oracle_all(const PlantedTree& planted);

}  // namespace gwcut
