#pragma once

#include <vector>

#include "gwcut/offspring.hpp"
#include "gwcut/rng.hpp"
#include "gwcut/tree.hpp"

namespace gwcut {

/*
 * Conditioned Galton-Watson sampling. The offspring counts of the n vertices,
 * read in breadth-first order, are i.i.d. nu conditioned on summing to n-1
 * and on the queue never emptying early; the cycle lemma turns any
 * sum-conditioned sequence into the unique valid rotation.
 *
 * Two ways to obtain a sum-conditioned sequence:
 *   rejection    draw n i.i.d. counts, retry until the sum is n-1
 *                (acceptance ~ span/(sigma*sqrt(2*pi*n)) per attempt);
 *   conditioned  draw the sequence directly from its conditional law
 *                (multinomial occupancy for poisson1, uniform composition
 *                for geometric_half, uniform support subset for binary).
 * Both produce the same distribution; `auto_` picks the direct route when
 * the law supports it and falls back to rejection for custom tables.
 */
enum class ConditioningMethod { auto_, conditioned, rejection };

struct SampleOptions {
    ConditioningMethod method = ConditioningMethod::auto_;
    long long rejection_cap = 1'000'000;
};

// Offspring counts summing to n-1, distributed as i.i.d. nu given the sum.
std::vector<int> sample_offspring_counts(const OffspringLaw& law, int n, Rng& rng,
                                         const SampleOptions& opts = {});

// First index (0-based) of the unique cyclic rotation whose Lukasiewicz path
// stays nonnegative before step n. Requires sum(counts) == n-1.
int cycle_rotation_start(const std::vector<int>& counts);

// Tree with BFS labels 1..n from a valid breadth-first offspring sequence.
RootedTree build_tree_bfs(const std::vector<int>& bfs_counts);

RootedTree sample_conditioned_tree(const OffspringLaw& law, int n, Rng& rng,
                                   const SampleOptions& opts = {});

}  // namespace gwcut
