#pragma once

#include "gwcut/reduced_tree.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

/*
 * Finite-dimensional marginal of the Brownian CRT spanned by its root and k
 * uniform leaves, by stick breaking at the points 0 < J_1 < J_2 < ... of an
 * inhomogeneous Poisson process with intensity t dt: stick m covers
 * (J_{m-1}, J_m]; stick 1 runs root to leaf 1; stick m >= 2 attaches at a
 * point uniform by length on the structure built so far, its far end
 * becoming leaf m. The result is binary with 2k-1 edges and total length
 * J_k ~ Chi(2k).
 */
ReducedTree line_break_reduced_tree(int k, Rng& rng);

}  // namespace gwcut
