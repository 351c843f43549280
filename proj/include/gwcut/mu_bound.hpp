#pragma once

#include <vector>

#include "gwcut/offspring.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

struct MuBoundPoint {
    double t = 0.0;
    double estimate = 0.0;    // Monte Carlo E(mu_{n,xi}(t))
    double bound_unit = 0.0;  // exp(-t/sqrt n) / (n (1 - exp(-t/sqrt n))^2)
};

struct MuBoundReport {
    int n = 0;
    long long reps = 0;
    std::vector<MuBoundPoint> points;
    double fitted_c = 0.0;  // smallest C with estimate <= C * bound_unit across the grid
    bool finite_c = true;   // false flags fitted_c > 1e3, which would indicate a bug
};

/*
 * Diagnostic for the uniform component-size bound: estimates the expected
 * normalized size of the component holding a uniform random edge after each
 * edge is dropped independently with probability 1 - exp(-t/sqrt n). The
 * per-replicate deletion uniforms are shared across the t grid, so the
 * estimates are monotone in t pathwise.
 */
MuBoundReport mu_bound_check(const OffspringLaw& law, int n, const std::vector<double>& t_grid,
                             long long reps, Rng& rng);

}  // namespace gwcut
