#include "gwcut/mu_bound.hpp"

#include <cmath>
#include <stdexcept>

#include "gwcut/disjoint_set.hpp"
#include "gwcut/gw_sampler.hpp"

namespace gwcut {

MuBoundReport mu_bound_check(const OffspringLaw& law, int n, const std::vector<double>& t_grid,
                             long long reps, Rng& rng) {
    if (reps < 1) throw std::invalid_argument("mu_bound_check: reps must be >= 1");
    for (double t : t_grid)
        if (!(t > 0.0)) throw std::invalid_argument("mu_bound_check: t values must be > 0");

    const double sqrt_n = std::sqrt(static_cast<double>(n));
    MuBoundReport report;
    report.n = n;
    report.reps = reps;
    report.points.resize(t_grid.size());
    for (std::size_t g = 0; g < t_grid.size(); ++g) {
        const double t = t_grid[g];
        const double q = std::exp(-t / sqrt_n);  // per-edge survival
        report.points[g].t = t;
        report.points[g].bound_unit = q / (n * (1.0 - q) * (1.0 - q));
    }

    std::vector<double> keep_threshold(t_grid.size());
    for (std::size_t g = 0; g < t_grid.size(); ++g)
        keep_threshold[g] = std::exp(-t_grid[g] / sqrt_n);

    std::vector<double> u(n + 1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long rep = 0; rep < reps; ++rep) {
        RootedTree tree = sample_conditioned_tree(law, n, rng);
        PlantedTree planted = plant(std::move(tree));
        std::uniform_int_distribution<int> edge_pick(1, n);
        const int xi = edge_pick(rng);
        for (int e = 1; e <= n; ++e) u[e] = unif(rng);

        for (std::size_t g = 0; g < t_grid.size(); ++g) {
            const double thr = keep_threshold[g];
            if (u[xi] >= thr) continue;  // xi itself removed: mu = 0
            DisjointSet dsu(n + 1);
            std::vector<std::int64_t> edges_in(n + 1, 0);
            for (int e = 1; e <= n; ++e) {
                if (u[e] >= thr) continue;
                const int ra = dsu.find(e);
                const int rb = dsu.find(planted.lower_endpoint(e));
                std::int64_t cnt = edges_in[ra] + (ra == rb ? 0 : edges_in[rb]) + 1;
                edges_in[dsu.unite(e, planted.lower_endpoint(e))] = cnt;
            }
            report.points[g].estimate +=
                static_cast<double>(edges_in[dsu.find(xi)]) / static_cast<double>(n);
        }
    }

    double fitted = 0.0;
    for (auto& p : report.points) {
        p.estimate /= static_cast<double>(reps);
        fitted = std::max(fitted, p.estimate / p.bound_unit);
    }
    report.fitted_c = fitted;
    report.finite_c = fitted <= 1e3;
    return report;
}

}  // namespace gwcut
