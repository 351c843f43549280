#include "gwcut/gw_sampler.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "gwcut/errors.hpp"

namespace gwcut {

namespace {

// Multinomial occupancy: n-1 balls into n boxes, the conditional law of
// i.i.d. Poisson(1) counts given their sum.
std::vector<int> poisson_conditioned(int n, Rng& rng) {
    std::vector<int> counts(n, 0);
    std::uniform_int_distribution<int> box(0, n - 1);
    for (int ball = 0; ball < n - 1; ++ball) ++counts[box(rng)];
    return counts;
}

// Uniform weak composition of n-1 into n parts via stars and bars, the
// conditional law of i.i.d. Geometric(1/2) counts given their sum.
std::vector<int> geometric_conditioned(int n, Rng& rng) {
    std::vector<int> counts(n, 0);
    long long slots = 2LL * n - 2;  // n-1 stars + n-1 bars
    long long bars_left = n - 1;
    int part = 0;
    for (long long s = slots; s > 0; --s) {
        std::uniform_int_distribution<long long> pick(0, s - 1);
        if (pick(rng) < bars_left) {
            --bars_left;
            ++part;
        } else {
            ++counts[part];
        }
    }
    return counts;
}

// Uniform placement of the (n-1)/2 two-child slots, the conditional law of
// i.i.d. uniform{0,2} counts given their sum.
std::vector<int> binary_conditioned(int n, Rng& rng) {
    std::vector<int> counts(n, 0);
    int need = (n - 1) / 2;
    for (int i = 0; i < n && need > 0; ++i) {
        std::uniform_int_distribution<int> pick(0, n - 1 - i);
        if (pick(rng) < need) {
            counts[i] = 2;
            --need;
        }
    }
    return counts;
}

std::vector<int> rejection_conditioned(const OffspringLaw& law, int n, Rng& rng,
                                       long long cap) {
    const int target = n - 1;
    std::vector<int> counts(n);
    for (long long attempt = 0; attempt < cap; ++attempt) {
        int sum = 0;
        bool over = false;
        for (int i = 0; i < n; ++i) {
            counts[i] = law.sample(rng);
            sum += counts[i];
            if (sum > target) { over = true; break; }  // attempt already lost
        }
        if (!over && sum == target) return counts;
    }
    throw SamplingError("offspring rejection failed after " + std::to_string(cap) +
                        " attempts (law=" + law.name() + ", n=" + std::to_string(n) + ")");
}

}  // namespace

std::vector<int> sample_offspring_counts(const OffspringLaw& law, int n, Rng& rng,
                                         const SampleOptions& opts) {
    if (n < 1) throw std::invalid_argument("sample_offspring_counts: n must be >= 1");
    if ((n - 1) % law.support_gcd() != 0)
        throw std::invalid_argument("conditioning impossible: n-1 must be divisible by p (span of " +
                                    law.name() + " is p=" + std::to_string(law.support_gcd()) + ")");

    ConditioningMethod method = opts.method;
    if (method == ConditioningMethod::auto_)
        method = law.has_exact_conditional() ? ConditioningMethod::conditioned
                                             : ConditioningMethod::rejection;
    if (method == ConditioningMethod::conditioned) {
        switch (law.kind()) {
            case OffspringKind::poisson1: return poisson_conditioned(n, rng);
            case OffspringKind::geometric_half: return geometric_conditioned(n, rng);
            case OffspringKind::binary: return binary_conditioned(n, rng);
            case OffspringKind::custom:
                throw std::invalid_argument("no direct conditioned sampler for custom laws");
        }
    }
    return rejection_conditioned(law, n, rng, opts.rejection_cap);
}

int cycle_rotation_start(const std::vector<int>& counts) {
    const int n = static_cast<int>(counts.size());
    long long s = 0, min_s = 0;
    int argmin = -1;
    for (int j = 0; j < n; ++j) {
        s += counts[j] - 1;
        if (s < min_s) { min_s = s; argmin = j; }
    }
    if (s != -1) throw std::invalid_argument("cycle_rotation_start: counts must sum to n-1");
    // first prefix minimum sits at 1-based index argmin+1; rotation begins just after
    return (argmin + 1) % n;
}

RootedTree build_tree_bfs(const std::vector<int>& bfs_counts) {
    const int n = static_cast<int>(bfs_counts.size());
    std::vector<int> parent(n + 1, 0);
    int next_label = 2;
    for (int u = 1; u <= n; ++u) {
        for (int c = 0; c < bfs_counts[u - 1]; ++c) {
            if (next_label > n) throw std::invalid_argument("build_tree_bfs: invalid sequence");
            parent[next_label++] = u;
        }
    }
    if (next_label != n + 1) throw std::invalid_argument("build_tree_bfs: invalid sequence");
    return RootedTree::from_parent_table(n, std::move(parent));
}

RootedTree sample_conditioned_tree(const OffspringLaw& law, int n, Rng& rng,
                                   const SampleOptions& opts) {
    std::vector<int> counts = sample_offspring_counts(law, n, rng, opts);
    int start = cycle_rotation_start(counts);
    if (start != 0) {
        std::vector<int> rotated(n);
        for (int i = 0; i < n; ++i) rotated[i] = counts[(start + i) % n];
        counts.swap(rotated);
    }
    return build_tree_bfs(counts);
}

}  // namespace gwcut
