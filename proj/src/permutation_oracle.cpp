#include "gwcut/permutation_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gwcut/cut_stats.hpp"
#include "gwcut/schedule.hpp"

namespace gwcut {

std::vector<Rational> permutation_oracle_all(const PlantedTree& planted) {
    const int n = planted.n_edges();
    if (n > 7) throw std::invalid_argument("permutation_oracle: n > 7 is not enumerable");

    RemovalSchedule sched;
    sched.order.resize(n);
    std::iota(sched.order.begin(), sched.order.end(), 1);

    long long factorial = 1;
    std::vector<long long> sums(n, 0);
    do {
        std::vector<long long> depths = forward_cut_depths(planted, sched);
        for (int i = 0; i < n; ++i) sums[i] += depths[i];
    } while (std::next_permutation(sched.order.begin(), sched.order.end()));
    for (int i = 2; i <= n; ++i) factorial *= i;

    std::vector<Rational> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.emplace_back(sums[i], factorial);
    return out;
}

Rational permutation_oracle(const PlantedTree& planted, int edge) {
    if (edge < 1 || edge > planted.n_edges())
        throw std::invalid_argument("permutation_oracle: bad edge label");
    return permutation_oracle_all(planted)[edge - 1];
}

}  // namespace gwcut
