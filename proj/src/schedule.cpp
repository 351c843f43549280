#include "gwcut/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gwcut {

RemovalSchedule sample_schedule(int n, Rng& rng, ScheduleMode mode) {
    if (n < 1) throw std::invalid_argument("sample_schedule: n must be >= 1");
    RemovalSchedule sched;
    sched.order.resize(n);
    std::iota(sched.order.begin(), sched.order.end(), 1);

    if (mode == ScheduleMode::discrete) {
        // Fisher-Yates, spelled out for cross-version reproducibility
        for (int i = n - 1; i > 0; --i) {
            std::uniform_int_distribution<int> pick(0, i);
            std::swap(sched.order[i], sched.order[pick(rng)]);
        }
        return sched;
    }

    const double rate = 1.0 / std::sqrt(static_cast<double>(n));
    std::exponential_distribution<double> clock(rate);
    std::vector<double> clocks(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) clocks[i] = clock(rng);
    std::sort(sched.order.begin(), sched.order.end(), [&](int a, int b) {
        if (clocks[a] != clocks[b]) return clocks[a] < clocks[b];
        return a < b;
    });
    sched.times.resize(n);
    for (int r = 0; r < n; ++r) sched.times[r] = clocks[sched.order[r]];
    return sched;
}

}  // namespace gwcut
