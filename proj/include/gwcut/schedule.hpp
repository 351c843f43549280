#pragma once

#include <vector>

#include "gwcut/rng.hpp"

namespace gwcut {

enum class ScheduleMode { discrete, continuous };

/*
 * Edge-removal schedule. `order[r]` is the label removed at step r+1.
 * In continuous mode each edge carries an independent Exp(1/sqrt(n)) clock;
 * `times` lists the removal instants sorted ascending, aligned with `order`
 * (so the rank order of the clocks is a uniform permutation). Clock ties are
 * measure-zero; if one occurs in floating point it is broken by edge label.
 */
struct RemovalSchedule {
    std::vector<int> order;
    std::vector<double> times;

    bool continuous() const { return !times.empty(); }
    int n() const { return static_cast<int>(order.size()); }
};

RemovalSchedule sample_schedule(int n, Rng& rng, ScheduleMode mode);

}  // namespace gwcut
