#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace gwcut {

inline int default_thread_count() {
    if (const char* env = std::getenv("GWCUT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(rep) for rep in [0, reps). Replicates own independent streams
// seeded by index, so results are identical for any thread count as long as
// fn writes to replicate-indexed slots.
template <typename F>
void for_each_replicate(long long reps, int threads, F&& fn) {
    if (threads <= 1 || reps <= 1) {
        for (long long rep = 0; rep < reps; ++rep) fn(rep);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&]() {
        while (true) {
            const long long rep = next.fetch_add(1);
            if (rep >= reps) break;
            fn(rep);
        }
    };
    std::vector<std::thread> pool;
    const int count = static_cast<int>(std::min<long long>(threads, reps));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace gwcut
