#pragma once

#include <cstdint>
#include <random>

namespace gwcut {

using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates per-replicate streams from one master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t replicate) {
    return mix_seed(master ^ mix_seed(replicate + 1));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t replicate = 0) {
    return Rng(replicate_seed(master, replicate));
}

}  // namespace gwcut
