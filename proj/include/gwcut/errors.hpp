#pragma once

#include <stdexcept>
#include <string>

namespace gwcut {

// Offspring-count rejection never hit the target sum within the attempt cap.
struct SamplingError : std::runtime_error {
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// A mark sequence ran out before the fragmentation stop condition was met.
// Callers recover by extending the mark horizon.
struct HorizonError : std::runtime_error {
    explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwcut
