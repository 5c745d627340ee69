#pragma once

#include <cstdint>

namespace vext {

// Size caps shared by the canonical-value layer and rational-function arithmetic.
// Alignment of cyclic periods and polynomial products can grow; the caps keep
// every operation's cost predictable.
struct Caps {
    int max_period = 64;
    int max_degree = 32;
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

// Knobs for the horizon-based approximate tier.
struct LazyConfig {
    std::int64_t horizon = 10000;   // largest sampled index H
    std::int64_t grid_start = 16;   // first index of the geometric grid
    int grid_ratio = 2;
    double tol = 1e-9;
};

inline const LazyConfig& default_lazy_config() {
    static const LazyConfig cfg{};
    return cfg;
}

}  // namespace vext
