#pragma once

#include <cstdint>

#include "gauge2d/vec.hpp"

namespace gauge2d::detail {

/// splitmix64: tiny deterministic generator, identical sequence on every
/// platform (std distributions are not guaranteed reproducible across
/// standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Random direction times a radius drawn uniformly from [r_lo, r_hi].
    Vec2 vec_in_annulus(double r_lo, double r_hi) {
        const double theta = uniform(0.0, 6.283185307179586476925287);
        const double r = uniform(r_lo, r_hi);
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    std::uint64_t state_;
};

}  // namespace gauge2d::detail
