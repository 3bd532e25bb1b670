#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gbmst {

// Portable 64-bit generator (splitmix64). The full algorithm is spelled out
// here so fixtures can be regenerated in any language:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// All arithmetic is modulo 2^64. uniform() maps the top 53 bits into [0,1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Rejection-free modulo is fine here; the
    // bias at 64 bits is far below anything observable in these sizes.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    // Standard normal pair via Box-Muller.
    void normal_pair(double& first, double& second) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        first = r * std::cos(theta);
        second = r * std::sin(theta);
    }

    double normal() {
        double a, b;
        normal_pair(a, b);
        return a;
    }

private:
    std::uint64_t state_;
};

}  // namespace gbmst
