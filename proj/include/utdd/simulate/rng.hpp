#pragma once

#include <cstdint>
#include <random>

namespace utdd::sim {

/// Portable seeded normal generator: std::mt19937_64 (output fully specified by the
/// standard) feeding a Box-Muller transform that consumes exactly two 53-bit uniforms
/// per normal variate and keeps no cached second value. Sequences are reproducible
/// across platforms up to libm rounding of log/cos.
class NormalRng {
public:
    explicit NormalRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 engine_;
};

} // namespace utdd::sim
