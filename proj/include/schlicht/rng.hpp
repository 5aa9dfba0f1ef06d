#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace schlicht {

/// splitmix64 step; used to derive independent per-trial seeds from
/// (master seed, stream index) so batch results do not depend on how
/// trials are scheduled across threads.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// mt19937_64 with hand-rolled variate mappings. The engine's output is
/// pinned by the standard, and avoiding std distributions keeps artifacts
/// byte-identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * static_cast<double>(hi - lo + 1));
    }

    /// Box-Muller; draws exactly two uniforms per call.
    double gaussian(double sigma = 1.0) {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace schlicht
