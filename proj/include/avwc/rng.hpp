#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace avwc {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random stream. Every randomized routine takes an explicit
/// seed; per-trial work derives an independent substream from (seed, index)
/// so results do not depend on scheduling or thread count. Doubles are built
/// from raw 64-bit draws, never from distribution adapters, so identical
/// seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix64(seed) ^ mix64(0x5851f42d4c957f2dULL * (index + 1)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard exponential.
    double exponential() { return -std::log1p(-uniform()); }

    /// Uniform integer in [0, n).
    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    /// Uniform point on the probability simplex over k atoms
    /// (i.i.d. standard exponentials, normalized).
    std::vector<double> simplex(int k) {
        std::vector<double> v(static_cast<std::size_t>(k));
        double total = 0.0;
        for (double& e : v) {
            e = exponential();
            total += e;
        }
        for (double& e : v) e /= total;
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace avwc
