#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace abc {

/// splitmix64 step; used to derive independent stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic random stream. All draws are hand-rolled from the raw 64-bit
/// engine output so sequences are reproducible bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi). Degenerate lo == hi yields lo.
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform double on the open interval (-1, 1).
    double symmetric_unit() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-52 - 1.0;
    }

    /// Uniform integer in [0, n). A single outcome consumes no draw, so
    /// one-dimensional and two-source degenerate cases stay stream-stable.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        if (n == 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform index in [0, n) \ {skip}. Exactly one draw. n must be >= 2.
    std::size_t index_excluding(std::size_t n, std::size_t skip) {
        const std::size_t x = static_cast<std::size_t>(below(n - 1));
        return x >= skip ? x + 1 : x;
    }

private:
    std::mt19937_64 engine_;
};

/// One stream per food source plus a shared stream for colony-level draws
/// (roulette selection). Source i's updates consume only source[i], so the
/// parallel employed phase produces identical results for any worker count.
struct RngSet {
    std::vector<Rng> source;
    Rng shared;

    static RngSet make(std::uint64_t seed, std::size_t n) {
        std::uint64_t state = seed;
        RngSet set{{}, Rng(splitmix64(state))};
        set.source.reserve(n);
        for (std::size_t i = 0; i < n; ++i) set.source.emplace_back(splitmix64(state));
        return set;
    }
};

}  // namespace abc
