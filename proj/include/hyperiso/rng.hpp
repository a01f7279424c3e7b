#pragma once

#include <cstdint>
#include <random>

namespace hyperiso {

/// Seeded generator with hand-rolled bounded sampling so that streams are
/// reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform integer in [0, bound), bound >= 1.
    int below(int bound) {
        // rejection on the low bits; bias-free
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<int>(x % b);
    }

    /// Uniform integer in [lo, hi] inclusive.
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }

    /// True with probability p.
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace hyperiso
