#pragma once

#include <cstdint>
#include <random>

namespace lop {

/// Seeded RNG with fully specified mappings. std::mt19937_64's bit stream is
/// pinned by the standard; the distribution helpers below avoid the
/// implementation-defined std::uniform_*_distribution mappings so that
/// identical seeds reproduce identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [0, bound) by rejection on a power-of-two mask.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t v = engine_() & mask;
            if (v < bound) return v;
        }
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(T first, T last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = below(i);
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace lop
