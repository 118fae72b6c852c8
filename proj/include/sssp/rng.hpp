#pragma once

#include <cstdint>
#include <random>

namespace sssp {

/// Seeded random stream with bounded-draw helpers whose outputs depend only
/// on the mt19937_64 word sequence, so generated graphs are reproducible
/// across standard libraries (std::uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, bound). Lemire multiply-shift with rejection; unbiased.
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::uint64_t int_in(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform real in [lo, hi).
    double real_in(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 gen_;
};

} // namespace sssp
