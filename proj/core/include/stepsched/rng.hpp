#pragma once

#include <cstdint>
#include <initializer_list>

#include "stepsched/errors.hpp"
#include "stepsched/types.hpp"

namespace stepsched {

/// SplitMix64 stream (Steele, Lea & Flood 2014). Chosen over std::mt19937_64
/// because the standard distributions are not bit-reproducible across
/// standard libraries; this generator plus the rejection sampler below is
/// fully specified, so identical seeds give identical instances everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {lo, ..., hi}, inclusive. Unbiased: rejects draws
    /// below 2^64 mod range instead of taking a biased modulo.
    Time uniform_int(Time lo, Time hi) {
        if (lo > hi) throw InvalidConfig("uniform_int: empty range");
        const std::uint64_t range =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (range == 0) return lo + static_cast<Time>(next());  // full 64-bit span
        const std::uint64_t threshold = (0 - range) % range;
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return lo + static_cast<Time>(r % range);
    }

  private:
    std::uint64_t state_;
};

/// Deterministic seed derivation for suite members: fold each component into
/// the master seed through the SplitMix64 scrambler.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = master;
    for (std::uint64_t part : parts) {
        SplitMix64 g(s ^ part);
        s = g.next();
    }
    return s;
}

}  // namespace stepsched
