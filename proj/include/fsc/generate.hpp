#pragma once

#include <cstdint>

#include "fsc/instance.hpp"

namespace fsc {

/// splitmix64: state advances by 0x9E3779B97F4A7C15, output is the finalizer
/// with multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. Chosen so that
/// generated instances reproduce bit-for-bit in any implementation.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// Draw in [0, bound) for bound >= 1: concatenate 64-bit outputs
/// (most-significant first) until their bit length exceeds bound's by at
/// least 64, then reduce modulo bound.
Int rand_below(SplitMix64& gen, const Int& bound);

/// Seeded harmonic instance: capacity 1 + draw(max_ratio) grown by per-row
/// ratios 1 + draw(max_ratio); remainder widths 1 + draw(capacity - 1)
/// (width 1 for capacity 1, which normalization drops as redundant). With
/// plant, a target s* below the top capacity is drawn first and every
/// remainder range is placed to contain a point congruent to it, so the
/// instance is feasible with optimum at most s*. Draw order: ratios, then
/// s* when planting, then per row width followed by placement.
FscInstance gen_random_harmonic(int n, int max_ratio, std::uint64_t seed, bool plant);

}  // namespace fsc
