#pragma once

#include <stdexcept>

#include "fsc/numeric.hpp"

namespace fsc {

/// A nonempty closed range of integers. Emptiness is never represented by an
/// Interval; operations that may come up empty return an optional or an empty
/// list instead.
struct Interval {
    Int lo;
    Int hi;

    Interval() : lo(0), hi(0) {}
    Interval(Int lo_, Int hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) {
            throw std::invalid_argument("interval bounds out of order: [" + lo.get_str() + ", " +
                                        hi.get_str() + "]");
        }
    }

    [[nodiscard]] Int width() const { return hi - lo + 1; }

    [[nodiscard]] bool contains(const Int& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

}  // namespace fsc
