#pragma once

#include "fsc/instance.hpp"

namespace fsc {

/// Rounded-down simultaneous approximation: does some Q in {1..N} bring every
/// Q*alpha_i within eps of its floor? All data exact rationals.
struct DdaInstance {
    std::vector<Rat> alphas;  // each >= 0
    Int N;                    // >= 1
    Rat eps;                  // strictly between 0 and 1

    void validate() const;

    friend bool operator==(const DdaInstance& a, const DdaInstance& b) {
        return a.alphas == b.alphas && a.N == b.N && a.eps == b.eps;
    }
};

/// Encodes the approximation problem as congruence rows over s = lambda * Q
/// with lambda the product of the alpha numerators: one row per alpha with
/// capacity lambda/alpha_i and remainder [0, floor((lambda/alpha_i) * eps)],
/// a zero-capacity row pinning s to [lambda, lambda*N], and a capacity-lambda
/// row forcing s to be a multiple of lambda. Throws when some alpha is zero
/// (lambda would vanish).
FscInstance dda_to_bms(const DdaInstance& d);

/// Ground-truth minimizer: enumerates guesses over one period of the
/// capacities, clipped to the effective s window (the domain intersected with
/// the zero-capacity rows). Works on raw instances of any shape, harmonic or
/// not. Refuses with resource_limit_error when the capacity lcm exceeds
/// `limit` instead of truncating the search.
std::optional<Int> oracle_min_s(const FscInstance& inst, const Int& limit);

/// Ground-truth maximizer over the fundamental window [0, lcm) intersected
/// with the effective s window; same limit discipline as oracle_min_s.
std::optional<Int> oracle_max_s(const FscInstance& inst, const Int& limit);

/// Least witness Q in {1..N}, by exact enumeration.
std::optional<Int> oracle_dda(const DdaInstance& d);

/// True when the encoded instance and the direct enumeration agree on
/// feasibility: the executable content of the encoding's correctness.
bool reduction_roundtrip(const DdaInstance& d, const Int& limit);

}  // namespace fsc
