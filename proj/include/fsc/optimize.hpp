#pragma once

#include "fsc/instance.hpp"

namespace fsc {

/// Disjoint ascending intervals inside the last row's residue window [0, a_n)
/// that stand in for the last two rows: their projection modulo a_{n-1}
/// equals the residues the two rows admit jointly, and each member is the
/// smallest element of its residue class modulo a_{n-1} within the last row's
/// projection. Never more than six pieces.
struct AggregationResult {
    std::vector<Interval> pieces;
};

/// Appends a measuring row (capacity 2*a_n, remainder [0, beta]) that is
/// satisfied exactly by solutions with s <= beta, for 0 <= beta <= a_n.
/// Requires a nonempty harmonic instance.
NormalizedInstance make_beta_instance(const NormalizedInstance& inst, const Int& beta);

/// Smallest feasible s (within the s window), found by binary search on the
/// measuring bound with one feasibility sweep per probe.
std::optional<Int> min_s_binary(const NormalizedInstance& inst);

/// Folds the last two rows into minimal-representative pieces. Requires a
/// harmonic instance with at least two rows.
AggregationResult aggregate_last_two(const NormalizedInstance& inst);

/// Smallest feasible s via repeated aggregation: replace the last two rows by
/// their pieces, probe the pieces in ascending order with the feasibility
/// sweep, and descend into the first feasible one. Agrees with min_s_binary
/// on every input and is strongly polynomial.
std::optional<Int> min_s_aggregate(const NormalizedInstance& inst);

/// Largest feasible s in [0, a_n) intersected with the s window, by the
/// mirrored binary search (a floor row [beta, a_n-1] instead of the measuring
/// row).
std::optional<Int> max_s(const NormalizedInstance& inst);

}  // namespace fsc
