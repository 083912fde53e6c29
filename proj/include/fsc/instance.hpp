#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fsc/modset.hpp"

namespace fsc {

/// One congruence row: some remainder in `remainder` must be hit modulo
/// `capacity`, i.e. there is an integer x with remainder.lo <= s + capacity*x
/// <= remainder.hi. Capacity zero means s itself must lie in the remainder
/// range; negative capacities are allowed in raw instances.
struct Constraint {
    Int capacity;
    Interval remainder;

    friend bool operator==(const Constraint& a, const Constraint& b) {
        return a.capacity == b.capacity && a.remainder == b.remainder;
    }
};

/// A raw problem instance: find s >= 0 (inside s_domain when given) hitting
/// every row. s_domain, when present, must have a nonnegative lower bound.
struct FscInstance {
    std::vector<Constraint> constraints;
    std::optional<Interval> s_domain;

    friend bool operator==(const FscInstance& a, const FscInstance& b) {
        return a.constraints == b.constraints && a.s_domain == b.s_domain;
    }
};

/// Where a normalized row came from: index into the raw constraint list, or
/// nothing for rows synthesized by the solver (measuring rows, aggregated
/// rows). `flipped` records a capacity sign flip, which negates the reported
/// multiplier.
struct RowOrigin {
    std::optional<std::size_t> source;
    bool flipped = false;
};

/// Normal form: capacities >= 1 sorted ascending, every remainder range
/// strictly narrower than its capacity (so the multiplier is unique per
/// guess), zero-capacity rows and the given domain folded into s_domain,
/// redundant wide rows dropped.
struct NormalizedInstance {
    std::vector<Constraint> rows;
    std::vector<RowOrigin> origins;       // parallel to rows
    std::vector<Constraint> source_rows;  // the instance as handed in
    std::optional<Interval> s_domain;
    bool immediately_infeasible = false;  // the s window intersected to nothing
    bool harmonic = false;                // every capacity divides the next
};

/// A value s together with the per-row multipliers witnessing it, indexed by
/// the raw constraint order.
struct Solution {
    Int s;
    std::vector<Int> x;
};

struct FeasibilityResult {
    bool feasible = false;
    /// Canonical residue sets per sweep level, last constraint first.
    std::vector<ModSet> trace;
    /// Number of spans carried at each level (the trace entry may merge them).
    std::vector<std::size_t> span_counts;
};

NormalizedInstance normalize(const FscInstance& inst);

/// The unique witness for guess s, or nothing if s is infeasible or outside
/// the s window. Linear in the number of rows; does not require harmonicity.
std::optional<Solution> check_guess(const NormalizedInstance& inst, const Int& s);

/// Decides whether any s >= 0 (inside the s window) satisfies every row by
/// sweeping residue sets from the widest modulus down to the narrowest.
/// Requires a harmonic instance; throws naming the offending capacity pair
/// otherwise. A bounded s window is injected as one extra harmonic row before
/// the sweep.
FeasibilityResult feasible(const NormalizedInstance& inst);

/// lcm of the capacities (their largest one for harmonic instances); every
/// feasible instance has a solution below it. 1 for an empty row list.
Int solution_upper_bound(const NormalizedInstance& inst);

/// Checks a solution against the raw instance, row by row.
bool satisfies(const FscInstance& inst, const Solution& sol);

namespace detail {

/// Verdict-only sweep over rows[0..rows.size()) plus an optional extra row
/// that sorts after them. Levels, when non-null, receive the span list per
/// level (last row first).
bool sweep_feasible(std::span<const Constraint> rows, const Constraint* extra,
                    std::vector<std::vector<Interval>>* levels);

/// Encodes a bounded s window as a harmonic row on top of capacity `base`:
/// capacity 2*base*ceil((hi+1)/base), remainder the window itself.
Constraint domain_row(const Int& base, const Interval& dom);

/// Kept rows plus the domain row when a window is present.
std::vector<Constraint> rows_with_domain(const NormalizedInstance& inst);

void require_harmonic(const NormalizedInstance& inst);

}  // namespace detail

}  // namespace fsc
