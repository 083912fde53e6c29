#pragma once

#include <optional>
#include <vector>

#include "fsc/interval.hpp"

namespace fsc {

/// A subset of the residues [0, alpha) in canonical linear form: parts are
/// sorted ascending, pairwise disjoint and non-adjacent, and each part lies
/// inside [0, alpha-1]. The empty set is the empty part list. There is no
/// merging across the 0 / alpha-1 boundary; wrap-around semantics live in the
/// operations, not in the storage, so equality of canonical forms is set
/// equality.
class ModSet {
  public:
    ModSet() : modulus_(1) {}

    static ModSet empty(Int alpha);

    /// Projects each span modulo alpha and canonicalizes the union. Spans may
    /// lie anywhere in Z; a span at least alpha wide covers every residue.
    static ModSet from_spans(Int alpha, const std::vector<Interval>& spans);

    [[nodiscard]] const Int& modulus() const { return modulus_; }
    [[nodiscard]] const std::vector<Interval>& parts() const { return parts_; }
    [[nodiscard]] bool is_empty() const { return parts_.empty(); }

    /// Number of residues in the set.
    [[nodiscard]] Int count() const;

    /// Membership of x mod alpha (x may be any integer, including negative).
    [[nodiscard]] bool contains(const Int& x) const;

    /// Validates the canonical-form invariants; used by tests.
    [[nodiscard]] bool is_canonical() const;

    friend bool operator==(const ModSet& a, const ModSet& b) {
        return a.modulus_ == b.modulus_ && a.parts_ == b.parts_;
    }

  private:
    Int modulus_;
    std::vector<Interval> parts_;
};

/// {z mod alpha : z in v} as a canonical ModSet; at most two parts.
ModSet project(const Interval& v, const Int& alpha);

/// The span [v.lo mod alpha, w.hi mod alpha] when nonempty.
std::optional<Interval> phi(const Interval& v, const Interval& w, const Int& alpha);

/// The span [max of the two low residues, alpha + min of the two high
/// residues]. Always nonempty and symmetric in v and w; its projection is the
/// wrap-around portion shared by the two projections.
Interval psi(const Interval& v, const Interval& w, const Int& alpha);

/// Canonical representative span for v's projection: [0, alpha-1] if v covers
/// every residue, otherwise a span inside [0, 2*alpha) with the same
/// projection (wrapping projections become [lo', alpha + hi']).
Interval reduce_span(const Interval& v, const Int& alpha);

/// The spans whose projections union to v^[alpha] ∩ w^[alpha]. Never more
/// than two spans; the intersection of two projected intervals always
/// decomposes this way.
std::vector<Interval> intersect_pair_spans(const Interval& v, const Interval& w, const Int& alpha);

/// v^[alpha] ∩ w^[alpha] in canonical form.
ModSet intersect_pair(const Interval& v, const Interval& w, const Int& alpha);

/// Spans R with (∪R)^[alpha] = v^[alpha] ∩ (∪Q)^[alpha] and |R| <= |Q| + 1.
/// Empty Q yields the empty list.
std::vector<Interval> intersect_one_many(const Interval& v, const std::vector<Interval>& qs,
                                         const Int& alpha);

/// Disjoint pieces D inside A^[ab] (as integer intervals in [0, ab)) with
/// (∪D)^[a] = A^[a] ∩ B^[a]. Pieces are pairwise disjoint as integer sets and
/// their residue images modulo a are pairwise disjoint as well: each residue
/// class keeps only its smallest representative inside A^[ab]. Runs in a
/// constant number of interval operations even for huge b.
std::vector<Interval> lift_intersection(const Interval& A, const Interval& B, const Int& a,
                                        const Int& b);

/// Membership of x mod m.modulus() in m.
bool member(const Int& x, const ModSet& m);

}  // namespace fsc
