#include "fsc/modset.hpp"

#include <algorithm>
#include <cstddef>

namespace fsc {

namespace {

void require_modulus(const Int& alpha) {
    if (alpha < 1) {
        throw std::invalid_argument("modulus must be >= 1, got " + alpha.get_str());
    }
}

/// Sorts spans (already inside [0, alpha)) by lo and merges overlapping or
/// adjacent ones into the canonical part list.
std::vector<Interval> merge_parts(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> out;
    for (auto& p : parts) {
        if (!out.empty() && p.lo <= out.back().hi + 1) {
            if (p.hi > out.back().hi) {
                out.back().hi = p.hi;
            }
        } else {
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Intersection of two canonical (sorted, disjoint) plain interval lists.
std::vector<Interval> intersect_lists(const std::vector<Interval>& xs,
                                      const std::vector<Interval>& ys) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        Int lo = std::max(xs[i].lo, ys[j].lo);
        Int hi = std::min(xs[i].hi, ys[j].hi);
        if (lo <= hi) {
            out.emplace_back(lo, hi);
        }
        if (xs[i].hi < ys[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

/// xs minus ys for canonical plain interval lists.
std::vector<Interval> subtract_lists(const std::vector<Interval>& xs,
                                     const std::vector<Interval>& ys) {
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const auto& x : xs) {
        Int cur = x.lo;
        while (j < ys.size() && ys[j].hi < cur) {
            ++j;
        }
        std::size_t k = j;
        while (k < ys.size() && ys[k].lo <= x.hi) {
            if (cur < ys[k].lo) {
                out.emplace_back(cur, ys[k].lo - 1);
            }
            cur = std::max(cur, Int(ys[k].hi + 1));
            ++k;
        }
        if (cur <= x.hi) {
            out.emplace_back(cur, x.hi);
        }
    }
    return out;
}

enum class PairKind {
    empty,
    single,      // one span covers the whole intersection
    two_plain,   // [lv', uw'] and [lw', uv'], both inside [0, alpha)
    two_wrap_hi, // [lv', uw'] plus the wrapping span [lw', alpha + uv']
    two_wrap_lo, // [lw', uv'] plus the wrapping span [lv', alpha + uw']
};

struct PairClass {
    PairKind kind = PairKind::empty;
    std::vector<Interval> spans;
};

/// Decomposes v^[alpha] ∩ w^[alpha] into at most two spans. The shape of the
/// result depends only on whether each projection wraps past alpha-1 and on
/// how the four residue endpoints interleave.
PairClass classify_pair(const Interval& v, const Interval& w, const Int& alpha) {
    PairClass r;
    if (v.width() >= alpha) {
        r.kind = PairKind::single;
        r.spans.push_back(reduce_span(w, alpha));
        return r;
    }
    if (w.width() >= alpha) {
        r.kind = PairKind::single;
        r.spans.push_back(reduce_span(v, alpha));
        return r;
    }
    Int lv = mod_floor(v.lo, alpha), uv = mod_floor(v.hi, alpha);
    Int lw = mod_floor(w.lo, alpha), uw = mod_floor(w.hi, alpha);
    const bool v_wraps = lv > uv;
    const bool w_wraps = lw > uw;

    if (!v_wraps && !w_wraps) {
        Int lo = std::max(lv, lw);
        Int hi = std::min(uv, uw);
        if (lo > hi) {
            return r;
        }
        r.kind = PairKind::single;
        r.spans.emplace_back(lo, hi);
        return r;
    }

    if (v_wraps && w_wraps) {
        // Both projections contain 0 and alpha-1, so the intersection is
        // never empty. It is a single wrapping span unless exactly one of the
        // two cross overlaps below is nonempty.
        const bool low_cross = uw >= lv;  // [lv, uw] nonempty
        const bool hi_cross = uv >= lw;   // [lw, uv] nonempty
        if (low_cross && !hi_cross) {
            r.kind = PairKind::two_wrap_hi;
            r.spans.emplace_back(lv, uw);
            r.spans.emplace_back(lw, alpha + uv);
        } else if (hi_cross && !low_cross) {
            r.kind = PairKind::two_wrap_lo;
            r.spans.emplace_back(lw, uv);
            r.spans.emplace_back(lv, alpha + uw);
        } else {
            // low_cross && hi_cross would force lv <= uw < lw <= uv < lv.
            r.kind = PairKind::single;
            r.spans.push_back(psi(v, w, alpha));
        }
        return r;
    }

    // Exactly one projection wraps; the other is a plain interval that may
    // meet its low part, its high part, or both.
    Int plo = v_wraps ? lw : lv, pup = v_wraps ? uw : uv;
    Int olo = v_wraps ? lv : lw, oup = v_wraps ? uv : uw;
    std::vector<Interval> pieces;
    if (plo <= oup) {
        pieces.emplace_back(plo, std::min(pup, oup));
    }
    if (olo <= pup) {
        pieces.emplace_back(std::max(plo, olo), pup);
    }
    if (pieces.empty()) {
        return r;
    }
    if (pieces.size() == 1) {
        r.kind = PairKind::single;
        r.spans = std::move(pieces);
        return r;
    }
    // When both pieces are nonempty they are exactly [lv', uw'] and
    // [lw', uv'], whichever side wraps.
    r.kind = PairKind::two_plain;
    r.spans.emplace_back(lv, uw);
    r.spans.emplace_back(lw, uv);
    return r;
}

}  // namespace

ModSet ModSet::empty(Int alpha) {
    require_modulus(alpha);
    ModSet m;
    m.modulus_ = std::move(alpha);
    return m;
}

ModSet ModSet::from_spans(Int alpha, const std::vector<Interval>& spans) {
    require_modulus(alpha);
    std::vector<Interval> parts;
    parts.reserve(spans.size() * 2);
    for (const auto& s : spans) {
        if (s.width() >= alpha) {
            parts.emplace_back(0, alpha - 1);
            continue;
        }
        Int lo = mod_floor(s.lo, alpha);
        Int hi = mod_floor(s.hi, alpha);
        if (lo <= hi) {
            parts.emplace_back(std::move(lo), std::move(hi));
        } else {
            parts.emplace_back(0, std::move(hi));
            parts.emplace_back(std::move(lo), alpha - 1);
        }
    }
    ModSet m;
    m.modulus_ = std::move(alpha);
    m.parts_ = merge_parts(std::move(parts));
    return m;
}

Int ModSet::count() const {
    Int n = 0;
    for (const auto& p : parts_) {
        n += p.width();
    }
    return n;
}

bool ModSet::contains(const Int& x) const {
    Int r = mod_floor(x, modulus_);
    auto it = std::partition_point(parts_.begin(), parts_.end(),
                                   [&](const Interval& p) { return p.hi < r; });
    return it != parts_.end() && it->lo <= r;
}

bool ModSet::is_canonical() const {
    if (modulus_ < 1) {
        return false;
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto& p = parts_[i];
        if (p.lo > p.hi || p.lo < 0 || p.hi >= modulus_) {
            return false;
        }
        if (i > 0 && parts_[i - 1].hi + 1 >= p.lo) {
            return false;
        }
    }
    return true;
}

ModSet project(const Interval& v, const Int& alpha) {
    require_modulus(alpha);
    return ModSet::from_spans(alpha, {v});
}

std::optional<Interval> phi(const Interval& v, const Interval& w, const Int& alpha) {
    require_modulus(alpha);
    Int lo = mod_floor(v.lo, alpha);
    Int hi = mod_floor(w.hi, alpha);
    if (lo > hi) {
        return std::nullopt;
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval psi(const Interval& v, const Interval& w, const Int& alpha) {
    require_modulus(alpha);
    Int lo = std::max(mod_floor(v.lo, alpha), mod_floor(w.lo, alpha));
    Int hi = alpha + std::min(mod_floor(v.hi, alpha), mod_floor(w.hi, alpha));
    return Interval(std::move(lo), std::move(hi));
}

Interval reduce_span(const Interval& v, const Int& alpha) {
    require_modulus(alpha);
    if (v.width() >= alpha) {
        return Interval(0, alpha - 1);
    }
    Int lo = mod_floor(v.lo, alpha);
    Int hi = mod_floor(v.hi, alpha);
    if (lo <= hi) {
        return Interval(std::move(lo), std::move(hi));
    }
    return Interval(std::move(lo), hi + alpha);
}

std::vector<Interval> intersect_pair_spans(const Interval& v, const Interval& w,
                                           const Int& alpha) {
    return classify_pair(v, w, alpha).spans;
}

ModSet intersect_pair(const Interval& v, const Interval& w, const Int& alpha) {
    return ModSet::from_spans(alpha, intersect_pair_spans(v, w, alpha));
}

std::vector<Interval> intersect_one_many(const Interval& v, const std::vector<Interval>& qs,
                                         const Int& alpha) {
    require_modulus(alpha);
    std::vector<Interval> out;
    if (qs.empty()) {
        return out;
    }
    if (v.width() >= alpha) {
        out.reserve(qs.size());
        for (const auto& w : qs) {
            out.push_back(reduce_span(w, alpha));
        }
        return out;
    }
    Int lv = mod_floor(v.lo, alpha);
    Int uv = mod_floor(v.hi, alpha);

    // Two-span intersections share one endpoint of v's projection each, so
    // all of them together reduce to one span anchored at lv plus one ending
    // at uv. A wrapping span on a side covers [lv, alpha) resp. [0, uv] and
    // subsumes the plain spans of that side.
    bool low_plain = false, low_wrap = false, hi_plain = false, hi_wrap = false;
    Int low_hi, low_wrap_hi, hi_lo, hi_wrap_lo;

    for (const auto& w : qs) {
        PairClass c = classify_pair(v, w, alpha);
        switch (c.kind) {
        case PairKind::empty:
            break;
        case PairKind::single:
            out.push_back(std::move(c.spans.front()));
            break;
        case PairKind::two_plain:
            if (!low_plain || c.spans[0].hi > low_hi) {
                low_hi = c.spans[0].hi;
            }
            low_plain = true;
            if (!hi_plain || c.spans[1].lo < hi_lo) {
                hi_lo = c.spans[1].lo;
            }
            hi_plain = true;
            break;
        case PairKind::two_wrap_hi:
            if (!low_plain || c.spans[0].hi > low_hi) {
                low_hi = c.spans[0].hi;
            }
            low_plain = true;
            if (!hi_wrap || c.spans[1].lo < hi_wrap_lo) {
                hi_wrap_lo = c.spans[1].lo;
            }
            hi_wrap = true;
            break;
        case PairKind::two_wrap_lo:
            if (!hi_plain || c.spans[0].lo < hi_lo) {
                hi_lo = c.spans[0].lo;
            }
            hi_plain = true;
            if (!low_wrap || c.spans[1].hi > low_wrap_hi) {
                low_wrap_hi = c.spans[1].hi;
            }
            low_wrap = true;
            break;
        }
        if (low_wrap && hi_wrap) {
            // The two wrapping shapes together cover all of v's projection.
            return {reduce_span(v, alpha)};
        }
    }

    if (low_wrap) {
        out.emplace_back(lv, std::move(low_wrap_hi));
    } else if (low_plain) {
        out.emplace_back(lv, std::move(low_hi));
    }
    if (hi_wrap) {
        out.emplace_back(std::move(hi_wrap_lo), alpha + uv);
    } else if (hi_plain) {
        out.emplace_back(std::move(hi_lo), uv);
    }
    return out;
}

std::vector<Interval> lift_intersection(const Interval& A, const Interval& B, const Int& a,
                                        const Int& b) {
    require_modulus(a);
    if (b < 1) {
        throw std::invalid_argument("window count must be >= 1, got " + b.get_str());
    }
    const Int ab = a * b;
    const std::vector<Interval> big = project(A, ab).parts();
    // Residues of B modulo a that still need their smallest representative.
    std::vector<Interval> remaining = project(B, a).parts();

    // Window i holds the integers [i*a, (i+1)*a). Only the first, second and
    // last window over each piece of A's projection can contribute: a middle
    // window is fully contained, claims every remaining residue and ends the
    // scan. This keeps the loop constant-size even for astronomically large b.
    std::vector<Int> windows;
    for (const auto& p : big) {
        Int first = floor_div(p.lo, a);
        Int last = floor_div(p.hi, a);
        windows.push_back(first);
        if (last > first) {
            windows.push_back(first + 1);
        }
        if (last > first + 1) {
            windows.push_back(last);
        }
    }
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());

    std::vector<Interval> out;
    for (const Int& i : windows) {
        if (remaining.empty()) {
            break;
        }
        const Int base = i * a;
        std::vector<Interval> translated;
        translated.reserve(remaining.size());
        for (const auto& r : remaining) {
            translated.emplace_back(base + r.lo, base + r.hi);
        }
        std::vector<Interval> claimed = intersect_lists(big, translated);
        if (claimed.empty()) {
            continue;
        }
        std::vector<Interval> claimed_residues;
        claimed_residues.reserve(claimed.size());
        for (const auto& c : claimed) {
            claimed_residues.emplace_back(c.lo - base, c.hi - base);
        }
        remaining = subtract_lists(remaining, claimed_residues);
        for (auto& c : claimed) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool member(const Int& x, const ModSet& m) { return m.contains(x); }

}  // namespace fsc
