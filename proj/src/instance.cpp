#include "fsc/instance.hpp"

#include <algorithm>
#include <numeric>

namespace fsc {

namespace detail {

void require_harmonic(const NormalizedInstance& inst) {
    if (inst.harmonic) {
        return;
    }
    for (std::size_t i = 0; i + 1 < inst.rows.size(); ++i) {
        if (mod_floor(inst.rows[i + 1].capacity, inst.rows[i].capacity) != 0) {
            throw std::invalid_argument(
                "instance is not harmonic: capacity " + inst.rows[i].capacity.get_str() +
                " does not divide capacity " + inst.rows[i + 1].capacity.get_str());
        }
    }
    throw std::invalid_argument("instance is not harmonic");
}

Constraint domain_row(const Int& base, const Interval& dom) {
    Int cap = 2 * base * ceil_div(dom.hi + 1, base);
    return Constraint{std::move(cap), dom};
}

std::vector<Constraint> rows_with_domain(const NormalizedInstance& inst) {
    std::vector<Constraint> rows = inst.rows;
    if (inst.s_domain) {
        Int base = rows.empty() ? Int(1) : rows.back().capacity;
        rows.push_back(domain_row(base, *inst.s_domain));
    }
    return rows;
}

bool sweep_feasible(std::span<const Constraint> rows, const Constraint* extra,
                    std::vector<std::vector<Interval>>* levels) {
    const std::size_t m = rows.size() + (extra != nullptr ? 1 : 0);
    if (m == 0) {
        return true;
    }
    auto row_at = [&](std::size_t i) -> const Constraint& {
        return i < rows.size() ? rows[i] : *extra;
    };
    const Constraint& last = row_at(m - 1);
    std::vector<Interval> q{reduce_span(last.remainder, last.capacity)};
    if (levels != nullptr) {
        levels->push_back(q);
    }
    for (std::size_t i = m - 1; i-- > 0;) {
        const Constraint& row = row_at(i);
        q = intersect_one_many(row.remainder, q, row.capacity);
        if (levels != nullptr) {
            levels->push_back(q);
        }
        if (q.empty()) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

NormalizedInstance normalize(const FscInstance& inst) {
    NormalizedInstance out;
    out.source_rows = inst.constraints;

    Int win_lo = 0;
    std::optional<Int> win_hi;
    if (inst.s_domain) {
        if (inst.s_domain->lo < 0) {
            throw std::invalid_argument("s domain must be nonnegative");
        }
        win_lo = inst.s_domain->lo;
        win_hi = inst.s_domain->hi;
    }

    std::vector<Constraint> kept;
    std::vector<RowOrigin> origins;
    for (std::size_t j = 0; j < inst.constraints.size(); ++j) {
        const Constraint& row = inst.constraints[j];
        if (row.capacity == 0) {
            // s itself must lie in the remainder range.
            win_lo = std::max(win_lo, row.remainder.lo);
            if (!win_hi || *win_hi > row.remainder.hi) {
                win_hi = row.remainder.hi;
            }
            continue;
        }
        const bool flipped = row.capacity < 0;
        Int cap = flipped ? Int(-row.capacity) : row.capacity;
        if (row.remainder.width() >= cap) {
            continue;  // some multiple always lands inside: row is redundant
        }
        kept.push_back(Constraint{std::move(cap), row.remainder});
        origins.push_back(RowOrigin{j, flipped});
    }

    std::vector<std::size_t> order(kept.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return kept[x].capacity < kept[y].capacity;
    });
    out.rows.reserve(kept.size());
    out.origins.reserve(kept.size());
    for (std::size_t idx : order) {
        out.rows.push_back(std::move(kept[idx]));
        out.origins.push_back(origins[idx]);
    }

    out.harmonic = true;
    for (std::size_t i = 0; i + 1 < out.rows.size(); ++i) {
        if (mod_floor(out.rows[i + 1].capacity, out.rows[i].capacity) != 0) {
            out.harmonic = false;
            break;
        }
    }

    if (win_hi) {
        if (*win_hi < win_lo) {
            out.immediately_infeasible = true;
        } else {
            out.s_domain = Interval(win_lo, *win_hi);
        }
    }
    return out;
}

std::optional<Solution> check_guess(const NormalizedInstance& inst, const Int& s) {
    if (s < 0 || inst.immediately_infeasible) {
        return std::nullopt;
    }
    if (inst.s_domain && !inst.s_domain->contains(s)) {
        return std::nullopt;
    }
    std::vector<Int> kept_x(inst.rows.size());
    for (std::size_t i = 0; i < inst.rows.size(); ++i) {
        const Constraint& row = inst.rows[i];
        Int lo = ceil_div(row.remainder.lo - s, row.capacity);
        if (lo != floor_div(row.remainder.hi - s, row.capacity)) {
            return std::nullopt;
        }
        kept_x[i] = std::move(lo);
    }
    Solution sol;
    sol.s = s;
    sol.x.assign(inst.source_rows.size(), Int(0));
    std::vector<bool> assigned(inst.source_rows.size(), false);
    for (std::size_t i = 0; i < inst.rows.size(); ++i) {
        if (!inst.origins[i].source) {
            continue;
        }
        std::size_t j = *inst.origins[i].source;
        sol.x[j] = inst.origins[i].flipped ? Int(-kept_x[i]) : kept_x[i];
        assigned[j] = true;
    }
    for (std::size_t j = 0; j < inst.source_rows.size(); ++j) {
        const Constraint& row = inst.source_rows[j];
        if (assigned[j] || row.capacity == 0) {
            continue;  // zero-capacity rows keep multiplier 0
        }
        // Dropped wide row: the smallest multiple of |capacity| at or above
        // remainder.lo - s works.
        Int cap = row.capacity < 0 ? Int(-row.capacity) : row.capacity;
        Int v = ceil_div(row.remainder.lo - s, cap);
        sol.x[j] = row.capacity < 0 ? Int(-v) : v;
    }
    return sol;
}

FeasibilityResult feasible(const NormalizedInstance& inst) {
    FeasibilityResult res;
    if (inst.immediately_infeasible) {
        return res;
    }
    detail::require_harmonic(inst);
    std::vector<Constraint> rows = detail::rows_with_domain(inst);
    if (rows.empty()) {
        res.feasible = true;
        return res;
    }
    std::vector<std::vector<Interval>> levels;
    res.feasible = detail::sweep_feasible(rows, nullptr, &levels);
    res.trace.reserve(levels.size());
    res.span_counts.reserve(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const Int& alpha = rows[rows.size() - 1 - k].capacity;
        res.trace.push_back(ModSet::from_spans(alpha, levels[k]));
        res.span_counts.push_back(levels[k].size());
    }
    return res;
}

Int solution_upper_bound(const NormalizedInstance& inst) {
    Int l = 1;
    for (const auto& row : inst.rows) {
        l = lcm(l, row.capacity);
    }
    return l;
}

bool satisfies(const FscInstance& inst, const Solution& sol) {
    if (sol.s < 0 || sol.x.size() != inst.constraints.size()) {
        return false;
    }
    if (inst.s_domain && !inst.s_domain->contains(sol.s)) {
        return false;
    }
    for (std::size_t j = 0; j < inst.constraints.size(); ++j) {
        const Constraint& row = inst.constraints[j];
        Int v = sol.s + row.capacity * sol.x[j];
        if (!row.remainder.contains(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace fsc
