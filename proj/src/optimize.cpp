#include "fsc/optimize.hpp"

namespace fsc {

namespace {

std::vector<Interval> aggregate_rows(const Constraint& second_last, const Constraint& last) {
    Int windows = div_exact(last.capacity, second_last.capacity);
    return lift_intersection(last.remainder, second_last.remainder, second_last.capacity,
                             windows);
}

}  // namespace

NormalizedInstance make_beta_instance(const NormalizedInstance& inst, const Int& beta) {
    detail::require_harmonic(inst);
    if (inst.rows.empty()) {
        throw std::invalid_argument("measuring row needs at least one row to extend");
    }
    const Int& an = inst.rows.back().capacity;
    if (beta < 0 || beta > an) {
        throw std::invalid_argument("measuring bound " + beta.get_str() +
                                    " outside [0, " + an.get_str() + "]");
    }
    NormalizedInstance out = inst;
    out.rows.push_back(Constraint{2 * an, Interval(0, beta)});
    out.origins.push_back(RowOrigin{std::nullopt, false});
    return out;
}

std::optional<Int> min_s_binary(const NormalizedInstance& inst) {
    if (inst.immediately_infeasible) {
        return std::nullopt;
    }
    detail::require_harmonic(inst);
    std::vector<Constraint> rows = detail::rows_with_domain(inst);
    if (rows.empty()) {
        return Int(0);
    }
    const Int an = rows.back().capacity;
    auto feasible_below = [&](const Int& beta) {
        Constraint probe{2 * an, Interval(0, beta)};
        return detail::sweep_feasible(rows, &probe, nullptr);
    };
    if (!feasible_below(an)) {
        return std::nullopt;
    }
    Int lo = 0, hi = an;
    while (lo < hi) {
        Int mid = floor_div(lo + hi, 2);
        if (feasible_below(mid)) {
            hi = std::move(mid);
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

AggregationResult aggregate_last_two(const NormalizedInstance& inst) {
    detail::require_harmonic(inst);
    if (inst.rows.size() < 2) {
        throw std::invalid_argument("aggregation needs at least two rows");
    }
    return AggregationResult{
        aggregate_rows(inst.rows[inst.rows.size() - 2], inst.rows.back())};
}

std::optional<Int> min_s_aggregate(const NormalizedInstance& inst) {
    if (inst.immediately_infeasible) {
        return std::nullopt;
    }
    detail::require_harmonic(inst);
    std::vector<Constraint> rows = detail::rows_with_domain(inst);
    if (rows.empty()) {
        return Int(0);
    }
    while (rows.size() >= 2) {
        const Int an = rows.back().capacity;
        std::vector<Interval> pieces = aggregate_rows(rows[rows.size() - 2], rows.back());
        std::span<const Constraint> head(rows.data(), rows.size() - 2);
        bool descended = false;
        for (const Interval& piece : pieces) {
            Constraint replacement{an, piece};
            if (detail::sweep_feasible(head, &replacement, nullptr)) {
                rows.resize(rows.size() - 2);
                rows.push_back(std::move(replacement));
                descended = true;
                break;
            }
        }
        if (!descended) {
            return std::nullopt;
        }
    }
    const Constraint& row = rows.front();
    return project(row.remainder, row.capacity).parts().front().lo;
}

std::optional<Int> max_s(const NormalizedInstance& inst) {
    if (inst.immediately_infeasible) {
        return std::nullopt;
    }
    detail::require_harmonic(inst);
    if (inst.rows.empty()) {
        if (inst.s_domain) {
            return inst.s_domain->hi;
        }
        return Int(0);
    }
    std::vector<Constraint> rows = detail::rows_with_domain(inst);
    const Int an = inst.rows.back().capacity;
    const Int cap = 2 * rows.back().capacity;
    auto feasible_above = [&](const Int& beta) {
        Constraint probe{cap, Interval(beta, an - 1)};
        return detail::sweep_feasible(rows, &probe, nullptr);
    };
    if (!feasible_above(0)) {
        return std::nullopt;
    }
    Int lo = 0, hi = an - 1;
    while (lo < hi) {
        Int mid = floor_div(lo + hi + 1, 2);
        if (feasible_above(mid)) {
            lo = std::move(mid);
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace fsc
