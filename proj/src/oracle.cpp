#include "fsc/oracle.hpp"

namespace fsc {

namespace {

bool raw_guess_ok(const std::vector<Constraint>& rows, const Int& s) {
    for (const Constraint& row : rows) {
        if (row.capacity == 0) {
            if (!row.remainder.contains(s)) {
                return false;
            }
            continue;
        }
        Int cap = row.capacity < 0 ? Int(-row.capacity) : row.capacity;
        if (ceil_div(row.remainder.lo - s, cap) > floor_div(row.remainder.hi - s, cap)) {
            return false;
        }
    }
    return true;
}

struct Window {
    Int lo;
    std::optional<Int> hi;
    Int period;
    bool empty = false;
};

Window effective_window(const FscInstance& inst, const Int& limit) {
    if (limit < 1) {
        throw std::invalid_argument("enumeration limit must be >= 1");
    }
    Window w;
    w.lo = 0;
    w.period = 1;
    if (inst.s_domain) {
        if (inst.s_domain->lo < 0) {
            throw std::invalid_argument("s domain must be nonnegative");
        }
        w.lo = inst.s_domain->lo;
        w.hi = inst.s_domain->hi;
    }
    for (const Constraint& row : inst.constraints) {
        if (row.capacity == 0) {
            w.lo = std::max(w.lo, row.remainder.lo);
            if (!w.hi || *w.hi > row.remainder.hi) {
                w.hi = row.remainder.hi;
            }
        } else {
            Int cap = row.capacity < 0 ? Int(-row.capacity) : row.capacity;
            w.period = lcm(w.period, cap);
        }
    }
    if (w.period > limit) {
        throw resource_limit_error("capacity lcm " + w.period.get_str() +
                                   " exceeds enumeration limit " + limit.get_str());
    }
    w.empty = w.hi && *w.hi < w.lo;
    return w;
}

}  // namespace

void DdaInstance::validate() const {
    if (N < 1) {
        throw std::invalid_argument("candidate count N must be >= 1");
    }
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("eps must lie strictly between 0 and 1");
    }
    for (const Rat& a : alphas) {
        if (a < 0) {
            throw std::invalid_argument("alphas must be nonnegative");
        }
    }
}

FscInstance dda_to_bms(const DdaInstance& d) {
    d.validate();
    Int lambda = 1;
    for (const Rat& a : d.alphas) {
        if (a.get_num() == 0) {
            throw std::invalid_argument("zero alpha makes the encoding degenerate");
        }
        lambda *= a.get_num();
    }
    FscInstance inst;
    inst.constraints.reserve(d.alphas.size() + 2);
    for (const Rat& a : d.alphas) {
        // lambda/alpha = (lambda/numerator) * denominator, an integer.
        Int cap = div_exact(lambda, Int(a.get_num())) * a.get_den();
        Int upper = floor_div(cap * d.eps.get_num(), Int(d.eps.get_den()));
        inst.constraints.push_back(Constraint{std::move(cap), Interval(0, std::move(upper))});
    }
    inst.constraints.push_back(Constraint{0, Interval(lambda, lambda * d.N)});
    inst.constraints.push_back(Constraint{lambda, Interval(0, 0)});
    return inst;
}

std::optional<Int> oracle_min_s(const FscInstance& inst, const Int& limit) {
    Window w = effective_window(inst, limit);
    if (w.empty) {
        return std::nullopt;
    }
    Int end = w.lo + w.period - 1;
    if (w.hi && *w.hi < end) {
        end = *w.hi;
    }
    for (Int s = w.lo; s <= end; ++s) {
        if (raw_guess_ok(inst.constraints, s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<Int> oracle_max_s(const FscInstance& inst, const Int& limit) {
    Window w = effective_window(inst, limit);
    if (w.empty) {
        return std::nullopt;
    }
    Int end = w.period - 1;
    if (w.hi && *w.hi < end) {
        end = *w.hi;
    }
    for (Int s = end; s >= w.lo; --s) {
        if (raw_guess_ok(inst.constraints, s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<Int> oracle_dda(const DdaInstance& d) {
    d.validate();
    for (Int q = 1; q <= d.N; ++q) {
        bool ok = true;
        for (const Rat& a : d.alphas) {
            Rat scaled = Rat(q) * a;
            Rat frac = scaled - Rat(floor_div(Int(scaled.get_num()), Int(scaled.get_den())));
            if (frac > d.eps) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return q;
        }
    }
    return std::nullopt;
}

bool reduction_roundtrip(const DdaInstance& d, const Int& limit) {
    auto encoded = oracle_min_s(dda_to_bms(d), limit);
    auto direct = oracle_dda(d);
    return encoded.has_value() == direct.has_value();
}

}  // namespace fsc
