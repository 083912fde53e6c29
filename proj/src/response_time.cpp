#include "fsc/response_time.hpp"

#include <algorithm>

namespace fsc {

TaskSet::TaskSet(std::vector<Task> tasks) : tasks_(std::move(tasks)) {
    if (tasks_.empty()) {
        throw std::invalid_argument("task set must not be empty");
    }
    const std::size_t n = tasks_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (tasks_[i].T < 1) {
            throw std::invalid_argument("task periods must be >= 1");
        }
        if (tasks_[i].C < 0 || tasks_[i].J < 0) {
            throw std::invalid_argument("processing times and jitters must be >= 0");
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (mod_floor(tasks_[i].T, tasks_[i + 1].T) != 0) {
            throw std::invalid_argument("periods are not harmonic: " + tasks_[i].T.get_str() +
                                        " is not a multiple of " + tasks_[i + 1].T.get_str());
        }
    }
    // Exact utilization bound for the first n-1 tasks, scaled by T_0 (every
    // period divides it).
    Int scaled = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        scaled += tasks_[i].C * div_exact(tasks_[0].T, tasks_[i].T);
    }
    if (scaled >= tasks_[0].T) {
        throw std::invalid_argument("the first n-1 tasks must have total utilization below 1");
    }
    tails_.assign(n, Int(0));
    for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;) {
        tails_[i] = tails_[i + 1] + tasks_[i + 1].C;
    }
}

Rat TaskSet::utilization(std::size_t i) const {
    Rat u(tasks_.at(i).C, tasks_.at(i).T);
    u.canonicalize();
    return u;
}

std::pair<Int, Int> bounds_lu(const TaskSet& ts, std::size_t i, std::size_t j, const Int& z) {
    if (!(i < j && j < ts.size())) {
        throw std::invalid_argument("bounds need indices i < j < n");
    }
    const Task& ti = ts.task(i);
    const Task& tj = ts.task(j);
    Int ratio = div_exact(ti.T, tj.T);
    Int lo = ratio * z + ceil_div(ti.J - tj.J - ts.tail(j), tj.T);
    Int hi = ratio * z + floor_div(ti.J - tj.J + ts.tail(i), tj.T);
    return {std::move(lo), std::move(hi)};
}

std::optional<Int> reveal(const TaskSet& ts) {
    const std::size_t n = ts.size();
    std::vector<Int> x(n);
    x[0] = 1;
    std::size_t k = 0;
    while (k + 1 < n) {
        const std::size_t i = k;
        // Last index of the block of periods equal to the next task's.
        k = i + 1;
        while (k + 1 < n && ts.task(k + 1).T == ts.task(i + 1).T) {
            ++k;
        }
        if (ts.tail(i) + ts.tail(k) >= ts.task(k).T) {
            // Ruled out by the utilization bound; a violation means the task
            // set invariants were broken after construction.
            throw std::logic_error("block step would admit more than one value");
        }
        auto [lo, hi] = bounds_lu(ts, i, k, x[i]);
        if (lo != hi) {
            return std::nullopt;
        }
        x[k] = std::move(lo);
    }
    const Int& xn = x[n - 1];
    const Task& last = ts.task(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Task& tj = ts.task(j);
        Int release = last.J - tj.J + last.T * xn;
        if (ceil_div(release - ts.tail(j), tj.T) > floor_div(release, tj.T)) {
            return std::nullopt;
        }
    }
    return xn;
}

NormalizedInstance to_bms(const TaskSet& ts) {
    const std::size_t n = ts.size();
    const Task& last = ts.task(n - 1);
    if (n == 1) {
        return normalize(FscInstance{{}, Interval(1, 1)});
    }
    // The first task pins the window for x_n through x_1 = 1; the remaining
    // tasks become congruence rows with capacity T_i / T_n.
    Int r0 = div_exact(ts.task(0).T, last.T);
    Int lo0 = ceil_div(ts.task(0).J - last.J, last.T) + r0;
    Int hi0 = floor_div(ts.task(0).J - last.J + ts.tail(0), last.T) + r0;
    if (lo0 < 0) {
        lo0 = 0;
    }
    bool empty = hi0 < lo0;
    std::vector<Constraint> rows;
    for (std::size_t i = 1; !empty && i + 1 < n; ++i) {
        const Task& ti = ts.task(i);
        Int cap = div_exact(ti.T, last.T);
        Int blo = ceil_div(ti.J - last.J, last.T);
        Int bhi = floor_div(ti.J - last.J + ts.tail(i), last.T);
        if (blo > bhi) {
            empty = true;
            break;
        }
        rows.push_back(Constraint{std::move(cap), Interval(std::move(blo), std::move(bhi))});
    }
    if (empty) {
        NormalizedInstance out;
        out.immediately_infeasible = true;
        out.harmonic = true;
        return out;
    }
    std::reverse(rows.begin(), rows.end());
    return normalize(FscInstance{std::move(rows), Interval(std::move(lo0), std::move(hi0))});
}

std::vector<Int> response_solution(const TaskSet& ts, const Int& x_n) {
    const std::size_t n = ts.size();
    const Task& last = ts.task(n - 1);
    std::vector<Int> x(n);
    x[n - 1] = x_n;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Task& tj = ts.task(j);
        Int release = last.J - tj.J + last.T * x_n;
        Int lo = ceil_div(release - ts.tail(j), tj.T);
        if (lo > floor_div(release, tj.T)) {
            throw std::invalid_argument("no feasible multiplier for task " + std::to_string(j) +
                                        " at the given job count");
        }
        x[j] = std::move(lo);
    }
    return x;
}

bool satisfies_response_system(const TaskSet& ts, const std::vector<Int>& x) {
    const std::size_t n = ts.size();
    if (x.size() != n) {
        return false;
    }
    const Task& last = ts.task(n - 1);
    Int finish = last.J + last.T * x[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Int v = ts.task(i).J + ts.task(i).T * x[i];
        if (!(v <= finish && finish <= v + ts.tail(i))) {
            return false;
        }
    }
    return true;
}

}  // namespace fsc
