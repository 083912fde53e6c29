#pragma once

#include <utility>

#include "fsc/instance.hpp"

namespace fsc {

/// A periodic task: processing time C, period T >= 1, release jitter J.
struct Task {
    Int C;
    Int T;
    Int J;

    friend bool operator==(const Task& a, const Task& b) {
        return a.C == b.C && a.T == b.T && a.J == b.J;
    }
};

/// Tasks ordered so that every period is an integer multiple of the next
/// (non-increasing, harmonic); the last task is the one under analysis.
/// Construction checks the period chain and that the first n-1 tasks leave
/// spare capacity (their exact utilization sum is below 1); the tail sums
/// c_i = C_{i+2} + ... + C_{n-1} (zero-based, excluding the analyzed task)
/// are precomputed.
class TaskSet {
  public:
    explicit TaskSet(std::vector<Task> tasks);

    [[nodiscard]] const std::vector<Task>& tasks() const { return tasks_; }
    [[nodiscard]] std::size_t size() const { return tasks_.size(); }
    [[nodiscard]] const Task& task(std::size_t i) const { return tasks_.at(i); }
    [[nodiscard]] const Int& tail(std::size_t i) const { return tails_.at(i); }

    /// Exact per-task utilization C_i / T_i.
    [[nodiscard]] Rat utilization(std::size_t i) const;

    friend bool operator==(const TaskSet& a, const TaskSet& b) { return a.tasks_ == b.tasks_; }

  private:
    std::vector<Task> tasks_;
    std::vector<Int> tails_;
};

/// Feasible job-count window for task j's multiplier given task i's
/// multiplier equals z (zero-based indices, i < j < n):
///   lo = (T_i/T_j) z + ceil((J_i - J_j - c_j) / T_j)
///   hi = (T_i/T_j) z + floor((J_i - J_j + c_i) / T_j)
/// Whenever (c_i + c_j) < T_j the window holds at most one integer.
std::pair<Int, Int> bounds_lu(const TaskSet& ts, std::size_t i, std::size_t j, const Int& z);

/// Walks the blocks of equal periods starting from x_1 = 1, forcing the value
/// at each block's last index; every step's window collapses to a point or
/// the system is infeasible. A final pass checks that the revealed x_n leaves
/// a feasible multiplier for every remaining task. Returns x_n, or nothing
/// when the deadline system has no solution. Linear in the task count.
std::optional<Int> reveal(const TaskSet& ts);

/// The same deadline system as a congruence instance over s = x_n: one row
/// per task i < n with capacity T_i/T_n, the first task's row folded into the
/// s window through x_1 = 1.
NormalizedInstance to_bms(const TaskSet& ts);

/// Expands a revealed x_n to a full multiplier vector (each remaining task
/// takes the lower end of its window). Throws if some window is empty, which
/// cannot happen for an x_n returned by reveal.
std::vector<Int> response_solution(const TaskSet& ts, const Int& x_n);

/// Checks the deadline system directly:
///   J_i + T_i x_i <= J_n + T_n x_n <= J_i + T_i x_i + c_i  for all i < n.
bool satisfies_response_system(const TaskSet& ts, const std::vector<Int>& x);

}  // namespace fsc
