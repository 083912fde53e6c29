#pragma once

#include "fsc/instance.hpp"

namespace fsc {

/// Minimizes s >= 0 subject to s + capacity[i]*x[i] >= lower[i] with free
/// integer multipliers. The optimum is max(0, lower bounds of zero-capacity
/// rows); every other row is absorbed by its multiplier. One pass, any
/// capacities (zero and negative included). Zero-capacity rows report
/// multiplier 0.
Solution mixing_min_s(const std::vector<Int>& capacities, const std::vector<Int>& lower);

}  // namespace fsc
