#include "fsc/mixing.hpp"

namespace fsc {

Solution mixing_min_s(const std::vector<Int>& capacities, const std::vector<Int>& lower) {
    if (capacities.size() != lower.size()) {
        throw std::invalid_argument("capacity and lower-bound lists differ in length");
    }
    Solution sol;
    sol.s = 0;
    for (std::size_t i = 0; i < capacities.size(); ++i) {
        if (capacities[i] == 0 && lower[i] > sol.s) {
            sol.s = lower[i];
        }
    }
    sol.x.assign(capacities.size(), Int(0));
    for (std::size_t i = 0; i < capacities.size(); ++i) {
        if (sol.s >= lower[i]) {
            continue;  // multiplier 0 already suffices
        }
        if (capacities[i] > 0) {
            sol.x[i] = ceil_div(lower[i] - sol.s, capacities[i]);
        } else {
            sol.x[i] = floor_div(lower[i] - sol.s, capacities[i]);
        }
    }
    return sol;
}

}  // namespace fsc
