#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "fsc/instance.hpp"
#include "fsc/oracle.hpp"
#include "fsc/response_time.hpp"

namespace fsc {

/// Unbounded mixing input: capacities plus lower bounds only.
struct MixingInput {
    std::vector<Int> capacities;
    std::vector<Int> lower;

    friend bool operator==(const MixingInput& a, const MixingInput& b) {
        return a.capacities == b.capacities && a.lower == b.lower;
    }
};

/// One of the four instance kinds carried by a file. Integers are decimal
/// strings and rationals "p/q" strings so arbitrary precision survives
/// parsing; plain JSON integers are accepted on input.
using InstancePayload = std::variant<FscInstance, MixingInput, TaskSet, DdaInstance>;

InstancePayload parse_instance(const nlohmann::json& doc);
InstancePayload load_instance(const std::string& path);
nlohmann::json serialize_instance(const InstancePayload& payload);

Int parse_int(const nlohmann::json& v);
Rat parse_rat(const nlohmann::json& v);

}  // namespace fsc
