#include "fsc/io.hpp"

#include <fstream>

namespace fsc {

using nlohmann::json;

namespace {

bool decimal_string(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

Int int_from_string(const std::string& s) {
    if (!decimal_string(s)) {
        throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    }
    return Int(s);
}

std::vector<Int> parse_int_array(const json& v, const char* what) {
    if (!v.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array");
    }
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.push_back(parse_int(e));
    }
    return out;
}

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

FscInstance parse_fsc(const json& doc, bool with_upper) {
    auto caps = parse_int_array(field(doc, "capacities"), "capacities");
    auto lower = parse_int_array(field(doc, "lower"), "lower");
    std::vector<Int> upper;
    if (with_upper) {
        upper = parse_int_array(field(doc, "upper"), "upper");
    }
    if (lower.size() != caps.size() || (with_upper && upper.size() != caps.size())) {
        throw std::invalid_argument("capacities, lower and upper must have equal length");
    }
    FscInstance inst;
    inst.constraints.reserve(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (with_upper && upper[i] < lower[i]) {
            throw std::invalid_argument("remainder range " + std::to_string(i) + " is empty");
        }
        Int hi = with_upper ? upper[i] : lower[i];
        inst.constraints.push_back(
            Constraint{std::move(caps[i]), Interval(std::move(lower[i]), std::move(hi))});
    }
    if (auto it = doc.find("s_domain"); it != doc.end() && !it->is_null()) {
        Int lo = parse_int(field(*it, "lo"));
        Int hi = parse_int(field(*it, "hi"));
        if (lo < 0 || hi < lo) {
            throw std::invalid_argument("s_domain must satisfy 0 <= lo <= hi");
        }
        inst.s_domain = Interval(std::move(lo), std::move(hi));
    }
    return inst;
}

json int_array(const std::vector<Int>& xs) {
    json a = json::array();
    for (const Int& x : xs) {
        a.push_back(x.get_str());
    }
    return a;
}

}  // namespace

Int parse_int(const json& v) {
    if (v.is_string()) {
        return int_from_string(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Int(std::to_string(v.get<long long>()));
    }
    throw std::invalid_argument("expected an integer (decimal string or JSON integer)");
}

Rat parse_rat(const json& v) {
    if (!v.is_string()) {
        if (v.is_number_integer()) {
            Rat r(Int(std::to_string(v.get<long long>())));
            return r;
        }
        throw std::invalid_argument("expected a rational \"p/q\" string");
    }
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    Int num = int_from_string(slash == std::string::npos ? s : s.substr(0, slash));
    Int den = 1;
    if (slash != std::string::npos) {
        den = int_from_string(s.substr(slash + 1));
    }
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: \"" + s + "\"");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

InstancePayload parse_instance(const json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("instance document must be a JSON object");
    }
    const std::string kind = field(doc, "kind").get<std::string>();
    if (kind == "fsc") {
        return parse_fsc(doc, true);
    }
    if (kind == "mixing") {
        auto caps = parse_int_array(field(doc, "capacities"), "capacities");
        auto lower = parse_int_array(field(doc, "lower"), "lower");
        if (caps.size() != lower.size()) {
            throw std::invalid_argument("capacities and lower must have equal length");
        }
        return MixingInput{std::move(caps), std::move(lower)};
    }
    if (kind == "tasks") {
        const json& arr = field(doc, "tasks");
        if (!arr.is_array() || arr.empty()) {
            throw std::invalid_argument("tasks must be a nonempty array");
        }
        std::vector<Task> tasks;
        tasks.reserve(arr.size());
        for (const auto& t : arr) {
            tasks.push_back(Task{parse_int(field(t, "C")), parse_int(field(t, "T")),
                                 parse_int(field(t, "J"))});
        }
        return TaskSet(std::move(tasks));
    }
    if (kind == "dda") {
        DdaInstance d;
        const json& arr = field(doc, "alphas");
        if (!arr.is_array() || arr.empty()) {
            throw std::invalid_argument("alphas must be a nonempty array");
        }
        for (const auto& a : arr) {
            d.alphas.push_back(parse_rat(a));
        }
        d.N = parse_int(field(doc, "N"));
        d.eps = parse_rat(field(doc, "eps"));
        d.validate();
        return d;
    }
    throw std::invalid_argument("unknown instance kind \"" + kind + "\"");
}

InstancePayload load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open \"" + path + "\"");
    }
    json doc = json::parse(in);
    return parse_instance(doc);
}

nlohmann::json serialize_instance(const InstancePayload& payload) {
    json doc;
    if (const auto* fscp = std::get_if<FscInstance>(&payload)) {
        doc["kind"] = "fsc";
        json caps = json::array(), lower = json::array(), upper = json::array();
        for (const Constraint& row : fscp->constraints) {
            caps.push_back(row.capacity.get_str());
            lower.push_back(row.remainder.lo.get_str());
            upper.push_back(row.remainder.hi.get_str());
        }
        doc["capacities"] = std::move(caps);
        doc["lower"] = std::move(lower);
        doc["upper"] = std::move(upper);
        if (fscp->s_domain) {
            doc["s_domain"] = {{"lo", fscp->s_domain->lo.get_str()},
                               {"hi", fscp->s_domain->hi.get_str()}};
        }
    } else if (const auto* mix = std::get_if<MixingInput>(&payload)) {
        doc["kind"] = "mixing";
        doc["capacities"] = int_array(mix->capacities);
        doc["lower"] = int_array(mix->lower);
    } else if (const auto* ts = std::get_if<TaskSet>(&payload)) {
        doc["kind"] = "tasks";
        json arr = json::array();
        for (const Task& t : ts->tasks()) {
            arr.push_back({{"C", t.C.get_str()}, {"T", t.T.get_str()}, {"J", t.J.get_str()}});
        }
        doc["tasks"] = std::move(arr);
    } else {
        const auto& d = std::get<DdaInstance>(payload);
        doc["kind"] = "dda";
        json arr = json::array();
        for (const Rat& a : d.alphas) {
            arr.push_back(a.get_str());
        }
        doc["alphas"] = std::move(arr);
        doc["N"] = d.N.get_str();
        doc["eps"] = d.eps.get_str();
    }
    return doc;
}

}  // namespace fsc
