#include "fsc/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "fsc/generate.hpp"
#include "fsc/io.hpp"
#include "fsc/mixing.hpp"
#include "fsc/optimize.hpp"

namespace fsc::cli {

using nlohmann::json;

namespace {

int emit(std::ostream& out, const json& doc, int code) {
    out << doc.dump() << "\n";
    return code;
}

json int_array(const std::vector<Int>& xs) {
    json a = json::array();
    for (const Int& x : xs) {
        a.push_back(x.get_str());
    }
    return a;
}

template <typename T>
const T& expect(const InstancePayload& payload, const char* what) {
    const T* v = std::get_if<T>(&payload);
    if (v == nullptr) {
        throw std::invalid_argument(std::string("this command needs a \"") + what +
                                    "\" instance file");
    }
    return *v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solver for simultaneous congruences with remainder intervals"};
    app.require_subcommand(1);

    std::string file;
    std::string objective = "min";
    std::string method = "aggregate";
    std::string guess;
    std::string limit_str = "10000000";
    int gen_n = 1;
    int gen_ratio = 4;
    std::uint64_t gen_seed = 0;
    bool gen_plant = false;

    auto* cmd_feasible =
        app.add_subcommand("feasible", "decide whether a harmonic instance has a solution");
    cmd_feasible->add_option("file", file, "fsc instance file")->required();

    auto* cmd_solve = app.add_subcommand("solve", "smallest or largest feasible s");
    cmd_solve->add_option("file", file, "fsc instance file")->required();
    cmd_solve->add_option("--objective", objective)
        ->check(CLI::IsMember({"min", "max"}))
        ->capture_default_str();
    cmd_solve->add_option("--method", method, "search strategy for the minimum")
        ->check(CLI::IsMember({"binary", "aggregate"}))
        ->capture_default_str();

    auto* cmd_check = app.add_subcommand("check", "test one guess for s");
    cmd_check->add_option("file", file, "fsc instance file")->required();
    cmd_check->add_option("--s", guess, "guess value (decimal)")->required();

    auto* cmd_mixing =
        app.add_subcommand("mixing", "minimize s for lower-bound-only rows (linear time)");
    cmd_mixing->add_option("file", file, "mixing instance file")->required();

    auto* cmd_wcrt =
        app.add_subcommand("wcrt", "job count at the worst-case response of the last task");
    cmd_wcrt->add_option("file", file, "task set file")->required();

    auto* cmd_oracle =
        app.add_subcommand("oracle", "brute-force reference answer (any capacities)");
    cmd_oracle->add_option("file", file, "fsc or dda instance file")->required();
    cmd_oracle->add_option("--limit", limit_str, "largest enumeration allowed")
        ->capture_default_str();

    auto* cmd_gen = app.add_subcommand("gen", "produce fsc instances");
    cmd_gen->require_subcommand(1);
    auto* gen_dda = cmd_gen->add_subcommand("dda", "encode a dda instance as congruence rows");
    gen_dda->add_option("file", file, "dda instance file")->required();
    auto* gen_random = cmd_gen->add_subcommand("random", "seeded harmonic instance");
    gen_random->add_option("--n", gen_n, "row count")->required();
    gen_random->add_option("--max-ratio", gen_ratio)->capture_default_str();
    gen_random->add_option("--seed", gen_seed)->capture_default_str();
    gen_random->add_flag("--plant", gen_plant, "place a feasible target first");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fscsolve");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return emit(out, json{{"usage", "see stderr"}}, 0);
    } catch (const CLI::ParseError& e) {
        return emit(out, json{{"error", e.what()}}, 2);
    }

    try {
        if (cmd_feasible->parsed()) {
            InstancePayload payload = load_instance(file);
            bool ok = feasible(normalize(expect<FscInstance>(payload, "fsc"))).feasible;
            return emit(out, json{{"feasible", ok}}, ok ? 0 : 1);
        }
        if (cmd_solve->parsed()) {
            InstancePayload payload = load_instance(file);
            NormalizedInstance norm = normalize(expect<FscInstance>(payload, "fsc"));
            std::optional<Int> s;
            if (objective == "max") {
                s = max_s(norm);
            } else if (method == "binary") {
                s = min_s_binary(norm);
            } else {
                s = min_s_aggregate(norm);
            }
            if (!s) {
                return emit(out, json{{"feasible", false}}, 1);
            }
            auto sol = check_guess(norm, *s);
            if (!sol) {
                return emit(out, json{{"error", "solver returned an unwitnessed optimum"}}, 2);
            }
            return emit(out, json{{"s", sol->s.get_str()}, {"x", int_array(sol->x)}}, 0);
        }
        if (cmd_check->parsed()) {
            InstancePayload payload = load_instance(file);
            NormalizedInstance norm = normalize(expect<FscInstance>(payload, "fsc"));
            auto sol = check_guess(norm, parse_int(json(guess)));
            if (!sol) {
                return emit(out, json{{"feasible", false}}, 1);
            }
            return emit(out,
                        json{{"feasible", true},
                             {"s", sol->s.get_str()},
                             {"x", int_array(sol->x)}},
                        0);
        }
        if (cmd_mixing->parsed()) {
            InstancePayload payload = load_instance(file);
            const auto& mix = expect<MixingInput>(payload, "mixing");
            Solution sol = mixing_min_s(mix.capacities, mix.lower);
            return emit(out, json{{"s", sol.s.get_str()}, {"x", int_array(sol.x)}}, 0);
        }
        if (cmd_wcrt->parsed()) {
            InstancePayload payload = load_instance(file);
            const auto& ts = expect<TaskSet>(payload, "tasks");
            auto xn = reveal(ts);
            if (!xn) {
                return emit(out, json{{"feasible", false}}, 1);
            }
            std::vector<Int> x = response_solution(ts, *xn);
            return emit(out, json{{"x_n", xn->get_str()}, {"x", int_array(x)}}, 0);
        }
        if (cmd_oracle->parsed()) {
            Int limit = parse_int(json(limit_str));
            InstancePayload payload = load_instance(file);
            if (const auto* d = std::get_if<DdaInstance>(&payload)) {
                if (d->N > limit) {
                    throw resource_limit_error("candidate count " + d->N.get_str() +
                                               " exceeds enumeration limit " + limit.get_str());
                }
                auto q = oracle_dda(*d);
                if (!q) {
                    return emit(out, json{{"feasible", false}}, 1);
                }
                return emit(out, json{{"Q", q->get_str()}}, 0);
            }
            const auto& inst = expect<FscInstance>(payload, "fsc");
            auto s = oracle_min_s(inst, limit);
            if (!s) {
                return emit(out, json{{"feasible", false}}, 1);
            }
            return emit(out, json{{"s", s->get_str()}}, 0);
        }
        if (gen_dda->parsed()) {
            InstancePayload payload = load_instance(file);
            const auto& d = expect<DdaInstance>(payload, "dda");
            return emit(out, serialize_instance(dda_to_bms(d)), 0);
        }
        if (gen_random->parsed()) {
            FscInstance inst = gen_random_harmonic(gen_n, gen_ratio, gen_seed, gen_plant);
            return emit(out, serialize_instance(inst), 0);
        }
        return emit(out, json{{"error", "no command"}}, 2);
    } catch (const resource_limit_error& e) {
        return emit(out, json{{"error", e.what()}}, 3);
    } catch (const std::exception& e) {
        return emit(out, json{{"error", e.what()}}, 2);
    }
}

}  // namespace fsc::cli
