// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failed criteria. Every expected value is produced by an
// independent brute-force reference at runtime; nothing is tuned after the
// fact.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fsc/cli.hpp"
#include "fsc/io.hpp"
#include "fsc/mixing.hpp"
#include "fsc/optimize.hpp"
#include "fsc/response_time.hpp"
#include "test_support.hpp"

using namespace fsc;
using namespace fsc::test;
using nlohmann::json;

namespace {

struct Checker {
    long failures = 0;
    long checks = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) {
            first = what;
        }
    }
};

double seconds(std::function<void()> body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

std::vector<FscInstance> corpus_1000() {
    std::vector<FscInstance> out;
    out.reserve(1000);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + t % 8;
        out.push_back(gen_random_harmonic(n, 3, 90000 + static_cast<std::uint64_t>(t),
                                          t % 2 == 0));
    }
    return out;
}

// 1. Feasibility decisions match enumeration on the random harmonic corpus.
void criterion_feasibility(Checker& c) {
    for (const FscInstance& inst : corpus_1000()) {
        long bound = 1;
        for (const auto& row : inst.constraints) {
            bound = std::max(bound, row.capacity.get_si());
        }
        bool expect = brute_min_s(to_raw(inst), bound).has_value();
        bool got = feasible(normalize(inst)).feasible;
        c.expect(got == expect, "verdict mismatch at bound " + std::to_string(bound));
    }
}

// 2. Both minimizers and the maximizer agree with enumeration.
void criterion_optimization(Checker& c) {
    for (const FscInstance& inst : corpus_1000()) {
        long bound = 1;
        for (const auto& row : inst.constraints) {
            bound = std::max(bound, row.capacity.get_si());
        }
        auto norm = normalize(inst);
        auto expect_min = oracle_min_s(inst, 100000);
        auto expect_max = oracle_max_s(inst, 100000);
        auto brute = brute_min_s(to_raw(inst), bound);
        c.expect(expect_min.has_value() == brute.has_value() &&
                     (!brute || *expect_min == Int(*brute)),
                 "library oracle disagrees with plain enumeration");
        auto via_binary = min_s_binary(norm);
        auto via_aggregate = min_s_aggregate(norm);
        auto via_max = max_s(norm);
        c.expect(via_binary == expect_min, "binary-search minimum off");
        c.expect(via_aggregate == expect_min, "aggregation minimum off");
        c.expect(via_max == expect_max, "maximum off");
        if (via_binary) {
            c.expect(check_guess(norm, *via_binary).has_value(), "optimum has no witness");
        }
    }
}

// 3. Interval machinery versus residue enumeration across moduli, plus the
// span-count guarantees.
void criterion_interval_machinery(Checker& c) {
    // Exhaustive for tiny moduli.
    for (long alpha = 1; alpha <= 10; ++alpha) {
        const long span = 2 * alpha;
        for (long vl = -span; vl <= span; ++vl) {
            for (long vh = vl; vh <= span; ++vh) {
                for (long wl = -span; wl <= span; ++wl) {
                    for (long wh = wl; wh <= span; ++wh) {
                        auto spans = intersect_pair_spans(Interval(vl, vh), Interval(wl, wh),
                                                          alpha);
                        if (spans.size() > 2) {
                            c.expect(false, "pair intersection needed >2 spans");
                            return;
                        }
                        std::set<long> lhs = enum_project(vl, vh, alpha);
                        std::set<long> rhs = enum_project(wl, wh, alpha);
                        std::set<long> expect;
                        for (long r : lhs) {
                            if (rhs.count(r) != 0) {
                                expect.insert(r);
                            }
                        }
                        if (spans_values(spans, alpha) != expect) {
                            c.expect(false, "pair intersection wrong at alpha " +
                                                std::to_string(alpha));
                            return;
                        }
                        ++c.checks;
                    }
                }
            }
        }
    }
    // Sampled pairs and one-to-many lists for every modulus up to 200.
    SplitMix64 gen(1009);
    for (long alpha = 1; alpha <= 200; ++alpha) {
        for (int t = 0; t < 25; ++t) {
            auto draw = [&] {
                long lo = static_cast<long>(gen.next() % (4 * alpha + 1)) - 2 * alpha;
                long hi = lo + static_cast<long>(gen.next() % (2 * alpha));
                return Interval(lo, hi);
            };
            Interval v = draw(), w = draw();
            auto spans = intersect_pair_spans(v, w, alpha);
            std::set<long> lhs = enum_project(v.lo.get_si(), v.hi.get_si(), alpha);
            std::set<long> rhs = enum_project(w.lo.get_si(), w.hi.get_si(), alpha);
            std::set<long> expect;
            for (long r : lhs) {
                if (rhs.count(r) != 0) {
                    expect.insert(r);
                }
            }
            c.expect(spans.size() <= 2 && spans_values(spans, alpha) == expect,
                     "sampled pair intersection wrong at alpha " + std::to_string(alpha));

            std::size_t k = 1 + gen.next() % 8;
            std::vector<Interval> qs;
            std::set<long> many;
            for (std::size_t j = 0; j < k; ++j) {
                Interval q = draw();
                qs.push_back(q);
                for (long r : enum_project(q.lo.get_si(), q.hi.get_si(), alpha)) {
                    many.insert(r);
                }
            }
            auto result = intersect_one_many(v, qs, alpha);
            std::set<long> expect_many;
            for (long r : lhs) {
                if (many.count(r) != 0) {
                    expect_many.insert(r);
                }
            }
            c.expect(result.size() <= k + 1 && spans_values(result, alpha) == expect_many,
                     "one-to-many intersection wrong at alpha " + std::to_string(alpha));
        }
    }
    // Lifted intersections for every window shape up to 30x30.
    for (long a = 1; a <= 30; ++a) {
        for (long b = 1; b <= 30; ++b) {
            for (int t = 0; t < 4; ++t) {
                long span = 2 * a * b;
                long Al = static_cast<long>(gen.next() % (2 * span + 1)) - span;
                long Ah = Al + static_cast<long>(gen.next() % span);
                long Bl = static_cast<long>(gen.next() % (2 * span + 1)) - span;
                long Bh = Bl + static_cast<long>(gen.next() % span);
                auto pieces = lift_intersection(Interval(Al, Ah), Interval(Bl, Bh), a, b);
                std::set<long> got;
                for (const auto& p : pieces) {
                    for (long z = p.lo.get_si(); z <= p.hi.get_si(); ++z) {
                        got.insert(z);
                    }
                }
                c.expect(got == brute_lift(Al, Ah, Bl, Bh, a, b),
                         "lift wrong at a=" + std::to_string(a) + " b=" + std::to_string(b));
            }
        }
    }
    // Sweep traces never carry more spans than rows remaining.
    for (int t = 0; t < 200; ++t) {
        FscInstance inst = gen_random_harmonic(1 + t % 8, 3, 77000 + static_cast<std::uint64_t>(t),
                                               t % 2 == 0);
        auto res = feasible(normalize(inst));
        for (std::size_t k = 0; k < res.span_counts.size(); ++k) {
            c.expect(res.span_counts[k] <= k + 1, "sweep level carries too many spans");
        }
    }
}

// 4. Aggregation of the last two rows: window membership, image identity,
// minimal representatives, at most six pieces.
void criterion_aggregation(Checker& c) {
    SplitMix64 gen(2003);
    long above_four = 0;
    for (int t = 0; t < 1000; ++t) {
        long a1 = 2 + static_cast<long>(gen.next() % 40);
        long a2 = a1 * (1 + static_cast<long>(gen.next() % 10));
        auto draw_row = [&](long cap) {
            long w = 1 + static_cast<long>(gen.next() % (cap - 1));
            long lo = static_cast<long>(gen.next() % (2 * cap + 1)) - cap;
            return Constraint{cap, Interval(lo, lo + w - 1)};
        };
        FscInstance raw;
        raw.constraints = {draw_row(a1), draw_row(a2)};
        auto norm = normalize(raw);
        if (norm.rows.size() != 2) {
            continue;
        }
        auto agg = aggregate_last_two(norm);
        c.expect(agg.pieces.size() <= 6, "aggregation produced more than six pieces");
        if (agg.pieces.size() > 4) {
            ++above_four;
        }
        std::set<long> last_vals =
            enum_project(norm.rows[1].remainder.lo.get_si(), norm.rows[1].remainder.hi.get_si(),
                         a2);
        std::set<long> prev_vals =
            enum_project(norm.rows[0].remainder.lo.get_si(), norm.rows[0].remainder.hi.get_si(),
                         a1);
        std::set<long> image;
        bool inside = true, minimal = true;
        for (const auto& p : agg.pieces) {
            for (long u = p.lo.get_si(); u <= p.hi.get_si(); ++u) {
                inside = inside && last_vals.count(u) != 0;
                image.insert(imod(u, a1));
                for (long r : last_vals) {
                    if (imod(u - r, a1) == 0 && u > r) {
                        minimal = false;
                    }
                }
            }
        }
        std::set<long> expect;
        for (long r : enum_project(norm.rows[1].remainder.lo.get_si(),
                                   norm.rows[1].remainder.hi.get_si(), a1)) {
            if (prev_vals.count(r) != 0) {
                expect.insert(r);
            }
        }
        c.expect(inside, "aggregation piece escapes the last row's window");
        c.expect(minimal, "aggregation piece is not the least of its class");
        c.expect(image == expect, "aggregation image mismatch");
    }
    std::cerr << "  note: aggregations with more than four pieces: " << above_four
              << " of 1000\n";
}

// 5. Singleton remainders reduce to the classic pairwise congruence test.
void criterion_crt(Checker& c) {
    SplitMix64 gen(3001);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(gen.next() % 6);
        FscInstance raw = gen_random_harmonic(n, 4, gen.next(), false);
        for (auto& row : raw.constraints) {
            Int r = mod_floor(row.remainder.lo, row.capacity);
            row.remainder = Interval(r, r);
        }
        bool expect = true;
        for (std::size_t i = 0; i < raw.constraints.size(); ++i) {
            for (std::size_t j = i + 1; j < raw.constraints.size(); ++j) {
                Int g = gcd(raw.constraints[i].capacity, raw.constraints[j].capacity);
                if (mod_floor(raw.constraints[i].remainder.lo - raw.constraints[j].remainder.lo,
                              g) != 0) {
                    expect = false;
                }
            }
        }
        c.expect(feasible(normalize(raw)).feasible == expect,
                 "pairwise congruence test disagrees");
    }
}

// 6. The linear-time lower-bound minimizer is feasible and minimal.
void criterion_mixing(Checker& c) {
    SplitMix64 gen(4001);
    for (int t = 0; t < 500; ++t) {
        std::size_t n = gen.next() % 7;
        std::vector<Int> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            long cap = static_cast<long>(gen.next() % 101) - 50;
            a[i] = gen.next() % 4 == 0 ? 0 : cap;
            b[i] = static_cast<long>(gen.next() % 101) - 50;
        }
        Solution sol = mixing_min_s(a, b);
        bool ok = sol.s >= 0;
        for (std::size_t i = 0; i < n; ++i) {
            ok = ok && sol.s + a[i] * sol.x[i] >= b[i];
        }
        c.expect(ok, "minimizer returned an infeasible point");
        for (Int below = 0; below < sol.s; ++below) {
            bool any = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] == 0 && below < b[i]) {
                    any = false;
                }
            }
            c.expect(!any, "a smaller s admits multipliers");
        }
    }
}

// 7. The revealing walk and the congruence form answer identically, and the
// expanded witnesses satisfy the deadline system.
void criterion_response(Checker& c) {
    TaskSet pinned({Task{1, 4, 2}, Task{1, 2, 0}});
    auto pinned_xn = reveal(pinned);
    c.expect(pinned_xn.has_value() && *pinned_xn == 3, "pinned task set must reveal 3");

    SplitMix64 gen(5003);
    for (int t = 0; t < 500; ++t) {
        TaskSet ts = random_task_set(gen, 6, 8);
        auto revealed = reveal(ts);
        auto norm = to_bms(ts);
        auto via_binary = min_s_binary(norm);
        auto via_aggregate = min_s_aggregate(norm);
        c.expect(revealed == via_binary, "reveal and binary minimum disagree");
        c.expect(revealed == via_aggregate, "reveal and aggregation minimum disagree");
        if (revealed) {
            auto x = response_solution(ts, *revealed);
            c.expect(satisfies_response_system(ts, x),
                     "expanded witness violates the deadline system");
        }
    }
}

// 8. The approximation encoding and the direct search agree, and feasible
// encodings carry a scaled witness.
void criterion_dda(Checker& c) {
    auto pinned = [&](std::vector<std::pair<long, long>> alphas, long N,
                      std::pair<long, long> eps) {
        DdaInstance d;
        for (auto& [p, q] : alphas) {
            Rat a(p, q);
            a.canonicalize();
            d.alphas.push_back(a);
        }
        d.N = N;
        d.eps = Rat(eps.first, eps.second);
        d.eps.canonicalize();
        return d;
    };
    c.expect(reduction_roundtrip(pinned({{1, 2}}, 2, {1, 4}), 10000000), "pinned case 1");
    c.expect(reduction_roundtrip(pinned({{1, 2}}, 1, {1, 4}), 10000000), "pinned case 2");
    c.expect(reduction_roundtrip(pinned({{1, 3}, {1, 2}}, 6, {1, 100}), 10000000),
             "pinned case 3");

    SplitMix64 gen(6007);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + gen.next() % 3;
        DdaInstance d;
        for (std::size_t i = 0; i < n; ++i) {
            Rat a(1 + static_cast<long>(gen.next() % 5),
                  1 + static_cast<long>(gen.next() % 10));
            a.canonicalize();
            d.alphas.push_back(a);
        }
        d.N = 1 + static_cast<long>(gen.next() % 50);
        d.eps = Rat(1 + static_cast<long>(gen.next() % 9), 10);
        d.eps.canonicalize();

        c.expect(reduction_roundtrip(d, 100000000), "roundtrip failed");
        auto encoded = oracle_min_s(dda_to_bms(d), 100000000);
        auto direct = oracle_dda(d);
        if (encoded) {
            Int lambda = 1;
            for (const Rat& a : d.alphas) {
                lambda *= a.get_num();
            }
            bool scaled = mod_floor(*encoded, lambda) == 0;
            c.expect(scaled, "encoded witness is not a multiple of lambda");
            if (scaled) {
                Int q = div_exact(*encoded, lambda);
                bool witness = q >= 1 && q <= d.N && direct.has_value();
                for (const Rat& a : d.alphas) {
                    Rat v = Rat(q) * a;
                    Rat frac = v - Rat(floor_div(Int(v.get_num()), Int(v.get_den())));
                    witness = witness && frac <= d.eps;
                }
                c.expect(witness, "scaled-back witness fails the approximation test");
            }
        }
    }
}

// 9. Qualitative complexity: the sweep scales roughly quadratically and the
// aggregation minimizer finishes a thousand rows comfortably.
void criterion_complexity(Checker& c) {
    auto sweep_time = [&](int n, std::uint64_t seed) {
        FscInstance inst = gen_random_harmonic(n, 4, seed, true);
        NormalizedInstance norm = normalize(inst);
        bool ok = false;
        double t = seconds([&] { ok = feasible(norm).feasible; });
        c.expect(ok, "planted instance must be feasible at n=" + std::to_string(n));
        return t;
    };
    double t5 = 0;
    double t10 = 0;
    int reps = 0;
    std::uint64_t seed = 424200;
    while (t5 < 0.4 && reps < 12) {  // accumulate enough signal to compare
        t5 += sweep_time(5000, seed);
        t10 += sweep_time(10000, seed);
        ++seed;
        ++reps;
    }
    double ratio = t10 / t5;
    std::ostringstream note;
    note << "  note: sweep " << reps << "x: n=5000 " << t5 << "s, n=10000 " << t10
         << "s, ratio " << ratio;
    std::cerr << note.str() << "\n";
    c.expect(ratio <= 5.0, "doubling n grew the sweep by more than 5x");

    FscInstance big = gen_random_harmonic(1000, 4, 77, true);
    NormalizedInstance norm = normalize(big);
    std::optional<Int> got;
    double t_agg = seconds([&] { got = min_s_aggregate(norm); });
    std::cerr << "  note: aggregation minimum at n=1000 took " << t_agg << "s\n";
    c.expect(got.has_value(), "planted instance must have a minimum");
    c.expect(t_agg < 60.0, "aggregation minimum exceeded a minute");
    if (got) {
        c.expect(check_guess(norm, *got).has_value(), "minimum lacks a witness");
    }
}

// 10. Command-line contract: pinned documents, exit codes, file round trips.
void criterion_cli(Checker& c) {
    auto run = [](const std::vector<std::string>& args, std::string* raw = nullptr) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        if (raw != nullptr) {
            *raw = out.str();
        }
        return std::pair<int, json>(code, json::parse(out.str()));
    };
    auto write = [](const std::string& path, const std::string& body) {
        std::ofstream f(path);
        f << body;
    };

    write("acc_inst.json",
          R"({"kind":"fsc","capacities":["2","4","12"],"lower":["1","2","7"],"upper":["1","3","8"]})");
    write("acc_tasks.json",
          R"({"kind":"tasks","tasks":[{"C":"1","T":"4","J":"2"},{"C":"1","T":"2","J":"0"}]})");
    write("acc_bad.json",
          R"({"kind":"fsc","capacities":["2","4"],"lower":["1","0"],"upper":["1","0"]})");
    write("acc_huge.json",
          R"({"kind":"fsc","capacities":["1000000000"],"lower":["1"],"upper":["1"]})");

    std::string raw;
    auto fe = run({"feasible", "acc_inst.json"}, &raw);
    c.expect(fe.first == 0 && fe.second == json{{"feasible", true}} &&
                 raw == "{\"feasible\":true}\n",
             "feasible document mismatch");
    auto solve = run({"solve", "acc_inst.json", "--objective", "min", "--method", "aggregate"},
                     &raw);
    c.expect(solve.first == 0 && solve.second == json::parse(R"({"s":"7","x":["-3","-1","0"]})"),
             "solve document mismatch");
    c.expect(raw == "{\"s\":\"7\",\"x\":[\"-3\",\"-1\",\"0\"]}\n", "solve bytes changed");
    auto wcrt = run({"wcrt", "acc_tasks.json"});
    c.expect(wcrt.first == 0 && wcrt.second == json::parse(R"({"x_n":"3","x":["1","3"]})"),
             "wcrt document mismatch");

    c.expect(run({"feasible", "acc_bad.json"}).first == 1, "infeasible must exit 1");
    c.expect(run({"solve", "acc_bad.json"}).first == 1, "infeasible solve must exit 1");
    c.expect(run({"feasible", "acc_missing.json"}).first == 2, "missing file must exit 2");
    c.expect(run({"oracle", "acc_huge.json", "--limit", "1000000"}).first == 3,
             "oracle limit must exit 3");
    auto err_doc = run({"feasible", "acc_missing.json"});
    c.expect(err_doc.second.contains("error"), "error document missing its field");

    SplitMix64 gen(7001);
    for (int t = 0; t < 30; ++t) {
        FscInstance inst = gen_random_harmonic(1 + static_cast<int>(gen.next() % 6), 4,
                                               gen.next(), t % 2 == 0);
        if (t % 3 == 0) {
            Int lo(static_cast<long>(gen.next() % 40));
            inst.s_domain = Interval(lo, lo + Int(static_cast<long>(gen.next() % 40)));
        }
        InstancePayload p = inst;
        c.expect(parse_instance(serialize_instance(p)) == p, "fsc round trip changed the value");
    }
    InstancePayload mix = MixingInput{{2, 0, -5}, {3, 7, -1}};
    InstancePayload tasks = TaskSet({Task{1, 8, 3}, Task{2, 4, 1}, Task{1, 2, 0}});
    DdaInstance d;
    d.alphas = {Rat(1, 2), Rat(7, 3)};
    d.N = 25;
    d.eps = Rat(2, 9);
    InstancePayload dp = d;
    c.expect(parse_instance(serialize_instance(mix)) == mix, "mixing round trip");
    c.expect(parse_instance(serialize_instance(tasks)) == tasks, "tasks round trip");
    c.expect(parse_instance(serialize_instance(dp)) == dp, "dda round trip");

    std::remove("acc_inst.json");
    std::remove("acc_tasks.json");
    std::remove("acc_bad.json");
    std::remove("acc_huge.json");
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<void(Checker&)> body;
    };
    const std::vector<Entry> entries = {
        {"feasibility verdicts equal enumeration on 1000 harmonic instances",
         criterion_feasibility},
        {"minima and maxima equal enumeration on the same corpus", criterion_optimization},
        {"interval intersections and lifts equal residue enumeration", criterion_interval_machinery},
        {"last-two-row aggregation: window, image, minimality, <= 6 pieces",
         criterion_aggregation},
        {"singleton remainders reduce to pairwise congruence tests", criterion_crt},
        {"lower-bound minimizer feasible and minimal on 500 instances", criterion_mixing},
        {"revealing walk equals congruence minimum on 500 task sets", criterion_response},
        {"approximation encoding round-trips with scaled witnesses", criterion_dda},
        {"sweep scales near-quadratically; aggregation handles 1000 rows", criterion_complexity},
        {"command-line contract: documents, exit codes, round trips", criterion_cli},
    };
    int failed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Checker c;
        double t = seconds([&] { entries[i].body(c); });
        bool ok = c.failures == 0;
        failed += ok ? 0 : 1;
        std::cout << "[" << (i + 1 < 10 ? " " : "") << i + 1 << "/10] "
                  << (ok ? "PASS" : "FAIL") << "  " << entries[i].name << " (" << c.checks
                  << " checks, " << t << "s)";
        if (!ok) {
            std::cout << " -- " << c.failures << " failed; first: " << c.first;
        }
        std::cout << "\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failed;
}
