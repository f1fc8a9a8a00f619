// Command-line frontend: solve / trace / automaton / stats / poly.
// Exit codes: solve maps its verdict (0 yes, 1 no, 2 unknown); everything
// else exits 0 on success.  Parse and flag errors exit 3, capacity and budget
// configuration errors exit 4.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "lampeq/json_io.hpp"
#include "lampeq/lampeq.hpp"

using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;
constexpr int kExitCapacity = 4;

struct SolveArgs {
    std::string word;
    bool as_json = false;
    bool bound_only = false;
    std::int64_t max_delta = 1'000'000;
    int threads = 0; // 0 = machine parallelism
};

int run_solve(const SolveArgs& args) {
    lampeq::Word w = lampeq::parse_word(args.word);
    if (args.max_delta < 0)
        throw lampeq::capacity_error("--max-delta must be nonnegative");
    lampeq::SolveOptions opt;
    opt.max_delta = args.max_delta;
    opt.threads = args.threads > 0
                      ? args.threads
                      : static_cast<int>(
                            std::max(1u, std::thread::hardware_concurrency()));

    if (args.bound_only) {
        lampeq::TraceResult tr = lampeq::trace(w);
        json j;
        if (tr.x_w != 0) {
            j["case"] = "sigma_x_nonzero";
            if (tr.t_w % tr.x_w == 0) j["delta"] = -tr.t_w / tr.x_w;
        } else if (tr.t_w != 0) {
            j["case"] = "unsolvable_t_w";
        } else if (tr.den.is_trivial()) {
            j["case"] = "trivial_divisor";
        } else {
            j["case"] = "divisibility_search";
            j["witness_bound_pos"] = lampeq::witness_bound(tr.den, tr.num).str();
            j["witness_bound_neg"] =
                lampeq::witness_bound(tr.den.flip(), tr.num.flip()).str();
        }
        j["theoretical_bound"] = lampeq::theoretical_delta_bound(w).str();
        if (args.as_json) {
            std::cout << j.dump() << "\n";
        } else {
            for (auto& [k, v] : j.items())
                std::cout << k << ": "
                          << (v.is_string() ? v.get<std::string>() : v.dump())
                          << "\n";
        }
        return kExitYes;
    }

    lampeq::SolveOutcome out = lampeq::decide(w, opt);
    if (args.as_json) {
        std::cout << lampeq::to_json(out).dump() << "\n";
    } else {
        std::cout << "verdict: " << lampeq::verdict_name(out.verdict) << "\n";
        if (out.verdict == lampeq::Verdict::Yes) {
            std::cout << "delta: " << *out.delta << "\n";
            std::cout << "f: " << lampeq::format_poly(*out.lamp) << "\n";
            std::cout << "solution: " << lampeq::format_word(*out.solution)
                      << "\n";
        } else if (out.verdict == lampeq::Verdict::Unknown) {
            std::cout << "theoretical_bound: "
                      << (out.theoretical_bound ? out.theoretical_bound->str()
                                                : "inf")
                      << "\n";
            std::cout << "budget: " << out.budget << "\n";
        }
    }
    switch (out.verdict) {
    case lampeq::Verdict::Yes: return kExitYes;
    case lampeq::Verdict::No: return kExitNo;
    case lampeq::Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

int run_trace(const std::string& word, bool as_json, bool as_tsv) {
    lampeq::Word w = lampeq::parse_word(word);
    lampeq::TraceResult tr = lampeq::trace(w, true);
    if (as_tsv) {
        auto sorted = [](const lampeq::GridPointSet& s) {
            std::vector<lampeq::GridPoint> v(s.begin(), s.end());
            std::sort(v.begin(), v.end());
            return v;
        };
        for (const auto& p : tr.path)
            std::cout << "path\t" << p.x << "\t" << p.t << "\n";
        for (const auto& p : sorted(tr.N))
            std::cout << "N\t" << p.x << "\t" << p.t << "\n";
        for (const auto& p : sorted(tr.D))
            std::cout << "D\t" << p.x << "\t" << p.t << "\n";
    } else if (as_json) {
        std::cout << lampeq::to_json(tr).dump() << "\n";
    } else {
        std::cout << "x_w: " << tr.x_w << "\n";
        std::cout << "t_w: " << tr.t_w << "\n";
        std::cout << "num: " << lampeq::format_parametric(tr.num) << "\n";
        std::cout << "den: " << lampeq::format_parametric(tr.den) << "\n";
    }
    return 0;
}

int run_automaton(const std::string& poly, bool as_json, bool as_dot) {
    lampeq::LaurentPoly f = lampeq::parse_poly(poly);
    lampeq::DivAutomaton a(f);
    if (as_dot) {
        std::cout << a.to_dot();
        return 0;
    }
    auto rep = a.structural_checks();
    std::uint64_t period = a.period();
    if (as_json) {
        json j{{"divisor", lampeq::format_poly(a.divisor())},
               {"degree", a.degree()},
               {"states", a.state_count()},
               {"period", period},
               {"strongly_connected", rep.strongly_connected},
               {"unique_in_per_label", rep.unique_in_per_label}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "divisor: " << lampeq::format_poly(a.divisor()) << "\n";
        std::cout << "degree: " << a.degree() << "\n";
        std::cout << "states: " << a.state_count() << "\n";
        std::cout << "period: " << period << "\n";
        std::cout << "strongly_connected: "
                  << (rep.strongly_connected ? "yes" : "no") << "\n";
        std::cout << "unique_in_per_label: "
                  << (rep.unique_in_per_label ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_stats(std::int64_t length, std::int64_t trials, std::uint64_t seed,
              bool as_json, bool exact) {
    double fraction;
    std::int64_t effective_trials = trials;
    if (exact) {
        lampeq::Rational r = lampeq::sigma_zero_exact(length);
        fraction = r.value();
        effective_trials = 0;
    } else {
        fraction = lampeq::sigma_zero_fraction(length, trials, seed);
    }
    double scaled = fraction * std::sqrt(static_cast<double>(length));
    if (as_json) {
        json j{{"m", length},
               {"trials", effective_trials},
               {"fraction", fraction},
               {"fraction_sqrt_m", scaled},
               {"exact", exact}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << length << "\t" << effective_trials << "\t" << fraction
                  << "\t" << scaled << "\n";
    }
    return 0;
}

int run_poly(const std::string& op, const std::string& ftext,
             const std::string& gtext, bool as_json) {
    lampeq::LaurentPoly f = lampeq::parse_poly(ftext);
    lampeq::LaurentPoly g = lampeq::parse_poly(gtext);
    json j;
    std::string text;
    if (op == "add") {
        lampeq::LaurentPoly r = f + g;
        j = {{"result", lampeq::to_json(r)}};
        text = lampeq::format_poly(r);
    } else if (op == "mul") {
        lampeq::LaurentPoly r = f * g;
        j = {{"result", lampeq::to_json(r)}};
        text = lampeq::format_poly(r);
    } else if (op == "divmod") {
        auto [q, r] = lampeq::divmod(f, g);
        j = {{"q", lampeq::to_json(q)}, {"r", lampeq::to_json(r)}};
        text = "q: " + lampeq::format_poly(q) + "\nr: " + lampeq::format_poly(r);
    } else if (op == "divides") {
        bool d = lampeq::divides(f, g);
        j = {{"divides", d}};
        text = d ? "true" : "false";
    } else {
        throw CLI::ValidationError("op must be add, mul, divmod or divides");
    }
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-variable equations over the lamplighter group Z2 wr Z"};
    app.require_subcommand(1);

    SolveArgs sargs;
    auto* solve = app.add_subcommand("solve", "decide w(a,t,x) = 1");
    solve->add_option("word", sargs.word, "the equation's left-hand side")
        ->required();
    solve->add_flag("--json", sargs.as_json, "machine-readable output");
    solve->add_flag("--bound-only", sargs.bound_only,
                    "print the witness bounds without scanning");
    solve->add_option("--max-delta", sargs.max_delta,
                      "witness scan budget (default 1000000)");
    solve->add_option("--threads", sargs.threads,
                      "scan parallelism (default: machine)");

    std::string trace_word;
    bool trace_json = false, trace_tsv = false;
    auto* tracecmd = app.add_subcommand("trace", "xt-grid tracing of a word");
    tracecmd->add_option("word", trace_word)->required();
    tracecmd->add_flag("--json", trace_json);
    tracecmd->add_flag("--tsv", trace_tsv, "figure data: kind, x, t");

    std::string auto_poly;
    bool auto_json = false, auto_dot = false;
    auto* autocmd =
        app.add_subcommand("automaton", "division-by-f automaton report");
    autocmd->add_option("poly", auto_poly, "divisor polynomial")->required();
    autocmd->add_flag("--json", auto_json);
    autocmd->add_flag("--dot", auto_dot, "GraphViz output");

    std::int64_t st_len = 0, st_trials = 0;
    std::uint64_t st_seed = 0;
    bool st_json = false, st_exact = false;
    auto* statscmd =
        app.add_subcommand("stats", "sigma_x = 0 frequency on random words");
    statscmd->add_option("--length", st_len, "word length m")->required();
    statscmd->add_option("--trials", st_trials, "sample count");
    statscmd->add_option("--seed", st_seed, "rng seed")->required();
    statscmd->add_flag("--json", st_json);
    statscmd->add_flag("--exact", st_exact, "exhaustive enumeration (small m)");

    std::string poly_op, poly_f, poly_g;
    bool poly_json = false;
    auto* polycmd = app.add_subcommand("poly", "one-shot polynomial arithmetic");
    polycmd->add_option("op", poly_op, "add | mul | divmod | divides")
        ->required();
    polycmd->add_option("f", poly_f)->required();
    polycmd->add_option("g", poly_g)->required();
    polycmd->add_flag("--json", poly_json);

    try {
        app.parse(argc, argv);
        if (*solve) return run_solve(sargs);
        if (*tracecmd) return run_trace(trace_word, trace_json, trace_tsv);
        if (*autocmd) return run_automaton(auto_poly, auto_json, auto_dot);
        if (*statscmd) {
            if (!st_exact && st_trials < 1)
                throw CLI::ValidationError("--trials is required unless --exact");
            return run_stats(st_len, st_trials, st_seed, st_json, st_exact);
        }
        if (*polycmd) return run_poly(poly_op, poly_f, poly_g, poly_json);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const lampeq::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const lampeq::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
