// symbin CLI: evaluate, certify, sweep, verify, bench.
//
// Exit codes: 0 success / no violations in asserted suites, 1 violations
// under strict accounting, 2 usage or domain error, 3 I/O error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symbin/symbin.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using symbin::BoundVariant;
using symbin::GridPoint;
using symbin::Parity;
using symbin::SuiteId;
using json = nlohmann::ordered_json;

std::string fmt(double v) { return symbin::format_double(v); }

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw std::domain_error("parity must be 'even' or 'odd'");
}

// Suite selector names: exact suite ids plus the groups
// all / thm1 / thm2 / window / oracle.
std::array<bool, symbin::kSuiteCount> parse_suites(const std::vector<std::string>& names) {
    std::array<bool, symbin::kSuiteCount> suites{};
    if (names.empty()) {
        suites.fill(true);
        return suites;
    }
    auto mark = [&](SuiteId s) { suites[static_cast<int>(s)] = true; };
    for (const std::string& name : names) {
        if (name == "all") {
            suites.fill(true);
        } else if (name == "thm1") {
            mark(SuiteId::Thm1Upper);
            mark(SuiteId::Thm1Lower);
            mark(SuiteId::Thm1Window);
        } else if (name == "thm2") {
            mark(SuiteId::Thm2Upper);
            mark(SuiteId::Thm2Lower);
            mark(SuiteId::Thm2Window);
        } else if (name == "window") {
            mark(SuiteId::Thm1Window);
            mark(SuiteId::Thm2Window);
        } else if (name == "oracle") {
            mark(SuiteId::OracleCoherence);
        } else if (auto s = symbin::parse_suite(name)) {
            mark(*s);
        } else {
            throw std::domain_error("unknown suite '" + name + "'");
        }
    }
    return suites;
}

// ---------------------------------------------------------------------------
// eval

struct EvalOpts {
    long l = 0;
    long j = 0;
    bool as_json = false;
};

int run_eval(const EvalOpts& o) {
    if (o.l < 1) throw std::domain_error("eval: --l must be >= 1");
    if (o.j > o.l || o.j < -o.l)
        throw std::domain_error("eval: need |j| <= l");

    symbin::DyadicRational exact = symbin::walk_prob(o.l, o.j);
    if (exact.is_zero()) {
        // parity mismatch: l + j odd
        if (o.as_json) {
            json out;
            out["l"] = o.l;
            out["j"] = o.j;
            out["exact_dyadic"] = "0/2^0";
            out["exact"] = 0.0;
            out["note"] = "l + j is odd; the walk cannot reach j in l steps";
            std::cout << out.dump(2) << "\n";
        } else {
            std::printf("P(S_%ld = %ld) = 0 exactly (l + j is odd; unreachable offset)\n",
                        o.l, o.j);
        }
        return kExitOk;
    }

    GridPoint p = o.l % 2 == 0 ? GridPoint{Parity::Even, o.l / 2, o.j / 2}
                               : GridPoint{Parity::Odd, (o.l + 1) / 2, (o.j + 1) / 2};
    symbin::LogProb le = symbin::log_dyadic(exact);
    symbin::LogProb pt = symbin::approx_prob(p);
    symbin::LogProb ga = symbin::gaussian_prob(p);
    symbin::Certificate cp = symbin::certificate(p, BoundVariant::PaperVerbatim);
    symbin::Certificate cc = symbin::certificate(p, BoundVariant::CorrectedTrapezoid);
    double rel_point = std::expm1(pt.value - le.value);
    double rel_gauss = std::expm1(ga.value - le.value);

    if (o.as_json) {
        auto env_json = [](const symbin::Certificate& c) {
            json e;
            e["log_lower"] = c.env.log_lower ? json(*c.env.log_lower) : json(nullptr);
            e["log_upper"] = c.env.log_upper;
            e["lower_available"] = c.env.lower_available;
            e["rel_err_guarantee"] = c.rel_err_guarantee;
            return e;
        };
        json out;
        out["l"] = o.l;
        out["j"] = o.j;
        out["parity"] = symbin::parity_name(p.parity);
        out["n"] = p.n;
        out["k"] = p.k;
        out["exact_dyadic"] = exact.to_string();
        out["exact"] = exact.to_double();
        out["log_exact"] = le.value;
        out["point"] = std::exp(pt.value);
        out["log_point"] = pt.value;
        out["gauss"] = std::exp(ga.value);
        out["log_gauss"] = ga.value;
        out["envelope_paper"] = env_json(cp);
        out["envelope_corrected"] = env_json(cc);
        out["rel_err_point"] = rel_point;
        out["rel_err_gauss"] = rel_gauss;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::printf("P(S_%ld = %ld)   [parity=%s n=%ld k=%ld]\n", o.l, o.j,
                symbin::parity_name(p.parity), p.n, p.k);
    std::printf("  exact:     %s = %s\n", exact.to_string().c_str(),
                fmt(exact.to_double()).c_str());
    std::printf("  point:     %s   (log %s)\n", fmt(std::exp(pt.value)).c_str(),
                fmt(pt.value).c_str());
    std::printf("  gaussian:  %s   (log %s)\n", fmt(std::exp(ga.value)).c_str(),
                fmt(ga.value).c_str());
    auto print_env = [](const char* name, const symbin::Certificate& c) {
        std::printf("  envelope %-10s [%s, %s]   rel err guarantee %s\n", name,
                    fmt(std::exp(c.env.log_lower.value())).c_str(),
                    fmt(std::exp(c.env.log_upper)).c_str(),
                    fmt(c.rel_err_guarantee).c_str());
    };
    print_env("paper:", cp);
    print_env("corrected:", cc);
    std::printf("  rel err of point estimate:    %s\n", fmt(rel_point).c_str());
    std::printf("  rel err of gaussian estimate: %s\n", fmt(rel_gauss).c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOpts {
    long n = 0;
    long k = 0;
    std::string parity = "even";
    std::string variant = "corrected";
    bool text = false;
};

int run_certify(const CertifyOpts& o) {
    GridPoint p{parse_parity(o.parity), o.n, o.k};
    BoundVariant v;
    if (o.variant == "paper")
        v = BoundVariant::PaperVerbatim;
    else if (o.variant == "corrected")
        v = BoundVariant::CorrectedTrapezoid;
    else
        throw std::domain_error("variant must be 'paper' or 'corrected'");
    symbin::Certificate c = symbin::certificate(p, v);

    if (o.text) {
        std::printf("certificate for parity=%s n=%ld k=%ld (%s variant)\n",
                    symbin::parity_name(p.parity), p.n, p.k, symbin::variant_name(v));
        std::printf("  log point: %s\n", fmt(c.env.log_point).c_str());
        std::printf("  log lower: %s%s\n",
                    c.env.log_lower ? fmt(*c.env.log_lower).c_str() : "-inf",
                    c.env.lower_available ? "" : "   (boundary identity: exact value)");
        std::printf("  log upper: %s\n", fmt(c.env.log_upper).c_str());
        std::printf("  rel err guarantee: %s\n", fmt(c.rel_err_guarantee).c_str());
        return kExitOk;
    }
    json out;
    out["parity"] = symbin::parity_name(p.parity);
    out["n"] = p.n;
    out["k"] = p.k;
    out["variant"] = symbin::variant_name(v);
    out["log_point"] = c.env.log_point;
    out["log_lower"] = c.env.log_lower ? json(*c.env.log_lower) : json(nullptr);
    out["log_upper"] = c.env.log_upper;
    out["rel_err_guarantee"] = c.rel_err_guarantee;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep / verify

struct GridOpts {
    std::string parity = "both";
    long n_min = 1;
    long n_max = 50;
    std::string k_policy = "all";
    double r_max = 0.5;
    std::string variant = "both";
    std::vector<std::string> suites;
    long cell_cap = 10'000'000;
    unsigned jobs = 0;
    bool strict_paper = false;
};

symbin::SweepSpec make_spec(const GridOpts& g) {
    symbin::SweepSpec spec;
    if (g.parity == "even") {
        spec.include_odd = false;
    } else if (g.parity == "odd") {
        spec.include_even = false;
    } else if (g.parity != "both") {
        throw std::domain_error("parity must be 'even', 'odd' or 'both'");
    }
    spec.n_min = g.n_min;
    spec.n_max = g.n_max;
    if (g.k_policy == "all")
        spec.k_policy.kind = symbin::KPolicyKind::All;
    else if (g.k_policy == "window")
        spec.k_policy.kind = symbin::KPolicyKind::Window;
    else if (g.k_policy == "fraction")
        spec.k_policy = {symbin::KPolicyKind::Fraction, g.r_max};
    else
        throw std::domain_error("k-policy must be 'all', 'window' or 'fraction'");
    if (g.variant == "paper") {
        spec.include_corrected = false;
    } else if (g.variant == "corrected") {
        spec.include_paper = false;
    } else if (g.variant != "both") {
        throw std::domain_error("variant must be 'paper', 'corrected' or 'both'");
    }
    spec.suites = parse_suites(g.suites);
    spec.cell_cap = g.cell_cap;
    return spec;
}

// Violations in suites that gate the exit status. Report-only suites
// (paper-variant lower bounds and trapezoid lemma) only count under
// --strict-paper.
long exit_gating_violations(const symbin::SuiteReport& rep, bool strict_paper) {
    return rep.violations_asserted_total +
           (strict_paper ? rep.violations_report_only_total : 0);
}

struct SweepOpts {
    GridOpts grid;
    std::string out = "-";
};

int run_sweep_cmd(const SweepOpts& o) {
    symbin::SweepSpec spec = make_spec(o.grid);
    auto records = symbin::run_sweep(spec, o.grid.jobs);
    if (o.out == "-")
        symbin::emit_csv(records, spec, std::cout);
    else
        symbin::emit_csv_file(records, spec, o.out);
    auto rep = symbin::summarize(records, spec);
    return exit_gating_violations(rep, o.grid.strict_paper) > 0 ? kExitViolations
                                                                : kExitOk;
}

struct VerifyOpts {
    GridOpts grid;
    bool as_json = false;
};

int run_verify(const VerifyOpts& o) {
    symbin::SweepSpec spec = make_spec(o.grid);
    auto records = symbin::run_sweep(spec, o.grid.jobs);
    auto rep = symbin::summarize(records, spec);

    if (o.as_json) {
        symbin::emit_json(rep, spec, std::cout);
    } else {
        std::printf("verification: parity=%s n=%ld..%ld k=%s variant=%s records=%ld\n",
                    o.grid.parity.c_str(), spec.n_min, spec.n_max,
                    o.grid.k_policy.c_str(), o.grid.variant.c_str(), rep.total_records);
        std::printf("%-17s %9s %6s %9s %12s %6s   %-22s %s\n", "suite", "passes",
                    "viol", "asserted", "report-only", "n/a", "worst margin", "at");
        for (const symbin::SuiteStats& st : rep.suites) {
            std::string worst = "-";
            std::string at;
            if (st.worst_margin) {
                worst = fmt(*st.worst_margin);
                at = std::string(symbin::parity_name(st.worst_key.parity)) +
                     " n=" + std::to_string(st.worst_key.n) +
                     " k=" + std::to_string(st.worst_key.k) + " " +
                     symbin::variant_name(st.worst_key.variant);
            }
            std::printf("%-17s %9ld %6ld %9ld %12ld %6ld   %-22s %s\n",
                        symbin::suite_name(st.suite), st.passes, st.violations(),
                        st.violations_asserted, st.violations_report_only,
                        st.not_applicable, worst.c_str(), at.c_str());
        }
        for (const symbin::SuiteStats& st : rep.suites) {
            if (st.sample_violations.empty()) continue;
            std::printf("violations in %s (first %zu):\n", symbin::suite_name(st.suite),
                        st.sample_violations.size());
            for (const symbin::RecordKey& key : st.sample_violations) {
                const char* tag = symbin::suite_report_only(st.suite, key.variant) &&
                                          !o.grid.strict_paper
                                      ? "report-only"
                                      : "asserted";
                std::printf("  %s n=%ld k=%ld variant=%s [%s]\n",
                            symbin::parity_name(key.parity), key.n, key.k,
                            symbin::variant_name(key.variant), tag);
            }
        }
        std::printf("max point rel err:       %s\n", fmt(rep.max_point_rel_err).c_str());
        std::printf("max trapezoid excess:    %s\n",
                    fmt(rep.max_trapezoid_excess).c_str());
        std::printf("asserted violations:     %ld\n", rep.violations_asserted_total);
        std::printf("report-only violations:  %ld\n", rep.violations_report_only_total);
    }
    return exit_gating_violations(rep, o.grid.strict_paper) > 0 ? kExitViolations
                                                                : kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
    long reps = 100;
    long n_max = 1'000'000;
};

int run_bench(const BenchOpts& o) {
    using clock = std::chrono::steady_clock;
    if (o.reps < 1) throw std::domain_error("bench: --reps must be >= 1");

    volatile double sink = 0.0;
    auto time_approx = [&](long n) {
        GridPoint p{Parity::Even, n, n / 3};
        long iters = o.reps * 1000;
        auto t0 = clock::now();
        for (long i = 0; i < iters; ++i) sink = sink + symbin::approx_prob(p).value;
        auto t1 = clock::now();
        return std::chrono::duration<double, std::nano>(t1 - t0).count() / iters;
    };
    auto time_exact = [&](long n) {
        long iters = std::max<long>(1, o.reps / 10);
        auto t0 = clock::now();
        for (long i = 0; i < iters; ++i)
            sink = sink + symbin::exact_even(n, n / 3).to_double();
        auto t1 = clock::now();
        return std::chrono::duration<double, std::nano>(t1 - t0).count() / iters;
    };

    std::printf("approx_prob (closed-form exponent, O(1)):\n");
    double amin = 0, amax = 0;
    double approx_at_1e4 = 0;
    for (long n : {1000L, 10'000L, 100'000L, 1'000'000L}) {
        if (n > o.n_max) continue;
        double ns = time_approx(n);
        if (amin == 0 || ns < amin) amin = ns;
        if (ns > amax) amax = ns;
        if (n == 10'000) approx_at_1e4 = ns;
        std::printf("  n=%-8ld %10.1f ns/op\n", n, ns);
    }
    std::printf("exact_even (big-integer binomial):\n");
    double exact_at_1e4 = 0;
    for (long n : {100L, 1000L, 10'000L}) {
        if (n > o.n_max) continue;
        double ns = time_exact(n);
        if (n == 10'000) exact_at_1e4 = ns;
        std::printf("  n=%-8ld %10.1f ns/op\n", n, ns);
    }
    if (amin > 0)
        std::printf("approx_prob flatness across n (max/min): %.3f\n", amax / amin);
    if (approx_at_1e4 > 0 && exact_at_1e4 > 0)
        std::printf("speedup approx vs exact at n=10000: %.0fx\n",
                    exact_at_1e4 / approx_at_1e4);
    return kExitOk;
}

void add_grid_flags(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--parity", g.parity, "Grid parity: even, odd or both")
        ->default_str("both");
    cmd->add_option("--n-min", g.n_min, "Smallest n (>= 1)")->default_str("1");
    cmd->add_option("--n-max", g.n_max, "Largest n")->default_str("50");
    cmd->add_option("--k-policy", g.k_policy,
                    "Which k to visit per n: all, window (|k|^3 <= n^2) or fraction")
        ->default_str("all");
    cmd->add_option("--r-max", g.r_max, "Fraction policy: visit |k| <= r_max * n")
        ->default_str("0.5");
    cmd->add_option("--variant", g.variant, "Bound variant: paper, corrected or both")
        ->default_str("both");
    cmd->add_option("--suite", g.suites,
                    "Suites to evaluate (repeatable): all, thm1, thm2, window, oracle, "
                    "or exact ids like thm1_lower, trapezoid, series, stirling, central, "
                    "oracle_coherence")
        ->take_all();
    cmd->add_option("--cell-cap", g.cell_cap, "Abort if the grid exceeds this many cells")
        ->default_str("10000000");
    cmd->add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)")
        ->default_str("0");
    cmd->add_flag("--strict-paper", g.strict_paper,
                  "Let paper-variant lower-bound/trapezoid violations fail the exit status");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "symbin: symmetric binomial (random walk) point probabilities, exactly and via "
        "a wide-range corrected-exponent approximation, with certified error envelopes"};
    app.name("symbin");
    app.require_subcommand(1);

    EvalOpts eval_opts;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Evaluate P(S_l = j): exact dyadic value, point and Gaussian estimates, "
                "envelopes and relative errors");
    eval_cmd->add_option("--l", eval_opts.l, "Number of steps (>= 1)")->required();
    eval_cmd->add_option("--j", eval_opts.j, "Walk offset")->required();
    eval_cmd->add_flag("--json", eval_opts.as_json, "Emit JSON instead of text");

    CertifyOpts cert_opts;
    CLI::App* cert_cmd = app.add_subcommand(
        "certify", "Emit the certified envelope for one grid point as JSON");
    cert_cmd->add_option("--n", cert_opts.n, "Half step count n (>= 1)")->required();
    cert_cmd->add_option("--k", cert_opts.k, "Grid offset k")->required();
    cert_cmd->add_option("--parity", cert_opts.parity, "Grid parity: even or odd")
        ->required();
    cert_cmd->add_option("--variant", cert_opts.variant,
                         "Bound variant: paper or corrected")
        ->default_str("corrected");
    cert_cmd->add_flag("--text", cert_opts.text, "Human-readable output instead of JSON");

    SweepOpts sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Run the verification grid and write one CSV row per (point, suite)");
    add_grid_flags(sweep_cmd, sweep_opts.grid);
    sweep_cmd->add_option("--out", sweep_opts.out, "Output CSV path ('-' = stdout)")
        ->default_str("-");

    VerifyOpts verify_opts;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run the verification grid and print a per-suite pass/violation report");
    add_grid_flags(verify_cmd, verify_opts.grid);
    verify_cmd->add_flag("--json", verify_opts.as_json, "Emit the report as JSON");

    BenchOpts bench_opts;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "Time approx_prob and exact_even and report the speedup ratio");
    bench_cmd->add_option("--reps", bench_opts.reps, "Repetition factor")
        ->default_str("100");
    bench_cmd->add_option("--n-max", bench_opts.n_max, "Skip benchmark points above this n")
        ->default_str("1000000");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return run_eval(eval_opts);
        if (app.got_subcommand(cert_cmd)) return run_certify(cert_opts);
        if (app.got_subcommand(sweep_cmd)) return run_sweep_cmd(sweep_opts);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_opts);
        if (app.got_subcommand(bench_cmd)) return run_bench(bench_opts);
    } catch (const symbin::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const symbin::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
