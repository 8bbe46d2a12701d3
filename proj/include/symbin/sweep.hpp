#pragma once

// Grid verification engine. Runs every checkable inequality against the
// exact oracle over (parity, n, k) ranges, classifies each point per bound
// variant, and emits deterministic CSV / JSON reports.
//
// Classification uses a fixed 1e-9 absolute slack in log space. Margins of
// suites that difference separately rounded logs are re-derived at 128-bit
// precision before a Violation is persisted, so reported violations are
// mathematical facts, not float noise. Series and OracleCoherence compare
// two double-precision routes whose error budget is part of the claim; a
// violation there is genuine by construction and is not escalated.

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "symbin/bigfloat.hpp"
#include "symbin/dyadic.hpp"
#include "symbin/envelopes.hpp"
#include "symbin/exact.hpp"

#include "json.hpp"

namespace symbin {

inline constexpr double kLogSlack = 1e-9;

enum class SuiteId {
    Thm1Upper,
    Thm1Lower,
    Thm1Window,
    Thm2Upper,
    Thm2Lower,
    Thm2Window,
    Trapezoid,
    Series,
    Stirling,
    Central,
    OracleCoherence,
};
inline constexpr int kSuiteCount = 11;

inline const char* suite_name(SuiteId s) {
    switch (s) {
        case SuiteId::Thm1Upper: return "thm1_upper";
        case SuiteId::Thm1Lower: return "thm1_lower";
        case SuiteId::Thm1Window: return "thm1_window";
        case SuiteId::Thm2Upper: return "thm2_upper";
        case SuiteId::Thm2Lower: return "thm2_lower";
        case SuiteId::Thm2Window: return "thm2_window";
        case SuiteId::Trapezoid: return "trapezoid";
        case SuiteId::Series: return "series";
        case SuiteId::Stirling: return "stirling";
        case SuiteId::Central: return "central";
        case SuiteId::OracleCoherence: return "oracle_coherence";
    }
    return "?";
}

inline std::optional<SuiteId> parse_suite(std::string_view name) {
    for (int i = 0; i < kSuiteCount; ++i) {
        auto s = static_cast<SuiteId>(i);
        if (name == suite_name(s)) return s;
    }
    return std::nullopt;
}

// Lower-bound suites (and the trapezoid lemma whose constant they inherit)
// are report-only under the verbatim printed constants; everything else is
// asserted. --strict-paper promotes the report-only set.
inline bool suite_report_only(SuiteId s, BoundVariant v) {
    return v == BoundVariant::PaperVerbatim &&
           (s == SuiteId::Thm1Lower || s == SuiteId::Thm2Lower ||
            s == SuiteId::Trapezoid);
}

enum class CheckStatus { Pass, Violation, NotApplicable };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Violation: return "violation";
        case CheckStatus::NotApplicable: return "not_applicable";
    }
    return "?";
}

struct CheckResult {
    CheckStatus status = CheckStatus::NotApplicable;
    std::optional<double> margin;  // log-space slack, negative = violated
};

enum class KPolicyKind { All, Window, Fraction };

struct KPolicy {
    KPolicyKind kind = KPolicyKind::All;
    double r_max = 0.5;  // Fraction only
};

struct SweepSpec {
    bool include_even = true;
    bool include_odd = true;
    long n_min = 1;
    long n_max = 50;
    KPolicy k_policy;
    bool include_paper = true;
    bool include_corrected = true;
    std::array<bool, kSuiteCount> suites = make_all_suites();
    long cell_cap = 10'000'000;

    static std::array<bool, kSuiteCount> make_all_suites() {
        std::array<bool, kSuiteCount> a{};
        a.fill(true);
        return a;
    }
    bool wants(SuiteId s) const { return suites[static_cast<int>(s)]; }
};

struct SweepRecord {
    Parity parity = Parity::Even;
    long n = 1;
    long k = 0;
    BoundVariant variant = BoundVariant::PaperVerbatim;
    double log_exact = 0.0;
    double log_point = 0.0;
    std::optional<double> log_lower;
    double log_upper = 0.0;
    double log_gauss = 0.0;
    bool in_window = false;
    std::optional<double> t_minus_i;  // measured trapezoid excess, 0 <= k < n
    std::array<CheckResult, kSuiteCount> checks{};

    const CheckResult& check(SuiteId s) const { return checks[static_cast<int>(s)]; }
};

namespace detail {

inline long window_k_limit(long n) {
    // largest K with K^3 <= n^2
    long k = static_cast<long>(std::cbrt(static_cast<double>(n) * static_cast<double>(n)));
    while (static_cast<__int128>(k + 1) * (k + 1) * (k + 1) <=
           static_cast<__int128>(n) * n)
        ++k;
    while (k > 0 && static_cast<__int128>(k) * k * k > static_cast<__int128>(n) * n)
        --k;
    return k;
}

inline std::pair<long, long> k_range(Parity parity, long n, const KPolicy& pol) {
    long lo = parity == Parity::Even ? -n : -n + 1;
    long hi = n;
    if (pol.kind == KPolicyKind::Window) {
        long limit = window_k_limit(n);
        lo = std::max(lo, -limit);
        hi = std::min(hi, limit);
    } else if (pol.kind == KPolicyKind::Fraction) {
        long limit = static_cast<long>(std::floor(pol.r_max * static_cast<double>(n) + 1e-9));
        lo = std::max(lo, -limit);
        hi = std::min(hi, limit);
    }
    return {lo, hi};
}

// 128-bit recomputation of one suite margin at one point; the no-false-
// violation escalation path.
inline double escalated_margin(SuiteId s, Parity parity, long n, long k, BoundVariant v) {
    using BF = BigFloat;
    auto log_exact_hp = [&]() {
        mpz_class c = parity == Parity::Even
                          ? binomial(static_cast<unsigned long>(2 * n), n + k)
                          : binomial(static_cast<unsigned long>(2 * n - 1), n + k - 1);
        BF t(c);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
        BF e = ln2_of(BF{});
        mpfr_mul_ui(e.raw(), e.raw(),
                    static_cast<unsigned long>(parity == Parity::Even ? 2 * n : 2 * n - 1),
                    MPFR_RNDN);
        return t - e;
    };
    auto log_point_hp = [&]() {
        BF b = detail::b_value<BF>(parity, n, k);
        return -b - log(pi_of(BF{}) * BF(n)) / BF(2);
    };
    switch (s) {
        case SuiteId::Thm1Upper:
            return (log_point_hp() - log_exact_hp()).to_double();
        case SuiteId::Thm2Upper:
            return (log_point_hp() + odd_upper_slack<BF>(n) - log_exact_hp()).to_double();
        case SuiteId::Thm1Lower:
        case SuiteId::Thm2Lower:
            return (log_exact_hp() -
                    (log_point_hp() - lower_penalty_kernel<BF>(parity, n, k, v)))
                .to_double();
        case SuiteId::Thm1Window:
        case SuiteId::Thm2Window: {
            BF lg = -gaussian_exponent<BF>(n, k) - log(pi_of(BF{}) * BF(n)) / BF(2);
            BF lr = log_exact_hp() - lg;
            BF d = BF(1) / cbrt(BF(n));
            BF lo = parity == Parity::Even ? BF(1) - BF(2) * d : BF(1) - BF(3) * d;
            BF hi = parity == Parity::Even ? BF(1) + BF(2) * d : BF(1) + BF(6) * d;
            BF m = log(hi) - lr;
            if (lo > BF(0)) {
                BF m2 = lr - log(lo);
                if (m2 < m) m = m2;
            }
            return m.to_double();
        }
        case SuiteId::Trapezoid: {
            BF excess = trapezoid_T<BF>(n, k) - integral_I<BF>(BF(k) / BF(n));
            BF m = trapezoid_error_kernel<BF>(n, k, v) - excess;
            if (excess < m) m = excess;
            return m.to_double();
        }
        case SuiteId::Stirling: {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
            BF lf(f);
            mpfr_log(lf.raw(), lf.raw(), MPFR_RNDN);
            auto [lo, hi] = stirling_log_bounds<BF>(n);
            BF m = lf - lo;
            if (hi - lf < m) m = hi - lf;
            return m.to_double();
        }
        case SuiteId::Central: {
            BF le = log_exact_hp();
            auto [lo, hi] = central_log_bounds<BF>(n, parity);
            BF m = le - lo;
            if (hi - le < m) m = hi - le;
            return m.to_double();
        }
        default:
            return 0.0;  // Series / OracleCoherence never escalate
    }
}

struct RowTask {
    Parity parity;
    long n;
};

}  // namespace detail

namespace detail {

// Evaluates one (parity, n) row into records. Walks the exact coefficient
// and the atanh prefix sum incrementally so the whole row costs O(n) big
// integer work instead of O(n^2).
inline void evaluate_row(const SweepSpec& spec, Parity parity, long n,
                         std::vector<SweepRecord>& out) {
    auto [k_lo, k_hi] = k_range(parity, n, spec.k_policy);
    if (k_lo > k_hi) return;

    std::vector<BoundVariant> variants;
    if (spec.include_paper) variants.push_back(BoundVariant::PaperVerbatim);
    if (spec.include_corrected) variants.push_back(BoundVariant::CorrectedTrapezoid);
    if (variants.empty()) return;

    // Row walkers always start at the domain edge; skip forward to k_lo.
    long walk_k = parity == Parity::Even ? -n : -n + 1;
    mpz_class coeff(1);
    auto advance = [&]() {
        if (parity == Parity::Even) {
            mpz_mul_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                       static_cast<unsigned long>(n - walk_k));
            mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                            static_cast<unsigned long>(n + walk_k + 1));
        } else {
            mpz_mul_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                       static_cast<unsigned long>(n - walk_k));
            mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                            static_cast<unsigned long>(n + walk_k));
        }
        ++walk_k;
    };
    while (walk_k < k_lo) advance();

    unsigned long exp2 = static_cast<unsigned long>(parity == Parity::Even ? 2 * n : 2 * n - 1);
    double half_log_pin = 0.5 * std::log(std::numbers::pi * static_cast<double>(n));

    // Interior atanh sum for T_{k,n}; holds sum_{j=1}^{k-1} atanh(j/n) when
    // processing k >= 1. Kept in the same compensated form trapezoid_T uses
    // so the incremental value is bit-identical to a fresh evaluation.
    CompensatedSum<double> interior;

    std::optional<std::pair<double, double>> dml;
    bool n_gate = parity == Parity::Even ? n >= 3 : n >= 4;
    if (n_gate) {
        double d = 1.0 / std::cbrt(static_cast<double>(n));
        if (parity == Parity::Even)
            dml = std::make_pair(1.0 - 2.0 * d, 1.0 + 2.0 * d);
        else
            dml = std::make_pair(1.0 - 3.0 * d, 1.0 + 6.0 * d);
    }

    for (long k = k_lo; k <= k_hi; ++k) {
        double log_exact = log_dyadic(DyadicRational(coeff, exp2)).value;
        GridPoint p{parity, n, k};
        long a = std::labs(k);
        bool at_edge = parity == Parity::Even ? a == n : k == n;

        double b = detail::b_value<double>(parity, n, k);
        double log_point = -b - half_log_pin;
        double log_gauss = -detail::gaussian_exponent<double>(n, k) - half_log_pin;
        bool in_window = dml_window_contains(p);

        std::optional<double> t_minus_i;
        if (k >= 0 && k < n) {
            if (k == 0) {
                t_minus_i = 0.0;
            } else {
                CompensatedSum<double> t = interior;
                t.add(atanh_log1p(static_cast<double>(k) / static_cast<double>(n)) / 2.0);
                t_minus_i = t.value() / static_cast<double>(n) -
                            integral_I(static_cast<double>(k) / static_cast<double>(n));
            }
        }

        // Margins that do not depend on the bound variant.
        std::optional<double> m_upper;       // Thm1Upper / Thm2Upper
        std::optional<double> m_window;      // Thm1Window / Thm2Window
        std::optional<double> m_series;      // Series
        std::optional<double> m_stirling;    // Stirling (k == 0)
        std::optional<double> m_central;     // Central (k == 0)
        std::optional<double> m_coherence;   // OracleCoherence (even rows)

        if (parity == Parity::Even) {
            if (spec.wants(SuiteId::Thm1Upper)) m_upper = log_point - log_exact;
            if (spec.wants(SuiteId::OracleCoherence)) {
                double rec = log_even_via_recurrence(n, k).value;
                m_coherence = 1e-9 - std::fabs(rec - log_exact);
            }
        } else if (spec.wants(SuiteId::Thm2Upper)) {
            m_upper = log_point + detail::odd_upper_slack<double>(n) - log_exact;
        }

        bool wants_window = spec.wants(parity == Parity::Even ? SuiteId::Thm1Window
                                                              : SuiteId::Thm2Window);
        if (wants_window && in_window && dml) {
            double lr = log_exact - log_gauss;
            double m = std::log(dml->second) - lr;
            if (dml->first > 0.0) m = std::min(m, lr - std::log(dml->first));
            m_window = m;
        }

        if (spec.wants(SuiteId::Series) && a < n && 4 * a <= 3 * n) {
            double closed = b;
            double series = parity == Parity::Even
                                ? detail::b_even_series_sum<double>(n, k, {})
                                : detail::b_odd_series_sum<double>(n, k, {});
            double tol = 1e-12 * std::fabs(closed);
            if (std::fabs(closed) < 1e-3) tol = std::max(tol, 1e-14);
            m_series = tol - std::fabs(closed - series);
        }

        if (k == 0) {
            if (spec.wants(SuiteId::Stirling)) {
                mpz_class f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
                BigFloat t(f);
                mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
                double logfact = t.to_double();
                auto [lo, hi] = detail::stirling_log_bounds<double>(n);
                m_stirling = std::min(logfact - lo, hi - logfact);
            }
            if (spec.wants(SuiteId::Central)) {
                auto [lo, hi] = detail::central_log_bounds<double>(n, parity);
                m_central = std::min(log_exact - lo, hi - log_exact);
            }
        }

        for (BoundVariant v : variants) {
            SweepRecord rec;
            rec.parity = parity;
            rec.n = n;
            rec.k = k;
            rec.variant = v;
            rec.log_exact = log_exact;
            rec.log_point = log_point;
            rec.log_gauss = log_gauss;
            rec.in_window = in_window;
            rec.t_minus_i = t_minus_i;

            Envelope env = [&] {
                Envelope e;
                e.point = p;
                e.variant = v;
                e.log_point = log_point;
                if (at_edge) {
                    double exact_closed =
                        parity == Parity::Even
                            ? -2.0 * static_cast<double>(n) * std::numbers::ln2
                            : -(2.0 * static_cast<double>(n) - 1.0) * std::numbers::ln2;
                    e.log_lower = exact_closed;
                    e.log_upper = exact_closed;
                    e.lower_available = false;
                } else {
                    e.log_upper = parity == Parity::Even
                                      ? log_point
                                      : log_point + detail::odd_upper_slack<double>(n);
                    e.log_lower =
                        log_point - detail::lower_penalty_kernel<double>(parity, n, k, v);
                    e.lower_available = true;
                }
                return e;
            }();
            rec.log_lower = env.log_lower;
            rec.log_upper = env.log_upper;

            auto classify = [&](SuiteId s, std::optional<double> margin, bool escalate) {
                CheckResult& cr = rec.checks[static_cast<int>(s)];
                if (!spec.wants(s) || !margin) return;
                double m = *margin;
                bool pass = (s == SuiteId::Series || s == SuiteId::OracleCoherence)
                                ? m >= 0.0
                                : m >= -kLogSlack;
                if (!pass && escalate) {
                    m = detail::escalated_margin(s, parity, n, k, v);
                    pass = m >= -kLogSlack;
                }
                cr.status = pass ? CheckStatus::Pass : CheckStatus::Violation;
                cr.margin = m;
            };

            if (parity == Parity::Even) {
                classify(SuiteId::Thm1Upper, m_upper, true);
                if (!at_edge && spec.wants(SuiteId::Thm1Lower))
                    classify(SuiteId::Thm1Lower,
                             log_exact - (log_point -
                                          detail::lower_penalty_kernel<double>(parity, n, k, v)),
                             true);
                classify(SuiteId::Thm1Window, m_window, true);
                classify(SuiteId::OracleCoherence, m_coherence, false);
            } else {
                classify(SuiteId::Thm2Upper, m_upper, true);
                if (!at_edge && spec.wants(SuiteId::Thm2Lower))
                    classify(SuiteId::Thm2Lower,
                             log_exact - (log_point -
                                          detail::lower_penalty_kernel<double>(parity, n, k, v)),
                             true);
                classify(SuiteId::Thm2Window, m_window, true);
            }
            if (t_minus_i && spec.wants(SuiteId::Trapezoid)) {
                double bound = detail::trapezoid_error_kernel<double>(n, k, v);
                classify(SuiteId::Trapezoid,
                         std::min(*t_minus_i, bound - *t_minus_i), true);
            }
            classify(SuiteId::Series, m_series, false);
            classify(SuiteId::Stirling, m_stirling, true);
            classify(SuiteId::Central, m_central, true);

            out.push_back(std::move(rec));
        }

        if (k >= 1 && k < n)
            interior.add(atanh_log1p(static_cast<double>(k) / static_cast<double>(n)));
        if (k < k_hi) advance();
    }
}

}  // namespace detail

inline long count_cells(const SweepSpec& spec) {
    long cells = 0;
    int nvariants = (spec.include_paper ? 1 : 0) + (spec.include_corrected ? 1 : 0);
    for (Parity parity : {Parity::Even, Parity::Odd}) {
        if (parity == Parity::Even ? !spec.include_even : !spec.include_odd) continue;
        for (long n = spec.n_min; n <= spec.n_max; ++n) {
            auto [lo, hi] = detail::k_range(parity, n, spec.k_policy);
            if (lo <= hi) cells += (hi - lo + 1) * nvariants;
        }
    }
    return cells;
}

// One record per (parity, n, k, variant), lexicographic in that order.
// Output is a pure function of the spec: the worker count only changes how
// rows are scheduled, never what any row computes.
inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned jobs = 0) {
    if (spec.n_min < 1 || spec.n_min > spec.n_max)
        throw std::domain_error("run_sweep: need 1 <= n_min <= n_max");
    if (spec.k_policy.kind == KPolicyKind::Fraction &&
        !(spec.k_policy.r_max > 0.0 && spec.k_policy.r_max < 1.0))
        throw std::domain_error("run_sweep: Fraction r_max must lie in (0,1)");
    long cells = count_cells(spec);
    if (cells > spec.cell_cap)
        throw ResourceError("run_sweep: grid of " + std::to_string(cells) +
                            " cells exceeds cap of " + std::to_string(spec.cell_cap));

    std::vector<detail::RowTask> tasks;
    for (Parity parity : {Parity::Even, Parity::Odd}) {
        if (parity == Parity::Even ? !spec.include_even : !spec.include_odd) continue;
        for (long n = spec.n_min; n <= spec.n_max; ++n) tasks.push_back({parity, n});
    }

    std::vector<std::vector<SweepRecord>> results(tasks.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<size_t>(tasks.size(), 1));

    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            detail::evaluate_row(spec, tasks[i].parity, tasks[i].n, results[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                detail::evaluate_row(spec, tasks[i].parity, tasks[i].n, results[i]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<SweepRecord> merged;
    merged.reserve(static_cast<size_t>(cells));
    for (auto& r : results)
        for (auto& rec : r) merged.push_back(std::move(rec));
    return merged;
}

// ---------------------------------------------------------------------------
// Summaries

struct RecordKey {
    Parity parity = Parity::Even;
    long n = 0;
    long k = 0;
    BoundVariant variant = BoundVariant::PaperVerbatim;
};

struct SuiteStats {
    SuiteId suite = SuiteId::Thm1Upper;
    long passes = 0;
    long violations_asserted = 0;
    long violations_report_only = 0;
    long not_applicable = 0;
    std::optional<double> worst_margin;
    RecordKey worst_key;
    std::vector<RecordKey> sample_violations;  // first few, record order

    long violations() const { return violations_asserted + violations_report_only; }
};

struct SuiteReport {
    std::vector<SuiteStats> suites;  // requested suites, enum order
    long total_records = 0;
    double max_point_rel_err = 0.0;
    double max_trapezoid_excess = 0.0;
    long violations_asserted_total = 0;
    long violations_report_only_total = 0;
};

inline constexpr size_t kMaxSampleViolations = 25;

inline SuiteReport summarize(const std::vector<SweepRecord>& records,
                             const SweepSpec& spec) {
    SuiteReport rep;
    rep.total_records = static_cast<long>(records.size());
    for (int i = 0; i < kSuiteCount; ++i)
        if (spec.suites[i]) {
            SuiteStats st;
            st.suite = static_cast<SuiteId>(i);
            rep.suites.push_back(st);
        }
    for (const SweepRecord& rec : records) {
        rep.max_point_rel_err = std::max(
            rep.max_point_rel_err, std::fabs(std::expm1(rec.log_exact - rec.log_point)));
        if (rec.t_minus_i)
            rep.max_trapezoid_excess = std::max(rep.max_trapezoid_excess, *rec.t_minus_i);
        for (SuiteStats& st : rep.suites) {
            const CheckResult& cr = rec.check(st.suite);
            RecordKey key{rec.parity, rec.n, rec.k, rec.variant};
            switch (cr.status) {
                case CheckStatus::NotApplicable:
                    ++st.not_applicable;
                    break;
                case CheckStatus::Pass:
                    ++st.passes;
                    break;
                case CheckStatus::Violation:
                    if (suite_report_only(st.suite, rec.variant)) {
                        ++st.violations_report_only;
                        ++rep.violations_report_only_total;
                    } else {
                        ++st.violations_asserted;
                        ++rep.violations_asserted_total;
                    }
                    if (st.sample_violations.size() < kMaxSampleViolations)
                        st.sample_violations.push_back(key);
                    break;
            }
            if (cr.margin && (!st.worst_margin || *cr.margin < *st.worst_margin)) {
                st.worst_margin = cr.margin;
                st.worst_key = key;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Emission

// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline constexpr const char* kCsvHeader =
    "parity,n,k,variant,log_exact,log_point,log_lower,log_upper,log_gauss,"
    "in_window,suite,status,margin";

inline void emit_csv(const std::vector<SweepRecord>& records, const SweepSpec& spec,
                     std::ostream& os) {
    os << kCsvHeader << '\n';
    for (const SweepRecord& rec : records) {
        std::string prefix;
        prefix += parity_name(rec.parity);
        prefix += ',';
        prefix += std::to_string(rec.n);
        prefix += ',';
        prefix += std::to_string(rec.k);
        prefix += ',';
        prefix += variant_name(rec.variant);
        prefix += ',';
        prefix += format_double(rec.log_exact);
        prefix += ',';
        prefix += format_double(rec.log_point);
        prefix += ',';
        prefix += rec.log_lower ? format_double(*rec.log_lower) : std::string("-inf");
        prefix += ',';
        prefix += format_double(rec.log_upper);
        prefix += ',';
        prefix += format_double(rec.log_gauss);
        prefix += ',';
        prefix += rec.in_window ? '1' : '0';
        for (int i = 0; i < kSuiteCount; ++i) {
            if (!spec.suites[i]) continue;
            auto s = static_cast<SuiteId>(i);
            const CheckResult& cr = rec.check(s);
            os << prefix << ',' << suite_name(s) << ',' << status_name(cr.status) << ',';
            if (cr.margin) os << format_double(*cr.margin);
            os << '\n';
        }
    }
}

inline void emit_csv_file(const std::vector<SweepRecord>& records,
                          const SweepSpec& spec, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    emit_csv(records, spec, f);
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

inline nlohmann::ordered_json spec_to_json(const SweepSpec& spec) {
    nlohmann::ordered_json j;
    std::vector<std::string> parities;
    if (spec.include_even) parities.push_back("even");
    if (spec.include_odd) parities.push_back("odd");
    j["parities"] = parities;
    j["n_min"] = spec.n_min;
    j["n_max"] = spec.n_max;
    switch (spec.k_policy.kind) {
        case KPolicyKind::All: j["k_policy"] = "all"; break;
        case KPolicyKind::Window: j["k_policy"] = "window"; break;
        case KPolicyKind::Fraction:
            j["k_policy"] = "fraction";
            j["r_max"] = spec.k_policy.r_max;
            break;
    }
    std::vector<std::string> variants;
    if (spec.include_paper) variants.push_back("paper");
    if (spec.include_corrected) variants.push_back("corrected");
    j["variants"] = variants;
    std::vector<std::string> suites;
    for (int i = 0; i < kSuiteCount; ++i)
        if (spec.suites[i]) suites.push_back(suite_name(static_cast<SuiteId>(i)));
    j["suites"] = suites;
    return j;
}

inline nlohmann::ordered_json report_to_json(const SuiteReport& rep,
                                             const SweepSpec& spec) {
    nlohmann::ordered_json j;
    j["spec"] = spec_to_json(spec);
    j["records"] = rep.total_records;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const SuiteStats& st : rep.suites) {
        nlohmann::ordered_json s;
        s["suite"] = suite_name(st.suite);
        s["passes"] = st.passes;
        s["violations"] = st.violations();
        s["violations_asserted"] = st.violations_asserted;
        s["violations_report_only"] = st.violations_report_only;
        s["not_applicable"] = st.not_applicable;
        if (st.worst_margin) {
            s["worst_margin"] = *st.worst_margin;
            nlohmann::ordered_json wp;
            wp["parity"] = parity_name(st.worst_key.parity);
            wp["n"] = st.worst_key.n;
            wp["k"] = st.worst_key.k;
            wp["variant"] = variant_name(st.worst_key.variant);
            s["worst_point"] = wp;
        } else {
            s["worst_margin"] = nullptr;
            s["worst_point"] = nullptr;
        }
        suites.push_back(s);
    }
    j["suites"] = suites;
    j["max_point_rel_err"] = rep.max_point_rel_err;
    j["max_trapezoid_excess"] = rep.max_trapezoid_excess;
    j["violations_asserted_total"] = rep.violations_asserted_total;
    j["violations_report_only_total"] = rep.violations_report_only_total;
    return j;
}

inline void emit_json(const SuiteReport& rep, const SweepSpec& spec, std::ostream& os) {
    os << report_to_json(rep, spec).dump(2) << '\n';
}

inline void emit_json_file(const SuiteReport& rep, const SweepSpec& spec,
                           const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    emit_json(rep, spec, f);
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace symbin
