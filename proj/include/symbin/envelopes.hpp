#pragma once

// Certified brackets and envelopes. Everything here evaluates a finite-n
// inequality with explicit constants:
//
//   stirling_bounds   sqrt(2 pi n)(n/e)^n e^{1/(12n+1)} < n! < ... e^{1/(12n)}
//   central_bounds    e^{-1/(7n)} / sqrt(pi n) < a_{0,n} < e^{-1/(9n)} / sqrt(pi n)
//                     (odd rows: factors e^{-1/n} and e^{2/(3n)})
//   envelope          upper:  a <= point            (even; odd gets e^{2/(3n)})
//                     lower:  a >  point * e^{-1/(7n) - rho/(3(1-r^2)^2 n)}
//                     with r = |k|/n, rho = r^4 (PaperVerbatim) or r^2
//                     (CorrectedTrapezoid); odd rows use 1/n in place of 1/(7n).
//   dml_bounds        exact/gaussian ratio window (1 -+ 2 n^{-1/3}) for even,
//                     (1 - 3 n^{-1/3}, 1 + 6 n^{-1/3}) for odd, valid when
//                     |k|^3 <= n^2 and n >= 3 (even) / n >= 4 (odd).
//
// At |k| = n (even) and k = n (odd) the point estimate equals the exact
// probability, the theorem lower bound does not apply, and the envelope
// collapses to the exact value.

#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>

#include "symbin/approx.hpp"
#include "symbin/real.hpp"
#include "symbin/types.hpp"

namespace symbin {

namespace detail {

template <class Real>
std::pair<Real, Real> stirling_log_bounds(long n) {
    using std::log;
    Real base = log(Real(2) * pi_of(Real{}) * Real(n)) / Real(2) +
                Real(n) * (log(Real(n)) - Real(1));
    return {base + Real(1) / Real(12 * n + 1), base + Real(1) / Real(12 * n)};
}

template <class Real>
std::pair<Real, Real> central_log_bounds(long n, Parity parity) {
    using std::log;
    Real base = -log(pi_of(Real{}) * Real(n)) / Real(2);
    if (parity == Parity::Even)
        return {base - Real(1) / Real(7 * n), base - Real(1) / Real(9 * n)};
    return {base - Real(1) / Real(n), base + Real(2) / Real(3 * n)};
}

// rho / (6 (1-r^2)^2 n^2) with r = k/n; 1 - r^2 comes from the exact
// integer product (n-k)(n+k) so the bound stays tight near the edge.
template <class Real>
Real trapezoid_error_kernel(long n, long k, BoundVariant v) {
    if (k == 0) return Real(0);
    Real r2 = Real(k * k) / Real(n * n);
    Real omr2 = Real((n - k) * (n + k)) / Real(n * n);
    Real rho = v == BoundVariant::PaperVerbatim ? r2 * r2 : r2;
    return rho / (Real(6) * omr2 * omr2 * Real(n) * Real(n));
}

// The full exponent subtracted from the point estimate in Theorem (b):
// 1/(7n) (even) or 1/n (odd), plus 2n * trapezoid error = rho/(3(1-r^2)^2 n).
template <class Real>
Real lower_penalty_kernel(Parity parity, long n, long k, BoundVariant v) {
    long a = std::labs(k);
    Real head = parity == Parity::Even ? Real(1) / Real(7 * n) : Real(1) / Real(n);
    if (a == 0) return head;
    Real r2 = Real(a * a) / Real(n * n);
    Real omr2 = Real((n - a) * (n + a)) / Real(n * n);
    Real rho = v == BoundVariant::PaperVerbatim ? r2 * r2 : r2;
    return head + rho / (Real(3) * omr2 * omr2 * Real(n));
}

template <class Real>
Real odd_upper_slack(long n) {
    return Real(2) / Real(3 * n);
}

}  // namespace detail

// (log lower, log upper) bracket of log(n!).
inline std::pair<double, double> stirling_bounds(long n) {
    if (n < 1) throw std::domain_error("stirling_bounds: n must be >= 1");
    return detail::stirling_log_bounds<double>(n);
}

// (log lower, log upper) bracket of the central term log a_{0,n} (even)
// or log a*_{0,n} (odd).
inline std::pair<double, double> central_bounds(long n, Parity parity) {
    if (n < 1) throw std::domain_error("central_bounds: n must be >= 1");
    return detail::central_log_bounds<double>(n, parity);
}

// Upper bound on T_{k,n} - I(k/n) for 0 <= k < n, r = k/n:
//   PaperVerbatim:      r^4 / (6 (1-r^2)^2 n^2)   (as printed; fails, e.g. n=4, k=2)
//   CorrectedTrapezoid: r^2 / (6 (1-r^2)^2 n^2)   (dominates the measured excess)
template <class Real = double>
Real trapezoid_error_bound(long n, long k, BoundVariant v) {
    if (n < 1 || k < 0 || k >= n)
        throw std::domain_error("trapezoid_error_bound: need 0 <= k < n");
    return detail::trapezoid_error_kernel<Real>(n, k, v);
}

// Certified (log_lower, log_point, log_upper) triple for one grid point.
// lower_available is false exactly at the boundary identity points, where
// log_lower = log_upper = the exact log probability.
struct Envelope {
    GridPoint point;
    std::optional<double> log_lower;  // disengaged = minus infinity
    double log_point = 0.0;
    double log_upper = 0.0;
    BoundVariant variant = BoundVariant::CorrectedTrapezoid;
    bool lower_available = true;
};

inline Envelope envelope(const GridPoint& p, BoundVariant v) {
    require_valid(p);
    LogProb pt = approx_prob(p);
    bool at_edge = p.parity == Parity::Even ? std::labs(p.k) == p.n : p.k == p.n;
    if (at_edge) {
        double exact_log = p.parity == Parity::Even
                               ? -2.0 * static_cast<double>(p.n) * std::numbers::ln2
                               : -(2.0 * static_cast<double>(p.n) - 1.0) * std::numbers::ln2;
        return {p, exact_log, pt.value, exact_log, v, false};
    }
    double upper = p.parity == Parity::Even
                       ? pt.value
                       : pt.value + detail::odd_upper_slack<double>(p.n);
    double lower = pt.value - detail::lower_penalty_kernel<double>(p.parity, p.n, p.k, v);
    return {p, lower, pt.value, upper, v, true};
}

// Integer-exact test for |k| <= n^{2/3} with the parity-specific n gate.
inline bool dml_window_contains(const GridPoint& p) {
    if (!grid_point_valid(p)) return false;
    if (p.parity == Parity::Even ? p.n < 3 : p.n < 4) return false;
    long a = std::labs(p.k);
    return static_cast<__int128>(a) * a * a <=
           static_cast<__int128>(p.n) * p.n;
}

// Guaranteed enclosure of the ratio exact / gaussian inside the window.
inline std::pair<double, double> dml_bounds(const GridPoint& p) {
    if (!dml_window_contains(p))
        throw WindowError("dml_bounds: point outside the Gaussian window");
    double d = 1.0 / std::cbrt(static_cast<double>(p.n));
    if (p.parity == Parity::Even) return {1.0 - 2.0 * d, 1.0 + 2.0 * d};
    return {1.0 - 3.0 * d, 1.0 + 6.0 * d};
}

// Envelope plus the worst-case relative error it certifies.
struct Certificate {
    Envelope env;
    double rel_err_guarantee = 0.0;
    std::optional<bool> exact_in_interval;  // set when a verifier consults the oracle
};

inline Certificate certificate(const GridPoint& p, BoundVariant v) {
    Envelope e = envelope(p, v);
    double rel = e.log_lower
                     ? std::expm1(e.log_upper - *e.log_lower)
                     : std::numeric_limits<double>::infinity();
    return {e, rel, std::nullopt};
}

}  // namespace symbin
