#pragma once

// Correction exponents b_{k,n} (even rows) and b*_{k,n} (odd rows), the
// integral I(x) of atanh, its trapezoidal sum T_{k,n}, and the resulting
// point / Gaussian log-probability estimates.
//
// The point estimate is (1/sqrt(pi n)) e^{-b}; the classical Gaussian form
// replaces b by k^2/n, which is exactly the first term of b's series. All
// scalar kernels are templates so the sweep engine can re-evaluate any of
// them in BigFloat when escalating a candidate violation.

#include <cmath>
#include <cstdlib>

#include "symbin/real.hpp"
#include "symbin/types.hpp"

namespace symbin {

struct SeriesControl {
    double rel_tol = 1e-16;
    int max_terms = 200;
};

enum class ExponentMethod { ClosedForm, Boundary, Series };

// A correction exponent in natural-log units together with how it was
// obtained. b may be negative in the odd case.
struct Exponent {
    double b = 0.0;
    ExponentMethod method = ExponentMethod::ClosedForm;
};

// I(x) = integral of atanh over [0, x]
//      = (1+x)log(1+x)/2 + (1-x)log(1-x)/2,  |x| < 1.
// Even in x and nonnegative. Below |x| = 1e-4 the closed form cancels, so
// the series x^2/2 + x^4/12 + x^6/30 + ... is summed to the precision of
// Real instead (three terms at double precision).
template <class Real = double>
Real integral_I(Real x) {
    using std::fabs;
    using std::log1p;
    x = fabs(x);
    if (!(x < Real(1))) throw std::domain_error("integral_I: |x| must be < 1");
    if (x == Real(0)) return Real(0);
    if (x < Real(1e-4)) {
        Real x2 = x * x;
        Real term = x2 / Real(2);  // x^{2j} / ((2j-1)(2j)) at j = 1
        CompensatedSum<Real> s;
        s.add(term);
        Real eps = eps_of(Real{});
        for (long j = 2; j <= 64; ++j) {
            term = term * x2 * Real((2 * j - 3) * (2 * j - 2)) /
                   Real((2 * j - 1) * (2 * j));
            s.add(term);
            if (term < eps * s.value()) break;
        }
        return s.value();
    }
    return ((Real(1) + x) * log1p(x) + (Real(1) - x) * log1p(-x)) / Real(2);
}

// T_{k,n} = (1/n) [ atanh(0)/2 + sum_{j=1}^{k-1} atanh(j/n) + atanh(k/n)/2 ],
// the k-panel trapezoidal approximation of I(k/n); 0 <= k < n. The zero
// endpoint term vanishes identically. Convexity of atanh on [0,1) makes
// T >= I(k/n) always.
template <class Real = double>
Real trapezoid_T(long n, long k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::domain_error("trapezoid_T: need 0 <= k < n");
    if (k == 0) return Real(0);
    CompensatedSum<Real> s;
    for (long j = 1; j < k; ++j) s.add(atanh_log1p(Real(j) / Real(n)));
    s.add(atanh_log1p(Real(k) / Real(n)) / Real(2));
    return s.value() / Real(n);
}

namespace detail {

// b_{k,n} = 2n I(k/n) + log(1 - k^2/n^2)/2 for |k| < n. The log factor is
// fed through log1p on the exactly computed integer ratio k^2/n^2 so small
// k/n keeps full accuracy.
template <class Real>
Real b_even_closed(long n, long k) {
    using std::log1p;
    k = std::labs(k);
    if (k == 0) return Real(0);
    Real x = Real(k) / Real(n);
    Real x2 = Real(k * k) / Real(n * n);
    return Real(2 * n) * integral_I(x) + log1p(-x2) / Real(2);
}

// b_{+-n,n} = (2n + 1/2) log 2 - log(2 pi n)/2; exact identity
// e^{-b}/sqrt(pi n) = 2^{-2n} at the edge.
template <class Real>
Real b_even_boundary(long n) {
    using std::log;
    return (Real(2 * n) + Real(0.5)) * ln2_of(Real{}) -
           log(Real(2) * pi_of(Real{}) * Real(n)) / Real(2);
}

// b*_{k,n} = 2n I(k/n) - atanh(k/n) for |k| < n (k may be negative; b* is
// not symmetric in k and can itself be negative).
template <class Real>
Real b_odd_closed(long n, long k) {
    if (k == 0) return Real(0);
    Real x = Real(k) / Real(n);
    return Real(2 * n) * integral_I(x) - atanh_log1p(x);
}

// b*_{n,n} = (2n - 1/2) log 2 - log(2 pi n)/2; e^{-b*}/sqrt(pi n) = 2^{-2n+1}.
template <class Real>
Real b_odd_boundary(long n) {
    using std::log;
    return (Real(2 * n) - Real(0.5)) * ln2_of(Real{}) -
           log(Real(2) * pi_of(Real{}) * Real(n)) / Real(2);
}

template <class Real>
Real b_value(Parity parity, long n, long k) {
    if (parity == Parity::Even)
        return std::labs(k) == n ? b_even_boundary<Real>(n) : b_even_closed<Real>(n, k);
    return k == n ? b_odd_boundary<Real>(n) : b_odd_closed<Real>(n, k);
}

// Shared series driver. next_term(j) must return term j >= 1. Stops when
// the upcoming term drops below rel_tol * |partial| (or below the absolute
// floor 1e-300), per the truncation contract. Exactly-zero terms never
// trigger the stop: the odd series has an identically vanishing term at
// j = k (and at j = 1 for k = 1) with a nonzero tail behind it.
template <class Real, class TermFn>
Real sum_series(const SeriesControl& ctl, TermFn next_term, long n, long k) {
    using std::fabs;
    CompensatedSum<Real> s;
    int j = 1;
    Real term = next_term(j);
    for (;;) {
        s.add(term);
        if (j >= ctl.max_terms) {
            // Non-convergence is only signalled in the regime the contract
            // excludes; elsewhere the truncated sum is returned as-is.
            if (std::labs(k) * 100 > 99 * n)
                throw NonConvergence("series for b did not converge within " +
                                     std::to_string(ctl.max_terms) + " terms at n=" +
                                     std::to_string(n) + " k=" + std::to_string(k));
            break;
        }
        ++j;
        term = next_term(j);
        Real mag = fabs(term);
        if (mag != Real(0) &&
            (mag < Real(ctl.rel_tol) * fabs(s.value()) || mag < Real(1e-300)))
            break;
    }
    return s.value();
}

// b_{k,n} = sum_{j>=1} (k/n)^{2j} (1/j) (n/(2j-1) - 1/2).
template <class Real>
Real b_even_series_sum(long n, long k, const SeriesControl& ctl) {
    if (k == 0) return Real(0);
    Real x2 = Real(k * k) / Real(n * n);
    Real pw = Real(1);
    auto term = [&](long j) {
        pw = pw * x2;  // (k/n)^{2j}
        return pw * (Real(n) / Real(2 * j - 1) - Real(0.5)) / Real(j);
    };
    return sum_series<Real>(ctl, term, n, k);
}

// b*_{k,n} = sum_{j>=1} (k/n)^{2j-1} (1/(2j-1)) (k/j - 1). The j = 1 term
// vanishes at k = 1, so truncation never triggers on a leading exact zero.
template <class Real>
Real b_odd_series_sum(long n, long k, const SeriesControl& ctl) {
    if (k == 0) return Real(0);
    Real x = Real(k) / Real(n);
    Real x2 = x * x;
    Real pw = Real(0);
    auto term = [&](long j) {
        pw = (j == 1) ? x : pw * x2;  // (k/n)^{2j-1}
        return pw * (Real(k) / Real(j) - Real(1)) / Real(2 * j - 1);
    };
    return sum_series<Real>(ctl, term, n, k);
}

template <class Real>
Real gaussian_exponent(long n, long k) {
    return Real(k * k) / Real(n);
}

}  // namespace detail

// Closed-form correction exponent for an even row; boundary form at |k| = n.
inline Exponent b_even(long n, long k) {
    require_valid({Parity::Even, n, k});
    if (std::labs(k) == n)
        return {detail::b_even_boundary<double>(n), ExponentMethod::Boundary};
    return {detail::b_even_closed<double>(n, k), ExponentMethod::ClosedForm};
}

inline Exponent b_odd(long n, long k) {
    require_valid({Parity::Odd, n, k});
    if (k == n)
        return {detail::b_odd_boundary<double>(n), ExponentMethod::Boundary};
    return {detail::b_odd_closed<double>(n, k), ExponentMethod::ClosedForm};
}

inline Exponent b_even_series(long n, long k, const SeriesControl& ctl = {}) {
    if (n < 1 || std::labs(k) >= n)
        throw std::domain_error("b_even_series: need |k| < n");
    return {detail::b_even_series_sum<double>(n, k, ctl), ExponentMethod::Series};
}

inline Exponent b_odd_series(long n, long k, const SeriesControl& ctl = {}) {
    if (n < 1 || std::labs(k) >= n)
        throw std::domain_error("b_odd_series: need |k| < n");
    return {detail::b_odd_series_sum<double>(n, k, ctl), ExponentMethod::Series};
}

// log of the wide-range point estimate (1/sqrt(pi n)) e^{-b}.
inline LogProb approx_prob(const GridPoint& p) {
    require_valid(p);
    double b = p.parity == Parity::Even ? b_even(p.n, p.k).b : b_odd(p.n, p.k).b;
    double half_log_pin = 0.5 * std::log(std::numbers::pi * static_cast<double>(p.n));
    double value = -b - half_log_pin;
    return {value, (std::fabs(b) + half_log_pin) * 8e-16 + 1e-16};
}

// log of the classical Gaussian approximation (1/sqrt(pi n)) e^{-k^2/n}.
inline LogProb gaussian_prob(const GridPoint& p) {
    require_valid(p);
    double expo = detail::gaussian_exponent<double>(p.n, p.k);
    double half_log_pin = 0.5 * std::log(std::numbers::pi * static_cast<double>(p.n));
    double value = -expo - half_log_pin;
    return {value, (expo + half_log_pin) * 8e-16 + 1e-16};
}

}  // namespace symbin
