#pragma once

// High-accuracy natural logs of exact probabilities, plus the independent
// product-recurrence route for even rows. log_dyadic goes through 128-bit
// MPFR and is the ground truth every verification suite compares against;
// log_even_via_recurrence is a pure double-precision path whose agreement
// with the MPFR route is itself one of the checked claims.

#include <cmath>

#include "symbin/bigfloat.hpp"
#include "symbin/dyadic.hpp"
#include "symbin/real.hpp"
#include "symbin/types.hpp"

namespace symbin {

// log(num) - exp2*log(2), carried out at 128 bits, rounded once to double.
// The returned bound covers the final rounding; the 128-bit error is
// orders of magnitude below it.
inline LogProb log_dyadic(const DyadicRational& d) {
    if (d.is_zero())
        throw std::domain_error("log_dyadic: log of zero probability");
    BigFloat t(d.numerator());
    mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
    BigFloat e = ln2_of(BigFloat{});
    mpfr_mul_ui(e.raw(), e.raw(), d.exp2(), MPFR_RNDN);
    t -= e;
    double value = t.to_double();
    return {value, std::fabs(value) * 0x1p-52 + 1e-16};
}

namespace detail {

// Sum of atanh(j/n) for j = 1..count, compensated. Shared by the
// recurrence below and by trapezoid sums; templated so the escalation
// path can rerun it in BigFloat.
template <class Real>
CompensatedSum<Real> atanh_interior_sum(long n, long count) {
    CompensatedSum<Real> s;
    for (long j = 1; j <= count; ++j)
        s.add_tracked(atanh_log1p(Real(j) / Real(n)));
    return s;
}

template <class Real>
Real log_even_recurrence_kernel(long n, long k, const Real& log_central) {
    using std::log1p;
    CompensatedSum<Real> s = atanh_interior_sum<Real>(n, k - 1);
    Real x = Real(k) / Real(n);
    return log_central - log1p(x) - Real(2) * s.value();
}

}  // namespace detail

// log a_{k,n} via the product recurrence
//   log a_{k,n} = log a_{0,n} - log(1 + k/n) - 2 * sum_{j=1}^{k-1} atanh(j/n),
// independent of the big-integer route for every k != 0. Negative k
// reflects by symmetry; |k| = n bypasses the recurrence with the exact
// -2n log 2.
inline LogProb log_even_via_recurrence(long n, long k) {
    require_valid({Parity::Even, n, k});
    if (k < 0) k = -k;
    if (k == n) {
        double value = -2.0 * static_cast<double>(n) * std::numbers::ln2;
        return {value, std::fabs(value) * 0x1p-51};
    }
    LogProb central = log_dyadic(exact_even(n, 0));
    if (k == 0) return central;
    CompensatedSum<double> s = detail::atanh_interior_sum<double>(n, k - 1);
    double x = static_cast<double>(k) / static_cast<double>(n);
    double lg = std::log1p(x);
    double value = central.value - lg - 2.0 * s.value();
    // Budget: central's bound, ~1 ulp per atanh term (compensation leaves
    // the accumulation itself at ~1 ulp of the total), log1p, final adds.
    double err = central.abs_err_bound +
                 (2.0 * s.abs_total() + lg + std::fabs(value)) * 4e-16 + 1e-16;
    return {value, err};
}

}  // namespace symbin
