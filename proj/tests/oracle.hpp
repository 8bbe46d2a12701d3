#pragma once

// Test-side oracles, kept independent of the implementation paths they
// check: binomials come from the Pascal-triangle recurrence instead of
// mpz_bin_uiui, and the correction exponents are evaluated through the
// direct printed forms instead of the integral form the library uses.

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace oracle {

// C(m, i) by the additive triangle recurrence.
inline mpz_class pascal_binomial(long m, long i) {
    if (i < 0 || i > m) return mpz_class(0);
    std::vector<mpz_class> row(static_cast<size_t>(m) + 1);
    row[0] = 1;
    for (long r = 1; r <= m; ++r)
        for (long c = r; c >= 1; --c) row[c] += row[c - 1];
    return row[static_cast<size_t>(i)];
}

// b_{k,n} = n { (1 + (k+1/2)/n) log(1 + k/n) + (1 - (k-1/2)/n) log(1 - k/n) },
// the form the exponent is defined by (|k| < n). Independent route from the
// 2n·I(x) + log(1-x^2)/2 evaluation used in the library.
inline double b_even_direct(long n, long k) {
    double nn = static_cast<double>(n);
    double kk = static_cast<double>(k);
    return nn * ((1.0 + (kk + 0.5) / nn) * std::log(1.0 + kk / nn) +
                 (1.0 - (kk - 0.5) / nn) * std::log(1.0 - kk / nn));
}

// b*_{k,n} = n { (1 + (k-1/2)/n) log(1 + k/n) + (1 - (k-1/2)/n) log(1 - k/n) }.
inline double b_odd_direct(long n, long k) {
    double nn = static_cast<double>(n);
    double kk = static_cast<double>(k);
    return nn * ((1.0 + (kk - 0.5) / nn) * std::log(1.0 + kk / nn) +
                 (1.0 - (kk - 0.5) / nn) * std::log(1.0 - kk / nn));
}

}  // namespace oracle
