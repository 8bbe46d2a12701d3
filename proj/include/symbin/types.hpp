#pragma once

// Shared domain types for symmetric-binomial walk probabilities.
//
// Conventions used throughout:
//   Even grid point (n, k):  P(S_{2n} = 2k)    = C(2n, n+k)   * 2^{-2n},   |k| <= n
//   Odd  grid point (n, k):  P(S_{2n-1} = 2k-1) = C(2n-1, n+k-1) * 2^{-2n+1}, -n+1 <= k <= n
// All logarithms are natural.

#include <cmath>
#include <stdexcept>
#include <string>

namespace symbin {

enum class Parity { Even, Odd };

inline const char* parity_name(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

// One lattice point of the probability grid. n is half the step count
// (steps = 2n even, 2n-1 odd), k the offset in the reindexed lattice.
struct GridPoint {
    Parity parity = Parity::Even;
    long n = 1;
    long k = 0;
};

inline bool grid_point_valid(const GridPoint& p) {
    if (p.n < 1) return false;
    if (p.parity == Parity::Even) return p.k >= -p.n && p.k <= p.n;
    return p.k >= -p.n + 1 && p.k <= p.n;
}

inline void require_valid(const GridPoint& p) {
    if (!grid_point_valid(p))
        throw std::domain_error("grid point out of domain: parity=" +
                                std::string(parity_name(p.parity)) + " n=" +
                                std::to_string(p.n) + " k=" + std::to_string(p.k));
}

// Natural log of a probability together with a guaranteed absolute error
// bound on the stored double.
struct LogProb {
    double value = 0.0;
    double abs_err_bound = 0.0;
};

// Which trapezoid-error constant the lower envelopes use. PaperVerbatim
// keeps the printed r^4 factor; CorrectedTrapezoid replaces it by r^2
// (the value the classical per-interval error formula actually yields).
enum class BoundVariant { PaperVerbatim, CorrectedTrapezoid };

inline const char* variant_name(BoundVariant v) {
    return v == BoundVariant::PaperVerbatim ? "paper" : "corrected";
}

// Series evaluation failed to meet its tolerance within the term budget.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested point lies outside the Gaussian-approximation window.
struct WindowError : std::domain_error {
    using std::domain_error::domain_error;
};

// A sweep grid would exceed the configured cell cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File I/O failure; carries the destination path in the message.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symbin
