#pragma once

// Exact walk probabilities as dyadic rationals (numerator / 2^exp2) over
// GMP integers. Every probability of the symmetric walk has a power-of-two
// denominator, so this representation keeps normalization sums exact.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "symbin/types.hpp"

namespace symbin {

class DyadicRational {
public:
    DyadicRational() = default;

    DyadicRational(mpz_class numerator, unsigned long exp2)
        : num_(std::move(numerator)), exp2_(exp2) {
        if (sgn(num_) < 0)
            throw std::invalid_argument("DyadicRational: negative numerator");
        canonicalize();
        if (!represents_probability())
            throw std::invalid_argument("DyadicRational: value exceeds 1");
    }

    static DyadicRational zero() { return {}; }
    static DyadicRational one() { return {mpz_class(1), 0}; }

    const mpz_class& numerator() const { return num_; }
    unsigned long exp2() const { return exp2_; }
    bool is_zero() const { return sgn(num_) == 0; }

    double to_double() const {
        mpq_class q(num_, mpz_class(1) << exp2_);
        return q.get_d();
    }

    std::string to_string() const {
        return num_.get_str() + "/2^" + std::to_string(exp2_);
    }

    DyadicRational operator+(const DyadicRational& o) const {
        unsigned long e = std::max(exp2_, o.exp2_);
        mpz_class a = num_ << (e - exp2_);
        a += o.num_ << (e - o.exp2_);
        return {std::move(a), e};
    }

    bool operator==(const DyadicRational& o) const {
        return exp2_ == o.exp2_ && num_ == o.num_;
    }

private:
    void canonicalize() {
        if (sgn(num_) == 0) {
            exp2_ = 0;
            return;
        }
        mp_bitcnt_t tz = mpz_scan1(num_.get_mpz_t(), 0);
        mp_bitcnt_t shift = std::min<mp_bitcnt_t>(tz, exp2_);
        if (shift > 0) {
            num_ >>= shift;
            exp2_ -= shift;
        }
    }

    // After canonicalization num_ is odd or zero, so num_ <= 2^exp2 holds
    // iff num_ fits in exp2 bits, or is exactly 1 with exp2 == 0.
    bool represents_probability() const {
        if (sgn(num_) == 0) return true;
        size_t bits = mpz_sizeinbase(num_.get_mpz_t(), 2);
        return bits <= exp2_ || (num_ == 1 && exp2_ == 0);
    }

    mpz_class num_{0};
    unsigned long exp2_ = 0;
};

// C(m, i); zero outside 0 <= i <= m.
inline mpz_class binomial(unsigned long m, long i) {
    if (i < 0 || static_cast<unsigned long>(i) > m) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), m, static_cast<unsigned long>(i));
    return r;
}

// P(S_l = j) for the l-step walk. Zero when l+j is odd or |j| > l.
inline DyadicRational walk_prob(long l, long j) {
    if (l < 1) throw std::domain_error("walk_prob: l must be >= 1");
    if ((l + j) % 2 != 0 || j > l || j < -l) return DyadicRational::zero();
    return {binomial(static_cast<unsigned long>(l), (l + j) / 2),
            static_cast<unsigned long>(l)};
}

// P(S_{2n} = 2k) = C(2n, n+k) 2^{-2n}.
inline DyadicRational exact_even(long n, long k) {
    require_valid({Parity::Even, n, k});
    return {binomial(static_cast<unsigned long>(2 * n), n + k),
            static_cast<unsigned long>(2 * n)};
}

// P(S_{2n-1} = 2k-1) = C(2n-1, n+k-1) 2^{-2n+1}.
inline DyadicRational exact_odd(long n, long k) {
    require_valid({Parity::Odd, n, k});
    return {binomial(static_cast<unsigned long>(2 * n - 1), n + k - 1),
            static_cast<unsigned long>(2 * n - 1)};
}

inline DyadicRational exact_prob(const GridPoint& p) {
    return p.parity == Parity::Even ? exact_even(p.n, p.k) : exact_odd(p.n, p.k);
}

// Incremental walker along one row of the grid: keeps the binomial
// coefficient of the current k and advances it with one small-word
// multiply/divide. Sweeps use this instead of recomputing C(2n, n+k)
// from scratch at every point.
class EvenRow {
public:
    explicit EvenRow(long n) : n_(n), k_(-n), coeff_(1) {
        if (n < 1) throw std::domain_error("EvenRow: n must be >= 1");
    }
    long k() const { return k_; }
    bool done() const { return k_ > n_; }
    const mpz_class& coefficient() const { return coeff_; }
    DyadicRational dyadic() const {
        return {coeff_, static_cast<unsigned long>(2 * n_)};
    }
    void next() {
        // C(2n, n+k+1) = C(2n, n+k) * (n-k) / (n+k+1)
        mpz_mul_ui(coeff_.get_mpz_t(), coeff_.get_mpz_t(),
                   static_cast<unsigned long>(n_ - k_));
        mpz_divexact_ui(coeff_.get_mpz_t(), coeff_.get_mpz_t(),
                        static_cast<unsigned long>(n_ + k_ + 1));
        ++k_;
    }

private:
    long n_, k_;
    mpz_class coeff_;
};

class OddRow {
public:
    explicit OddRow(long n) : n_(n), k_(-n + 1), coeff_(1) {
        if (n < 1) throw std::domain_error("OddRow: n must be >= 1");
    }
    long k() const { return k_; }
    bool done() const { return k_ > n_; }
    const mpz_class& coefficient() const { return coeff_; }
    DyadicRational dyadic() const {
        return {coeff_, static_cast<unsigned long>(2 * n_ - 1)};
    }
    void next() {
        // C(2n-1, n+k) = C(2n-1, n+k-1) * (n-k) / (n+k)
        mpz_mul_ui(coeff_.get_mpz_t(), coeff_.get_mpz_t(),
                   static_cast<unsigned long>(n_ - k_));
        mpz_divexact_ui(coeff_.get_mpz_t(), coeff_.get_mpz_t(),
                        static_cast<unsigned long>(n_ + k_));
        ++k_;
    }

private:
    long n_, k_;
    mpz_class coeff_;
};

}  // namespace symbin
