#pragma once

// Minimal RAII wrapper around mpfr_t, just wide enough to re-run the double
// precision kernels at 128 bits. Used by log_dyadic and by the sweep
// engine's violation-escalation path (which must re-check any candidate
// violation with at least 50 extra mantissa bits).

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "symbin/real.hpp"

namespace symbin {

inline constexpr mpfr_prec_t kBigFloatPrec = 128;

class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kBigFloatPrec); mpfr_set_zero(v_, 1); }
    BigFloat(double x) { mpfr_init2(v_, kBigFloatPrec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(int x) : BigFloat(static_cast<long>(x)) {}
    BigFloat(long x) { mpfr_init2(v_, kBigFloatPrec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(unsigned long x) { mpfr_init2(v_, kBigFloatPrec); mpfr_set_ui(v_, x, MPFR_RNDN); }
    explicit BigFloat(const mpz_class& z) {
        mpfr_init2(v_, kBigFloatPrec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, kBigFloatPrec);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        v_[0] = o.v_[0];
        mpfr_init2(o.v_, kBigFloatPrec);
        mpfr_set_zero(o.v_, 1);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

#define SYMBIN_BF_UNARY(name, fn)                    \
    inline BigFloat name(const BigFloat& x) {        \
        BigFloat r;                                  \
        fn(r.raw(), x.raw(), MPFR_RNDN);             \
        return r;                                    \
    }

SYMBIN_BF_UNARY(log, mpfr_log)
SYMBIN_BF_UNARY(log1p, mpfr_log1p)
SYMBIN_BF_UNARY(exp, mpfr_exp)
SYMBIN_BF_UNARY(expm1, mpfr_expm1)
SYMBIN_BF_UNARY(sqrt, mpfr_sqrt)
SYMBIN_BF_UNARY(cbrt, mpfr_cbrt)
SYMBIN_BF_UNARY(fabs, mpfr_abs)
SYMBIN_BF_UNARY(atanh_log1p, mpfr_atanh)  // correctly rounded already

#undef SYMBIN_BF_UNARY

inline BigFloat pi_of(const BigFloat&) {
    BigFloat r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat ln2_of(const BigFloat&) {
    BigFloat r;
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat eps_of(const BigFloat&) {
    BigFloat r{1.0};
    mpfr_mul_2si(r.raw(), r.raw(), -(kBigFloatPrec - 1), MPFR_RNDN);
    return r;
}

}  // namespace symbin
