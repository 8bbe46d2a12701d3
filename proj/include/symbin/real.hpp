#pragma once

// Scalar shims that let the numeric kernels run unchanged on double and on
// BigFloat (see bigfloat.hpp for the latter's overloads). Kernels pull these
// in unqualified so the right overload is found by ADL.

#include <cmath>
#include <limits>
#include <numbers>

namespace symbin {

inline double pi_of(double) { return std::numbers::pi; }
inline double ln2_of(double) { return std::numbers::ln2; }
inline double eps_of(double) { return std::numeric_limits<double>::epsilon(); }

// tanh^{-1}(t) evaluated as (1/2) log1p(2t/(1-t)) so that small arguments
// keep full relative accuracy; odd-reflected for t < 0.
inline double atanh_log1p(double t) {
    if (t < 0) return -atanh_log1p(-t);
    return 0.5 * std::log1p(2.0 * t / (1.0 - t));
}

// Compensated (Neumaier) accumulator. Keeps the running error of a long sum
// near one ulp of the result instead of growing with the term count.
template <class Real>
class CompensatedSum {
public:
    void add(const Real& x) {
        using std::fabs;
        Real t = sum_ + x;
        if (fabs(sum_) >= fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }
    // Sum of |x| over everything added; used for error budgets.
    Real abs_total() const { return abs_total_; }
    void add_tracked(const Real& x) {
        using std::fabs;
        abs_total_ += fabs(x);
        add(x);
    }

private:
    Real sum_{0};
    Real comp_{0};
    Real abs_total_{0};
};

}  // namespace symbin
