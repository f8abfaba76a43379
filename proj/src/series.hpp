#pragma once

// Internal helpers for certified truncated sums.

#include <cmath>
#include <limits>
#include <string>

#include "thetamin/errors.hpp"
#include "thetamin/theta_kernel.hpp"

namespace thetamin::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier-compensated accumulator.
class Accumulator {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Bound on Σ_{j≥0} t0 ρ^j, or +inf if the ratio bound is not < 1.
inline double geometric_tail(double first, double ratio) {
    if (first == 0.0) return 0.0;
    if (!(ratio < 1.0)) return kInf;
    return first / (1.0 - ratio);
}

// Adds term(n) for n = first, first+1, ... until tail_after(n), a bound on
// Σ_{m>n} |term(m)|, satisfies done(tail, partial_sum).
template <class Term, class TailAfter, class Done>
Certified sum_series(int first, Term term, TailAfter tail_after, Done done, int max_terms,
                     const char* what) {
    Accumulator acc;
    for (int n = first, count = 1; count <= max_terms; ++n, ++count) {
        acc.add(term(n));
        double tail = tail_after(n);
        if (done(tail, acc.value())) return {acc.value(), tail, count};
    }
    fail(ErrorKind::BudgetExceeded,
         std::string(what) + ": tail bound not reached within " + std::to_string(max_terms) + " terms");
}

// Signed fractional part in [-1/2, 1/2]; symmetric so f(-y) == -f(y) bitwise.
inline double centered_frac(double y) { return y - std::round(y); }

} // namespace thetamin::detail

namespace thetamin::detail {

// Σ_{n≥first} term(n) for positive log-concave terms (n^p e^{-c n²} and the
// like): once term(n+2)/term(n+1) < 1 it bounds every later ratio, so the
// tail is geometric. Stops when the tail is below 1e-18 of the sum.
template <class Term>
Certified decaying_sum(int first, Term term, int max_terms = 100000) {
    auto tail = [&](int n) {
        const double t1 = term(n + 1);
        if (t1 == 0.0) return 0.0;
        return geometric_tail(t1, term(n + 2) / t1);
    };
    auto done = [](double t, double s) { return t <= 1e-18 * std::fabs(s) || t < 1e-300; };
    return sum_series(first, term, tail, done, max_terms, "decaying_sum");
}

} // namespace thetamin::detail
