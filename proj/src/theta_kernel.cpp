#include "thetamin/theta_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "series.hpp"

namespace thetamin {

using detail::centered_frac;
using detail::geometric_tail;
using detail::kInf;
using std::numbers::pi;

namespace {

void check_x(double X, const char* what) {
    require(std::isfinite(X) && X > 0.0, std::string(what) + ": X must be positive and finite");
}

auto abs_done(double tol) {
    return [tol](double tail, double) { return tail <= tol; };
}

// μ, ν carry their own relative stopping rule: next term below 1e-18 of the sum.
auto rel_done(double tol) {
    return [tol](double tail, double sum) {
        return tail <= tol && (tail <= 1e-18 * std::fabs(sum) || tail < 1e-300);
    };
}

} // namespace

Certified theta1d_series(double X, double Y, const TruncationBudget& budget) {
    check_x(X, "theta1d_series");
    const double y0 = std::fabs(centered_frac(Y));
    auto term = [&](int n) {
        const double nn = double(n);
        return std::exp(-pi * nn * nn * X) * std::cos(2.0 * pi * centered_frac(nn * y0));
    };
    auto tail = [&](int n) {
        const double m = double(n + 1);
        return geometric_tail(std::exp(-pi * m * m * X), std::exp(-pi * (2.0 * m + 1.0) * X));
    };
    Certified c = detail::sum_series(1, term, tail, abs_done(budget.abs_tol / 2.0), budget.max_terms,
                                     "theta1d_series");
    return {1.0 + 2.0 * c.value, 2.0 * c.tail_bound, c.terms};
}

Certified theta1d_poisson(double X, double Y, const TruncationBudget& budget) {
    check_x(X, "theta1d_poisson");
    const double y0 = centered_frac(Y);
    const double pref = 1.0 / std::sqrt(X);
    auto term = [&](int k) {
        if (k == 0) return std::exp(-pi * y0 * y0 / X);
        const double kp = double(k) - y0, km = double(k) + y0;
        return std::exp(-pi * kp * kp / X) + std::exp(-pi * km * km / X);
    };
    // terms with |k| > K have |k - y0| ≥ K + 1/2
    auto tail = [&](int K) {
        const double h = double(K) + 0.5;
        return 2.0 * geometric_tail(std::exp(-pi * h * h / X), std::exp(-pi * (2.0 * K + 2.0) / X));
    };
    Certified c = detail::sum_series(0, term, tail, abs_done(budget.abs_tol / pref), budget.max_terms,
                                     "theta1d_poisson");
    return {pref * c.value, pref * c.tail_bound, c.terms};
}

double theta1d_product(double X, double Y, int n_factors) {
    check_x(X, "theta1d_product");
    require(n_factors >= 1, "theta1d_product: n_factors must be >= 1");
    const double q = std::exp(-pi * X);
    const double c = std::cos(2.0 * pi * centered_frac(Y));
    double prod = 1.0;
    for (int n = 1; n <= n_factors; ++n) {
        const double q2n = std::pow(q, 2.0 * n);
        const double qodd = std::pow(q, 2.0 * n - 1.0);
        prod *= (1.0 - q2n) * (1.0 + qodd * qodd + 2.0 * qodd * c);
    }
    return prod;
}

Certified theta1d(double X, double Y, const TruncationBudget& budget) {
    return X >= kThetaPathCrossover ? theta1d_series(X, Y, budget) : theta1d_poisson(X, Y, budget);
}

Certified theta1d_dY_series(double X, double Y, const TruncationBudget& budget) {
    check_x(X, "theta1d_dY_series");
    const double y0 = centered_frac(Y);
    auto term = [&](int n) {
        const double nn = double(n);
        return nn * std::exp(-pi * nn * nn * X) * std::sin(2.0 * pi * centered_frac(nn * y0));
    };
    auto tail = [&](int n) {
        const double m = double(n + 1);
        return geometric_tail(m * std::exp(-pi * m * m * X),
                              (m + 1.0) / m * std::exp(-pi * (2.0 * m + 1.0) * X));
    };
    const double scale = 4.0 * pi;
    Certified c = detail::sum_series(1, term, tail, abs_done(budget.abs_tol / scale), budget.max_terms,
                                     "theta1d_dY_series");
    return {-scale * c.value, scale * c.tail_bound, c.terms};
}

Certified theta1d_dY_poisson(double X, double Y, const TruncationBudget& budget) {
    check_x(X, "theta1d_dY_poisson");
    const double y0 = centered_frac(Y);
    const double pref = 2.0 * pi / (X * std::sqrt(X));
    auto term = [&](int k) {
        if (k == 0) return -y0 * std::exp(-pi * y0 * y0 / X);
        const double kp = double(k) - y0, km = double(k) + y0;
        return kp * std::exp(-pi * kp * kp / X) - km * std::exp(-pi * km * km / X);
    };
    // |k ∓ y0| ∈ [j-1/2, j+1/2] for |k| = j
    auto tail = [&](int K) {
        const double j = double(K + 1);
        return 2.0 * geometric_tail((j + 0.5) * std::exp(-pi * (j - 0.5) * (j - 0.5) / X),
                                    (j + 1.5) / (j + 0.5) * std::exp(-pi * 2.0 * j / X));
    };
    Certified c = detail::sum_series(0, term, tail, abs_done(budget.abs_tol / pref), budget.max_terms,
                                     "theta1d_dY_poisson");
    return {pref * c.value, pref * c.tail_bound, c.terms};
}

Certified theta1d_dY(double X, double Y, const TruncationBudget& budget) {
    return X >= kThetaPathCrossover ? theta1d_dY_series(X, Y, budget) : theta1d_dY_poisson(X, Y, budget);
}

double theta1d_dY_supremum(double X) {
    check_x(X, "theta1d_dY_supremum");
    const double a = pi * X;
    if (X < 1e-3) {
        // n e^{-an²} peaks at 1/√(2a): Σ ≤ ∫₀^∞ + peak
        return 4.0 * pi * (1.0 / (2.0 * a) + 1.0 / std::sqrt(2.0 * a * std::numbers::e));
    }
    auto term = [&](int n) { return double(n) * std::exp(-a * double(n) * n); };
    auto tail = [&](int n) {
        const double m = double(n + 1);
        return geometric_tail(m * std::exp(-a * m * m), (m + 1.0) / m * std::exp(-a * (2.0 * m + 1.0)));
    };
    Certified c = detail::sum_series(1, term, tail, rel_done(kInf), 1 << 20, "theta1d_dY_supremum");
    return 4.0 * pi * (c.value + c.tail_bound);
}

Certified tail_mu(double X, const TruncationBudget& budget) {
    check_x(X, "tail_mu");
    auto term = [&](int n) {
        const double nn = double(n);
        return nn * nn * std::exp(-pi * (nn * nn - 1.0) * X);
    };
    auto tail = [&](int n) {
        const double m = double(n + 1);
        const double r = (m + 1.0) / m;
        return geometric_tail(m * m * std::exp(-pi * (m * m - 1.0) * X),
                              r * r * std::exp(-pi * (2.0 * m + 1.0) * X));
    };
    return detail::sum_series(2, term, tail, rel_done(budget.abs_tol), budget.max_terms, "tail_mu");
}

Certified tail_nu(double X, const TruncationBudget& budget) {
    check_x(X, "tail_nu");
    auto term = [&](int n) {
        const double nn = double(n);
        return std::exp(-pi * (nn * nn - 1.0) * X);
    };
    auto tail = [&](int n) {
        const double m = double(n + 1);
        return geometric_tail(std::exp(-pi * (m * m - 1.0) * X), std::exp(-pi * (2.0 * m + 1.0) * X));
    };
    return detail::sum_series(2, term, tail, rel_done(budget.abs_tol), budget.max_terms, "tail_nu");
}

double envelope_small_x_max() { return pi / (pi + 2.0); }

Envelope theta1d_envelope_large_x(double X) {
    require(X > kEnvelopeLargeXMin, "theta1d_envelope_large_x: requires X > 1/5");
    const double mu = tail_mu(X).value;
    const double base = 4.0 * pi * std::exp(-pi * X);
    return {base * (1.0 - mu), base * (1.0 + mu)};
}

Envelope theta1d_envelope_small_x(double X) {
    require(X > 0.0 && X < envelope_small_x_max(), "theta1d_envelope_small_x: requires 0 < X < π/(π+2)");
    const double p = std::pow(X, -1.5);
    return {pi * std::exp(-pi / (4.0 * X)) * p, p};
}

Envelope theta1d_envelopes(double X) {
    check_x(X, "theta1d_envelopes");
    const bool large = X > kEnvelopeLargeXMin;
    const bool small = X < envelope_small_x_max();
    if (large && small) {
        Envelope a = theta1d_envelope_large_x(X), b = theta1d_envelope_small_x(X);
        return {std::max(a.lower, b.lower), std::min(a.upper, b.upper)};
    }
    return large ? theta1d_envelope_large_x(X) : theta1d_envelope_small_x(X);
}

} // namespace thetamin
