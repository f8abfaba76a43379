#include "thetamin/lattice_theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lattice_sum.hpp"

namespace thetamin {

using detail::Accumulator;
using detail::geometric_tail;
using detail::MajorantPiece;
using std::numbers::pi;

double FunctionalSpec::high_alpha() const { return alpha * std::pow(ratio, k); }

void FunctionalSpec::validate() const {
    require(std::isfinite(alpha) && alpha > 0.0, "FunctionalSpec: alpha must be positive");
    require(std::isfinite(beta), "FunctionalSpec: beta must be finite");
    require(std::isfinite(ratio) && ratio > 1.0, "FunctionalSpec: ratio must exceed 1");
    require(k >= 0, "FunctionalSpec: k must be non-negative");
}

namespace {

void check_alpha_tol(double alpha, double tol, const char* what) {
    require(std::isfinite(alpha) && alpha > 0.0, std::string(what) + ": alpha must be positive");
    require(std::isfinite(tol) && tol > 0.0, std::string(what) + ": tol must be positive");
}

} // namespace

Certified theta2d_direct(double alpha, const UpperHalfPoint& z, double tol, int max_radius) {
    check_alpha_tol(alpha, tol, "theta2d_direct");
    const double rate = pi * alpha;
    auto term = [rate](int, int, double q) { return std::exp(-rate * q); };
    return detail::shell_sum(z, term, {{1.0, 0, rate}}, tol, max_radius, false, "theta2d_direct");
}

Certified theta2d_expansion(double alpha, const UpperHalfPoint& z, double tol) {
    check_alpha_tol(alpha, tol, "theta2d_expansion");
    const double X = z.y / alpha;
    const double sx = std::sqrt(X);
    const double a = alpha * pi * z.y; // outer weights e^{-a n²}
    // Σ_{n∈ℤ} e^{-an²} ≤ 1 + 2e^{-a}/(1 - e^{-3a}) bounds the total weight
    const double weight_bound = 1.0 + 2.0 * geometric_tail(std::exp(-a), std::exp(-3.0 * a));
    TruncationBudget inner;
    inner.abs_tol = tol / (2.0 * sx * weight_bound);

    const Certified t0 = theta1d(X, 0.0, inner);
    const double theta3_bound = t0.value + t0.tail_bound;
    Accumulator acc;
    acc.add(t0.value);
    double inner_err = t0.tail_bound;
    int n = 0;
    double outer_tail = 0.0;
    for (;;) {
        const double m = double(n + 1);
        outer_tail = 2.0 * sx * theta3_bound *
                     geometric_tail(std::exp(-a * m * m), std::exp(-a * (2.0 * m + 1.0)));
        if (outer_tail <= tol / 2.0) break;
        ++n;
        if (n > inner.max_terms)
            fail(ErrorKind::BudgetExceeded, "theta2d_expansion: outer series did not converge");
        const double w = std::exp(-a * double(n) * n);
        const Certified t = theta1d(X, double(n) * z.x, inner);
        acc.add(2.0 * w * t.value);
        inner_err += 2.0 * w * t.tail_bound;
    }
    return {sx * acc.value(), outer_tail + sx * inner_err, n};
}

Certified theta2d(double alpha, const UpperHalfPoint& z, double tol) {
    return theta2d_expansion(alpha, reduce(z).point, tol);
}

Certified theta2d_minus_one(double alpha, const UpperHalfPoint& z0, double rel_tol) {
    check_alpha_tol(alpha, rel_tol, "theta2d_minus_one");
    const UpperHalfPoint z = reduce(z0).point;
    const double X = z.y / alpha;
    const double sx = std::sqrt(X);
    const double a = alpha * pi * z.y;
    // the two shortest vectors (±1, row 0) bound the result from below
    const double c = pi * alpha / z.y;
    const double tol = rel_tol * 2.0 * std::exp(-c);

    // row 0: √X ϑ(X;0) - 1 = 2Σ_{m≥1} e^{-παm²/y}
    const Certified row0 = detail::decaying_sum(1, [c](int m) { return std::exp(-c * double(m) * m); });
    Accumulator acc;
    acc.add(2.0 * row0.value);
    double err = 2.0 * row0.tail_bound;

    const double weight_bound = 2.0 * geometric_tail(std::exp(-a), std::exp(-3.0 * a));
    TruncationBudget inner;
    inner.abs_tol = tol / (2.0 * sx * std::max(weight_bound, 1e-300));
    const Certified t0 = theta1d(X, 0.0, inner);
    const double theta3_bound = t0.value + t0.tail_bound; // ϑ(X;Y) ≤ ϑ(X;0)
    double inner_err = 0.0;
    int n = 0;
    double outer_tail = 0.0;
    for (;;) {
        const double m = double(n + 1);
        outer_tail = 2.0 * sx * theta3_bound *
                     geometric_tail(std::exp(-a * m * m), std::exp(-a * (2.0 * m + 1.0)));
        if (outer_tail <= tol / 2.0) break;
        ++n;
        if (n > inner.max_terms)
            fail(ErrorKind::BudgetExceeded, "theta2d_minus_one: outer series did not converge");
        const double w = std::exp(-a * double(n) * n);
        const Certified t = theta1d(X, double(n) * z.x, inner);
        acc.add(2.0 * sx * w * t.value);
        inner_err += 2.0 * sx * w * t.tail_bound;
    }
    return {acc.value(), err + outer_tail + inner_err, n + row0.terms};
}

Certified w_energy(const FunctionalSpec& spec, const UpperHalfPoint& z, double rel_tol) {
    spec.validate();
    const Certified lo = theta2d_minus_one(spec.alpha, z, rel_tol);
    if (spec.beta == 0.0) return lo;
    const Certified hi = theta2d_minus_one(spec.high_alpha(), z, rel_tol);
    return {lo.value - spec.beta * hi.value, lo.tail_bound + std::fabs(spec.beta) * hi.tail_bound,
            lo.terms + hi.terms};
}

Certified w_beta(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol) {
    spec.validate();
    const double share = tol / (1.0 + std::fabs(spec.beta));
    const Certified lo = theta2d(spec.alpha, z, share);
    if (spec.beta == 0.0) return lo;
    const Certified hi = theta2d(spec.high_alpha(), z, share);
    return {lo.value - spec.beta * hi.value, lo.tail_bound + std::fabs(spec.beta) * hi.tail_bound,
            lo.terms + hi.terms};
}

Certified theta2d_dx(double alpha, const UpperHalfPoint& z, double tol) {
    check_alpha_tol(alpha, tol, "theta2d_dx");
    const double X = z.y / alpha;
    const double sx = std::sqrt(X);
    const double a = alpha * pi * z.y;
    // Σ n e^{-an²} = dY-supremum(a/π)/(4π)
    const double weight_bound = theta1d_dY_supremum(a / pi) / (4.0 * pi);
    const double dsup = theta1d_dY_supremum(X);
    TruncationBudget inner;
    inner.abs_tol = tol / (4.0 * sx * weight_bound);

    Accumulator acc;
    double inner_err = 0.0;
    int n = 0;
    double outer_tail = 0.0;
    for (;;) {
        const double m = double(n + 1);
        outer_tail = 2.0 * sx * dsup *
                     geometric_tail(m * std::exp(-a * m * m), (m + 1.0) / m * std::exp(-a * (2.0 * m + 1.0)));
        // n = 1 carries the leading behaviour, never skip it
        if (n >= 1 && outer_tail <= tol / 2.0) break;
        ++n;
        if (n > inner.max_terms)
            fail(ErrorKind::BudgetExceeded, "theta2d_dx: outer series did not converge");
        const double w = double(n) * std::exp(-a * double(n) * n);
        const Certified t = theta1d_dY(X, double(n) * z.x, inner);
        acc.add(w * t.value);
        inner_err += w * t.tail_bound;
    }
    return {2.0 * sx * acc.value(), outer_tail + 2.0 * sx * inner_err, n};
}

Certified theta2d_dy(double alpha, const UpperHalfPoint& z, double tol) {
    check_alpha_tol(alpha, tol, "theta2d_dy");
    const double rate = pi * alpha;
    const double y2 = z.y * z.y;
    auto term = [&](int n, int m, double q) {
        const double s = double(m) + double(n) * z.x;
        return rate * (-double(n) * n + s * s / y2) * std::exp(-rate * q);
    };
    // |-n² + s²/y²| ≤ q/y
    return detail::shell_sum(z, term, {{rate / z.y, 1, rate}}, tol, kDefaultMaxRadius, false, "theta2d_dy");
}

namespace {

template <class F>
Certified combine(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol, F f) {
    spec.validate();
    const double share = tol / (1.0 + std::fabs(spec.beta));
    const Certified lo = f(spec.alpha, z, share);
    if (spec.beta == 0.0) return lo;
    const Certified hi = f(spec.high_alpha(), z, share);
    return {lo.value - spec.beta * hi.value, lo.tail_bound + std::fabs(spec.beta) * hi.tail_bound,
            std::max(lo.terms, hi.terms)};
}

} // namespace

Certified w_dx(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol) {
    return combine(spec, z, tol, [](double a, const UpperHalfPoint& p, double t) { return theta2d_dx(a, p, t); });
}

namespace {

// ∂/∂y of the rows n ≠ 0 of θ(α;z).
Certified theta2d_dy_offrow(double alpha, const UpperHalfPoint& z, double tol) {
    const double rate = pi * alpha;
    const double y2 = z.y * z.y;
    auto term = [&](int n, int m, double q) {
        if (n == 0) return 0.0;
        const double s = double(m) + double(n) * z.x;
        return rate * (-double(n) * n + s * s / y2) * std::exp(-rate * q);
    };
    return detail::shell_sum(z, term, {{rate / z.y, 1, rate}}, tol, kDefaultMaxRadius, false, "w_dy");
}

} // namespace

// Row 0 is Σ_m e^{-παm²/y} = √(y/α) Σ_k e^{-πk²y/α}; in this form the
// √y growth of θ(α) - βθ(Rα) is the explicit constant (1 - β/√R), so the
// derivative stays accurate where the two widths nearly cancel.
Certified w_dy(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol) {
    spec.validate();
    const double share = tol / (1.0 + std::fabs(spec.beta));
    const double y = z.y, X = y / spec.alpha;
    const double R = spec.high_alpha() / spec.alpha;
    const double b = spec.beta / std::sqrt(R);
    auto sums = [](double X_) {
        const auto s0 = detail::decaying_sum(1, [X_](int k) { return std::exp(-pi * double(k) * k * X_); });
        const auto s2 = detail::decaying_sum(1, [X_](int k) {
            const double kk = double(k) * k;
            return kk * std::exp(-pi * kk * X_);
        });
        return std::pair{s0, s2};
    };
    const auto [a0, a2] = sums(X);
    double S = 1.0 - b, dS = 0.0, err = 0.0;
    S += 2.0 * a0.value;
    dS -= 2.0 * pi / spec.alpha * a2.value;
    err += 2.0 * a0.tail_bound / (2.0 * std::sqrt(spec.alpha * y)) + std::sqrt(X) * 2.0 * pi / spec.alpha * a2.tail_bound;
    int terms = a0.terms + a2.terms;
    if (spec.beta != 0.0) {
        const auto [b0, b2] = sums(X / R);
        S -= 2.0 * b * b0.value;
        dS += 2.0 * pi / spec.alpha * (b / R) * b2.value;
        err += std::fabs(b) * (b0.tail_bound / std::sqrt(spec.alpha * y) +
                               std::sqrt(X) * 2.0 * pi / spec.alpha / R * b2.tail_bound);
        terms += b0.terms + b2.terms;
    }
    const double row0 = S / (2.0 * std::sqrt(spec.alpha * y)) + std::sqrt(X) * dS;

    const Certified lo = theta2d_dy_offrow(spec.alpha, z, share);
    double value = row0 + lo.value, bound = err + lo.tail_bound;
    if (spec.beta != 0.0) {
        const Certified hi = theta2d_dy_offrow(spec.high_alpha(), z, share);
        value -= spec.beta * hi.value;
        bound += std::fabs(spec.beta) * hi.tail_bound;
        terms += hi.terms;
    }
    return {value, bound, terms + lo.terms};
}

Certified double_sum_A(double a, double y, double tol) {
    check_alpha_tol(a, tol, "double_sum_A");
    const UpperHalfPoint z(0.5, y);
    const double rate = pi * a;
    auto term = [rate](int n, int, double q) { return double(n) * n * std::exp(-rate * q); };
    return detail::shell_sum(z, term, {{1.0 / y, 1, rate}}, tol, kDefaultMaxRadius, false, "double_sum_A");
}

Certified double_sum_B(double a, double y, double tol) {
    check_alpha_tol(a, tol, "double_sum_B");
    const UpperHalfPoint z(0.5, y);
    const double rate = pi * a;
    const double y2 = y * y;
    auto term = [&](int n, int m, double q) {
        const double s = double(m) + 0.5 * n;
        const double w = double(n) * n - s * s / y2;
        return w * w * std::exp(-rate * q);
    };
    return detail::shell_sum(z, term, {{1.0 / y2, 2, rate}}, tol, kDefaultMaxRadius, false, "double_sum_B");
}

Certified radial_operator(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol) {
    spec.validate();
    if (std::fabs(z.x - 0.5) > 1e-12) fail(ErrorKind::NotOnGamma, "radial_operator: requires x = 1/2");
    const double y = z.y;
    auto part = [&](double a, double t) {
        const double c1 = (pi * a) * (pi * a), c2 = 2.0 * pi * a / y;
        const double share = t / (c1 + c2);
        const Certified B = double_sum_B(a, y, share), A = double_sum_A(a, y, share);
        return Certified{c1 * B.value - c2 * A.value, c1 * B.tail_bound + c2 * A.tail_bound,
                         std::max(A.terms, B.terms)};
    };
    const double share = tol / (1.0 + std::fabs(spec.beta));
    const Certified lo = part(spec.alpha, share);
    if (spec.beta == 0.0) return lo;
    const Certified hi = part(spec.high_alpha(), share);
    return {lo.value - spec.beta * hi.value, lo.tail_bound + std::fabs(spec.beta) * hi.tail_bound,
            std::max(lo.terms, hi.terms)};
}

double e_functional(double alpha, double beta, const UpperHalfPoint& z, double tol) {
    const FunctionalSpec spec{alpha, beta, 2.0, 1};
    const double scale = 2.0 * std::sqrt(z.y / (2.0 * alpha)) * std::exp(-pi * alpha * z.y);
    // tolerance on ℰ, not on ∂W/∂x
    const double dx = w_dx(spec, z, std::max(tol * std::min(scale, 1.0), 1e-300)).value;
    return -dx / scale;
}

} // namespace thetamin
