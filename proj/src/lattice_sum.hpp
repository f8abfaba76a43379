#pragma once

// Square-shell summation over (n, m) ∈ ℤ² with q(n,m) = y n² + (m + n x)²/y,
// the squared length of n z + m in the unit-area normalization.

#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

#include "series.hpp"
#include "thetamin/errors.hpp"
#include "thetamin/halfplane.hpp"
#include "thetamin/theta_kernel.hpp"

namespace thetamin::detail {

// |term(n,m)| ≤ Σ coef · q^degree · e^{-rate·q} for all lattice points far
// enough out that every piece is decreasing in q.
struct MajorantPiece {
    double coef;
    int degree;
    double rate;
};

// Smallest eigenvalue of the form q, so q ≥ lambda·max(|n|,|m|)².
inline double shell_lambda(const UpperHalfPoint& z) {
    const double t = z.x * z.x + z.y * z.y;
    const double lam = 0.5 * ((t + 1.0) - std::sqrt((t - 1.0) * (t - 1.0) + 4.0 * z.x * z.x));
    // guard cancellation: λ_min·λ_max = det = y²
    const double lam_max = 0.5 * ((t + 1.0) + std::sqrt((t - 1.0) * (t - 1.0) + 4.0 * z.x * z.x));
    return std::max(lam, z.y * z.y / lam_max) / z.y;
}

// Bound on Σ_{j>k} 8j · Σ_pieces coef (λj²)^d e^{-rate λ j²}.
inline double shell_tail(const std::vector<MajorantPiece>& pieces, double lambda, int k) {
    const double j = double(k + 1);
    double total = 0.0;
    for (const auto& p : pieces) {
        const double q = lambda * j * j;
        if (p.degree > 0 && q < double(p.degree) / p.rate) return kInf;
        const double first = 8.0 * j * p.coef * std::pow(q, p.degree) * std::exp(-p.rate * q);
        const double growth = std::max(1.0, std::pow((j + 1.0) / j, 1 + 2 * p.degree));
        total += geometric_tail(first, growth * std::exp(-p.rate * lambda * (2.0 * j + 1.0)));
    }
    return total;
}

// term(n, m, q) summed over shells max(|n|,|m|) = 0, 1, 2, ...; skip_origin
// drops (0,0). Returns value, certified tail, and the radius reached.
template <class Term>
Certified shell_sum(const UpperHalfPoint& z, Term term, const std::vector<MajorantPiece>& pieces,
                    double tol, int max_radius, bool skip_origin, const char* what) {
    const double lambda = shell_lambda(z);
    auto q_of = [&](int n, int m) {
        const double s = double(m) + double(n) * z.x;
        return z.y * double(n) * n + s * s / z.y;
    };
    Accumulator acc;
    if (!skip_origin) acc.add(term(0, 0, 0.0));
    for (int k = 1;; ++k) {
        if (k > max_radius)
            fail(ErrorKind::CutoffExceeded,
                 std::string(what) + ": lattice radius cap " + std::to_string(max_radius) + " exceeded");
        // shell boundary: rows n = ±k, then columns m = ±k without corners
        for (int m = -k; m <= k; ++m) {
            acc.add(term(k, m, q_of(k, m)));
            acc.add(term(-k, m, q_of(-k, m)));
        }
        for (int n = -k + 1; n <= k - 1; ++n) {
            acc.add(term(n, k, q_of(n, k)));
            acc.add(term(n, -k, q_of(n, -k)));
        }
        const double tail = shell_tail(pieces, lambda, k);
        if (tail <= tol) return {acc.value(), tail, k};
    }
}

} // namespace thetamin::detail
