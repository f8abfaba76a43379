#pragma once

#include "thetamin/halfplane.hpp"
#include "thetamin/theta_kernel.hpp"

namespace thetamin {

// W(z) = θ(α;z) - β θ(ratio^k α;z). The standard functional is ratio=2, k=1.
struct FunctionalSpec {
    double alpha = 1.0;
    double beta = 0.0;
    double ratio = 2.0;
    int k = 1;

    double high_alpha() const; // ratio^k · alpha
    void validate() const;
};

inline constexpr double kDefaultTol = 1e-13;
inline constexpr int kDefaultMaxRadius = 600;

// Σ_{m,n} e^{-απ|mz+n|²/y}, summed over square shells until the certified
// Gaussian tail is below tol. Throws CutoffExceeded past max_radius.
Certified theta2d_direct(double alpha, const UpperHalfPoint& z, double tol = kDefaultTol,
                         int max_radius = kDefaultMaxRadius);

// √(y/α)[ϑ(y/α;0) + 2Σ_{n≥1} e^{-απyn²} ϑ(y/α;nx)].
Certified theta2d_expansion(double alpha, const UpperHalfPoint& z, double tol = kDefaultTol);

// Reduces z into the fundamental domain first, then uses the expansion.
Certified theta2d(double alpha, const UpperHalfPoint& z, double tol = kDefaultTol);

Certified w_beta(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol = kDefaultTol);

// θ(α;z) - 1 as a sum of positive terms (origin removed), accurate relative
// to its size: the truncation tolerance is rel_tol times a lower bound.
Certified theta2d_minus_one(double alpha, const UpperHalfPoint& z, double rel_tol = 1e-15);

// (θ(α) - 1) - β(θ(ratio^k α) - 1) = W - (1 - β): the lattice energy of the
// Gaussian pair, resolved far below the rounding level of W itself.
Certified w_energy(const FunctionalSpec& spec, const UpperHalfPoint& z, double rel_tol = 1e-15);

// Partial derivatives of θ(α;·) at z (no reduction: derivatives are not invariant).
Certified theta2d_dx(double alpha, const UpperHalfPoint& z, double tol = kDefaultTol);
Certified theta2d_dy(double alpha, const UpperHalfPoint& z, double tol = kDefaultTol);
Certified w_dx(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol = kDefaultTol);
Certified w_dy(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol = kDefaultTol);

// Along x = 1/2, with s = m + n/2 and e = e^{-πa(yn² + s²/y)}:
//   A(a;y) = Σ n² e,   B(a;y) = Σ (n² - s²/y²)² e.
Certified double_sum_A(double a, double y, double tol = kDefaultTol);
Certified double_sum_B(double a, double y, double tol = kDefaultTol);

// (∂²/∂y² + (2/y)∂/∂y) W on x = 1/2, from the double sums:
//   Σ_a  ± [(πa)² B(a) - (2πa/y) A(a)].
// Throws NotOnGamma if |x - 1/2| > 1e-12.
Certified radial_operator(const FunctionalSpec& spec, const UpperHalfPoint& z, double tol = kDefaultTol);

// -∂W/∂x / (2√(y/2α) e^{-παy}) for the standard functional θ(α) - βθ(2α).
double e_functional(double alpha, double beta, const UpperHalfPoint& z, double tol = kDefaultTol);

} // namespace thetamin
