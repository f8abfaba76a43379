#pragma once

namespace thetamin {

// Accuracy request for a truncated series and what was achieved.
struct TruncationBudget {
    double abs_tol = 1e-14;
    int max_terms = 10000;
};

// A truncated series value together with a certified bound on the
// discarded tail (|exact - value| <= tail_bound, up to rounding).
struct Certified {
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
};

// ϑ(X;Y) = 1 + 2 Σ e^{-πn²X} cos(2πnY).
Certified theta1d_series(double X, double Y, const TruncationBudget& budget = {});

// ϑ(X;Y) = X^{-1/2} Σ_k e^{-π(k-Y)²/X}; good for small X.
Certified theta1d_poisson(double X, double Y, const TruncationBudget& budget = {});

// Jacobi triple product truncated to n_factors factors. No tail bound.
double theta1d_product(double X, double Y, int n_factors);

// Series if X >= 0.5, Poisson otherwise.
Certified theta1d(double X, double Y, const TruncationBudget& budget = {});
inline constexpr double kThetaPathCrossover = 0.5;

// ∂ϑ/∂Y = -4π Σ n e^{-πn²X} sin(2πnY).
Certified theta1d_dY_series(double X, double Y, const TruncationBudget& budget = {});
Certified theta1d_dY_poisson(double X, double Y, const TruncationBudget& budget = {});
Certified theta1d_dY(double X, double Y, const TruncationBudget& budget = {});

// sup_Y |∂ϑ/∂Y| <= 4π Σ n e^{-πn²X}; upper bound including its own tail.
double theta1d_dY_supremum(double X);

// μ(X) = Σ_{n≥2} n² e^{-π(n²-1)X},  ν(X) = Σ_{n≥2} e^{-π(n²-1)X}.
Certified tail_mu(double X, const TruncationBudget& budget = {});
Certified tail_nu(double X, const TruncationBudget& budget = {});

// Bounds ϑ̲ ≤ ϑ̄ such that -ϑ̄ sin(2πY) ≤ ∂ϑ/∂Y ≤ -ϑ̲ sin(2πY) for Y ∈ (0,1/2).
struct Envelope {
    double lower;
    double upper;
};

inline constexpr double kEnvelopeLargeXMin = 0.2;          // exponential form valid for X > 1/5
double envelope_small_x_max();                             // π/(π+2)
Envelope theta1d_envelope_large_x(double X);               // 4πe^{-πX}(1 ∓ μ(X))
Envelope theta1d_envelope_small_x(double X);               // (πe^{-π/4X}X^{-3/2}, X^{-3/2})
Envelope theta1d_envelopes(double X);                      // tighter of the applicable ones

} // namespace thetamin
