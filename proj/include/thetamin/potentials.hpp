#pragma once

#include <string>
#include <vector>

#include "thetamin/minimizer.hpp"

namespace thetamin {

// Pair potentials f(r) in the squared distance r = |P|², lattices of unit area.
//   ExpDiff, branch F:  e^{-παr} - β e^{-2παr}                (α ≥ 1)
//   ExpDiff, branch G:  e^{-πγr} - β e^{-πγr/2}               (0 < γ < 1)
//   WeightedGaussQuadrature: Σ w_i · (ExpDiff at α x_i, resp. γ x_i),
//     nodes x_i ≥ 1 for F and 0 < x_i ≤ 1 for G, weights w_i ≥ 0
//   Yukawa:             e^{-παr}/r - β e^{-2παr}/(2r)          (α ≥ 1)
enum class PotentialKind { ExpDiff, WeightedGaussQuadrature, Yukawa };
enum class Branch { F, G };

struct QuadratureNode {
    double x;
    double weight;
};

struct PotentialSpec {
    PotentialKind kind = PotentialKind::ExpDiff;
    Branch branch = Branch::F;
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.5;
    std::vector<QuadratureNode> nodes;

    void validate() const; // InvalidArgument on any violated invariant
    // {"kind": "exp-diff"|"quadrature"|"yukawa", "branch": "f"|"g", "alpha",
    //  "beta", "gamma", "nodes": [{"x": .., "weight": ..}, ...]}
    static PotentialSpec from_json(const std::string& text);
    std::string to_json() const;
};

const char* to_string(PotentialKind k);
const char* to_string(Branch b);

// E_f(z) = Σ_{P ≠ 0} f(|P|²) for the lattice ℤ ⊕ zℤ scaled to unit area.
// Yukawa uses πα ∫_1^∞ [(θ(αx) - 1) - β(θ(2αx) - 1)] dx by adaptive Simpson.
double lattice_energy(const PotentialSpec& spec, const UpperHalfPoint& z, double tol = 1e-12);

// The same Yukawa energy as a direct shell sum over the lattice.
Certified yukawa_direct_energy(double alpha, double beta, const UpperHalfPoint& z, double tol = 1e-13);

struct YukawaIntegral {
    double value;
    double tail_bound; // bound on the truncated upper range
    double upper_limit;
    long evaluations;
};
YukawaIntegral yukawa_integral_energy(double alpha, double beta, const UpperHalfPoint& z, double tol = 1e-12);

// Scans the energy over the fundamental domain; values in energy units.
// Divergence is probed along x = 1/2 (fitted against √y, or y for Yukawa).
ScanReport minimize_energy(const PotentialSpec& spec, const ScanOptions& options = {});

// θ(α) - βθ(2α) = factor · (θ(γ) - β'θ(γ/2)) with γ = 1/α, β' = β/2,
// factor = γ, from θ(1/a; z) = a θ(a; z).
struct Duality {
    double gamma;
    double beta_prime;
    double factor;
};
Duality duality_transfer(double alpha, double beta);

} // namespace thetamin
