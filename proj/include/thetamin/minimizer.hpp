#pragma once

#include <functional>
#include <vector>

#include "thetamin/lattice_theta.hpp"

namespace thetamin {

// Real-valued function on the upper half plane to be minimized.
using Objective = std::function<double(const UpperHalfPoint&)>;

struct ScanOptions {
    int nx = 128;
    int ny = 128;
    double y_max = 12.0;
    double tol = 1e-15;     // relative evaluation tolerance
    double step_min = 1e-9; // pattern search stops below this step
    int threads = 0;        // <= 0: hardware parallelism
    void validate() const;
};

// The grid starts slightly below the hexagonal height.
inline constexpr double kScanYMinFactor = 0.999;

// Values along x = 1/2 at increasing heights and the fitted coefficient of
// y^power from the two largest probes.
struct DivergenceEvidence {
    std::vector<double> y;
    std::vector<double> value;
    double power = 0.5;
    double slope = 0.0;
    bool strictly_decreasing = false;
    bool diverges = false;
};

struct ScanReport {
    FunctionalSpec spec;
    ScanOptions grid;
    double y_min = 0.0;
    long grid_points = 0; // admissible grid points evaluated
    UpperHalfPoint best_point;
    double best_value = 0.0;
    UpperHalfPoint refined_point;
    double refined_value = 0.0;
    int refine_steps = 0;
    double hexagonal_value = 0.0;
    double hexagonal_gap = 0.0; // refined_value - hexagonal_value
    bool divergence_detected = false;
    DivergenceEvidence divergence;
    double telescoping_residual = 0.0; // set by iterate_2k
};

// Grid argmin of f over {0 ≤ x ≤ 1/2, y_min ≤ y ≤ y_max} ∩ closure(𝒟), then
// coordinate pattern search (halving steps) projected onto that set.
// Divergence fields are left empty.
ScanReport scan_objective(const Objective& f, const ScanOptions& options);

// scan_objective on W plus the divergence probe along x = 1/2. The search
// runs on W - (1 - β) (origin removed), which resolves the flat minimum far
// below W's rounding level; reported values are W.
ScanReport scan_domain(const FunctionalSpec& spec, const ScanOptions& options = {});

struct ProfilePoint {
    double y, value, dvalue;
    double value_tol, dvalue_tol;
};
// W and ∂W/∂y along x = 1/2; ys increasing, ys[0] ≥ √3/2.
std::vector<ProfilePoint> vertical_line_profile(const FunctionalSpec& spec, const std::vector<double>& ys,
                                                double tol = kDefaultTol);

// Leading coefficient c of W(1/2 + iy) ~ c√y: √(1/α)(1 - β ratio^{-k/2}).
double predicted_slope(const FunctionalSpec& spec);

// Probe heights {10, 20, 40, 80}, scaled up so that exponential corrections
// at both Gaussian widths stay negligible.
std::vector<double> divergence_probes(const FunctionalSpec& spec);

// Evaluates value_at(y) at the probes and fits c·y^power from the two largest.
// Diverges iff c < -tol, values strictly decrease and the last is below the
// first by more than tol.
DivergenceEvidence fit_divergence(const std::vector<double>& ys, const std::function<double(double)>& value_at,
                                  double power, double tol);

DivergenceEvidence detect_nonexistence(const FunctionalSpec& spec, double tol = 1e-9);

// ((√2)^k - β)θ(2^kα) + Σ_{n<k} (√2)^n (θ(2^nα) - √2 θ(2^{n+1}α)).
Certified telescoping_decomposition(double alpha, double beta, int k, const UpperHalfPoint& z,
                                    double tol = kDefaultTol);

// scan_domain on θ(α) - βθ(2^kα); checks the telescoping form against the
// direct value at the hexagonal, grid and refined points (IdentityViolated).
ScanReport iterate_2k(double alpha, double beta, int k, const ScanOptions& options = {});

enum class MinimizerClass { Hexagonal, Other };
const char* to_string(MinimizerClass c);

inline constexpr double kHexagonalTol = 1e-5;
// Distance of reduce(z) from 1/2 + i√3/2 is at most tol.
bool is_hexagonal(const UpperHalfPoint& z, double tol = kHexagonalTol);

struct PhaseCell {
    double alpha, beta;
    int k;
    bool exists;
    MinimizerClass cls;
    ScanReport report;
};
// One scan per (α, β) cell, row-major in alphas.
std::vector<PhaseCell> phase_report(const std::vector<double>& alphas, const std::vector<double>& betas, int k,
                                    const ScanOptions& options = {});

struct Transition {
    double lo, hi; // minimizer exists at lo, diverges at hi
    int probes;
};
// Bisection on β with detect_nonexistence; throws RootNotBracketed.
Transition beta_transition(double alpha, int k, double beta_lo, double beta_hi, double resolution = 1e-3,
                           double tol = 1e-9);

} // namespace thetamin
