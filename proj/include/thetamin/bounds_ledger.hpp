#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thetamin/halfplane.hpp"

namespace thetamin {

// Tail constants of the lower bounds on ℰ.
struct Sigmas {
    double s1, s2, s3, s4;
};
Sigmas sigma_1_4(double alpha, double y, double beta);

// ℛ = √2 ϑ̲(y/α) - β e^{-απy} ϑ̄(y/2α) - 4√2 e^{-3απy} ϑ̄(y/α).
double r_bound(double alpha, double beta, double y);

struct Beta0 {
    double candidates[3];
    double value; // the minimum
};
Beta0 beta0_constant();

struct EpsilonParts {
    double part[4];
    double total() const { return part[0] + part[1] + part[2] + part[3]; }
};
EpsilonParts epsilon_a_parts(double alpha, double y);
EpsilonParts epsilon_b_parts(double alpha, double y);
inline double epsilon_a(double alpha, double y) { return epsilon_a_parts(alpha, y).total(); }
inline double epsilon_b(double alpha, double y) { return epsilon_b_parts(alpha, y).total(); }

// Stated uniform bounds on ε_a, ε_b over {α ≥ 1, y ≥ √3/2, y/α ≤ 3}.
inline constexpr double kEpsilonACap = 0.15;
inline constexpr double kEpsilonBCap = 0.006;

// 𝒲(y;α) = 1 + (2(y²-1/4)² - (4/πα) y³ (1+ε_a)) e^{-πα(y - 3/4y)} - 4√2 (1+ε_b) e^{-πα/y}.
double w_lower_bound(double alpha, double y, double eps_a, double eps_b);
double w_lower_bound(double alpha, double y); // ε evaluated at (α, y)

// 2(y²-1/4)² - (4/π) y³ (1+ε_a) and its root on [√3/2, 2].
double y_epsilon_function(double y, double eps_a = kEpsilonACap);
double y_epsilon_root(double eps_a = kEpsilonACap);

// Piecewise lower bounds for 𝒲 at α = 1 and the α/y threshold of the last branch.
struct WBranchConstants {
    double first;        // y ∈ [√3/2, 1]
    double second;       // min over y ∈ [1, y_ε]
    double alpha_over_y; // last branch positive iff α/y exceeds this
    double y_over_alpha; // its reciprocal
};
WBranchConstants w_branch_constants(double eps_a = kEpsilonACap, double eps_b = kEpsilonBCap);

struct PParts {
    double s5, s6, s7;
    double total() const { return s5 + s6 + s7; }
};
PParts p_parts(double alpha, double y);
inline double p_function(double alpha, double y) { return p_parts(alpha, y).total(); }

// 𝒬 = πy/2α - 1/2 - (π/α - 1/2)e^{-πy/2α} - y e^{-πy(α-1/2α)}𝒫(y;α) - y e^{-πy(2α-1/2α)}𝒫(y;2α).
double q_function(double alpha, double y);

// Bounds on the x = 1/2 double sums A(a;y), B(a;y) (see lattice_theta.hpp):
//   A(α)  ≤ upperA,  B(2α) ≤ upperB,  A(2α) ≥ lowerA,  B(α) ≥ lowerB.
struct DoubleSumBounds {
    double upperA, upperB, lowerA, lowerB;
};
DoubleSumBounds double_sum_bounds(double alpha, double y);

struct DoubleSumValues {
    double A_alpha, B_2alpha, A_2alpha, B_alpha;
};
DoubleSumValues double_sum_values(double alpha, double y, double tol = 1e-15);

// Lower bounds ℰ ≥ sin(2πx)·bracket on x ∈ [0,1/3] and [1/3,1/2]. Stated
// keeps a -4√2 e^{-3απy} ϑ̄(y/α) term on [0,1/3]; Proof omits it.
enum class ELowerVariant { Stated, Proof };
double e_lower_bracket(double alpha, double beta, const UpperHalfPoint& z, ELowerVariant v);
double e_lower_bound(double alpha, double beta, const UpperHalfPoint& z, ELowerVariant v);

struct Extremum {
    double value;
    double alpha;
    double y;
};

// Suprema over {α ≥ 1, y ≥ √3/2, y/α ≤ 3}. At fixed t = y/α every part is
// non-increasing in α, so the supremum is a 1-d search over t at the smallest
// admissible α; grid of `step` in t plus golden-section refinement.
Extremum epsilon_a_supremum(double step = 1e-3);
Extremum epsilon_b_supremum(double step = 1e-3);

// max of y·𝒫(y; multiplier·α) over α ∈ [1, alpha_max], t = y/α ∈ [1, t_max].
Extremum p_supremum(double multiplier, double alpha_max, double t_max, double t_step = 1e-3,
                    double alpha_step = 0.05);

enum class Claim {
    RPositivity,
    WPositivity,
    QPositivity,
    PBounds,
    EpsilonBounds,
    XMonotonicity,
    DoubleSumSandwich,
    ELowerBound,
};
const char* to_string(Claim c);
Claim claim_from_string(const std::string& s); // kebab-case names

// Rectangle in α and a second variable; `second` is y for most claims and
// t = y/α for QPositivity, PBounds and EpsilonBounds. For WPositivity the
// upper y limit is clipped to 1.8α per row. n_x > 0 adds an x-axis for
// claims evaluated on the domain interior.
struct GridSpec {
    double alpha_min, alpha_max;
    double second_min, second_max;
    int n_alpha, n_second;
    int n_x = 0;
    double beta = 0.0;
};
GridSpec default_grid(Claim c);

struct BoundReport {
    std::string name;
    std::string quantity; // what min/max refer to
    std::string second_axis;
    GridSpec grid;
    long samples = 0;
    double min_value = 0.0;
    Extremum argmin{};
    double max_value = 0.0;
    Extremum argmax{};
    bool upper_bound_claim = false;
    double stated_bound = 0.0; // for upper-bound claims
    bool claim_holds = false;
    std::vector<std::pair<std::string, double>> details;
};

BoundReport verify_sweep(Claim claim, const GridSpec& grid, int threads = 0);

} // namespace thetamin
