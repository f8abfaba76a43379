#ifndef THETAMIN_H
#define THETAMIN_H

/* C interface to the thetamin library. Every call returns a status; on
 * failure a message is available from thetamin_last_error() on the same
 * thread. Handles are opaque and owned by the caller (free with the matching
 * *_free). Strings returned through char** are freed with thetamin_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(THETAMIN_BUILDING)
#define THETAMIN_API __attribute__((visibility("default")))
#else
#define THETAMIN_API
#endif

typedef enum thetamin_status {
    THETAMIN_OK = 0,
    THETAMIN_INVALID_ARGUMENT = 1,
    THETAMIN_ITERATION_LIMIT = 2,
    THETAMIN_BUDGET_EXCEEDED = 3,
    THETAMIN_CUTOFF_EXCEEDED = 4,
    THETAMIN_NOT_ON_GAMMA = 5,
    THETAMIN_ROOT_NOT_BRACKETED = 6,
    THETAMIN_GRID_OUTSIDE_WINDOW = 7,
    THETAMIN_QUADRATURE_FAILURE = 8,
    THETAMIN_IDENTITY_VIOLATED = 9,
    THETAMIN_OUT_OF_MEMORY = 10,
    THETAMIN_INTERNAL = 11
} thetamin_status;

THETAMIN_API const char* thetamin_version(void);
THETAMIN_API const char* thetamin_status_name(thetamin_status s);
/* Message of the last failing call on this thread ("" if none). */
THETAMIN_API const char* thetamin_last_error(void);
THETAMIN_API void thetamin_string_free(char* s);

/* A truncated series value with a bound on the discarded tail. */
typedef struct thetamin_certified {
    double value;
    double tail_bound;
    int terms;
} thetamin_certified;

/* W(z) = θ(α;z) - β θ(ratio^k α;z); the standard functional has ratio 2, k 1. */
typedef struct thetamin_functional {
    double alpha;
    double beta;
    double ratio;
    int k;
} thetamin_functional;

THETAMIN_API void thetamin_functional_default(thetamin_functional* f);

typedef enum thetamin_quantity {
    THETAMIN_THETA = 0,  /* θ(α;z), uses alpha only */
    THETAMIN_W = 1,      /* W(z) */
    THETAMIN_W_DX = 2,   /* ∂W/∂x */
    THETAMIN_W_DY = 3,   /* ∂W/∂y */
    THETAMIN_RADIAL = 4  /* (∂²/∂y² + (2/y)∂/∂y)W on x = 1/2 */
} thetamin_quantity;

THETAMIN_API thetamin_status thetamin_eval(thetamin_quantity q, const thetamin_functional* f, double x, double y,
                                           double tol, thetamin_certified* out);

/* Maps z into the closure of {|z| > 1, 0 < x < 1/2}. The element acts as
 * w -> (a w + b)/(c w + d), with w = -conj(z) when reflected. word (may be
 * NULL) receives the generators in order of application, space separated:
 * "T<t>" (z + t), "S" (-1/z), "R" (-conj z). */
typedef struct thetamin_reduction {
    double x, y;
    long long a, b, c, d;
    int reflected;
    int iterations;
} thetamin_reduction;

THETAMIN_API thetamin_status thetamin_reduce(double x, double y, thetamin_reduction* out, char** word);

typedef struct thetamin_scan_options {
    int nx, ny;
    double y_max;
    double tol;      /* relative evaluation tolerance */
    double step_min; /* pattern search stops below this step */
    int threads;     /* <= 0: hardware parallelism */
} thetamin_scan_options;

THETAMIN_API void thetamin_scan_options_default(thetamin_scan_options* o);

typedef struct thetamin_scan_report thetamin_scan_report;

/* Flat view of a scan. exists is 0 when divergence along x = 1/2 was
 * detected; hexagonal is 1 when a minimizer exists and the refined point is
 * within 1e-5 of 1/2 + i√3/2. */
typedef struct thetamin_scan_summary {
    double alpha, beta;
    int k;
    int exists;
    int hexagonal;
    double best_x, best_y, best_value;
    double refined_x, refined_y, refined_value;
    double hexagonal_value;
    double hexagonal_gap;
    int divergence_detected;
    double divergence_slope;
    double telescoping_residual;
    long grid_points;
    int refine_steps;
} thetamin_scan_summary;

THETAMIN_API thetamin_status thetamin_scan(const thetamin_functional* f, const thetamin_scan_options* o,
                                           thetamin_scan_report** out);
/* Scan of θ(α) - βθ(2^k α) with the telescoping identity checked. */
THETAMIN_API thetamin_status thetamin_iterate_2k(double alpha, double beta, int k, const thetamin_scan_options* o,
                                                 thetamin_scan_report** out);
THETAMIN_API thetamin_status thetamin_scan_report_summary(const thetamin_scan_report* r, thetamin_scan_summary* out);
THETAMIN_API thetamin_status thetamin_scan_report_json(const thetamin_scan_report* r, char** out);
THETAMIN_API void thetamin_scan_report_free(thetamin_scan_report* r);

/* One scan per (α, β), row-major in alphas. */
typedef struct thetamin_phase_table thetamin_phase_table;

THETAMIN_API thetamin_status thetamin_phase(const double* alphas, size_t n_alphas, const double* betas,
                                            size_t n_betas, int k, const thetamin_scan_options* o,
                                            thetamin_phase_table** out);
THETAMIN_API size_t thetamin_phase_table_size(const thetamin_phase_table* t);
THETAMIN_API thetamin_status thetamin_phase_table_cell(const thetamin_phase_table* t, size_t i,
                                                       thetamin_scan_summary* out);
THETAMIN_API thetamin_status thetamin_phase_table_json(const thetamin_phase_table* t, char** out);
THETAMIN_API void thetamin_phase_table_free(thetamin_phase_table* t);

/* Bisection on β for the existence/nonexistence transition at fixed α, k. */
THETAMIN_API thetamin_status thetamin_beta_transition(double alpha, int k, double beta_lo, double beta_hi,
                                                      double resolution, double* lo, double* hi);

/* Sweep grids: `second` is y, or y/α for q-positivity, p-bounds and
 * epsilon-bounds; n_x > 0 adds an x axis for interior claims. */
typedef struct thetamin_grid {
    double alpha_min, alpha_max;
    double second_min, second_max;
    int n_alpha, n_second;
    int n_x;
    double beta;
} thetamin_grid;

typedef struct thetamin_bound_report thetamin_bound_report;

typedef struct thetamin_bound_summary {
    long samples;
    double min_value, argmin_alpha, argmin_y;
    double max_value, argmax_alpha, argmax_y;
    int claim_holds;
} thetamin_bound_summary;

/* Claim names: r-positivity, w-positivity, q-positivity, p-bounds,
 * epsilon-bounds, x-monotonicity, double-sum-sandwich, e-lower-bound. */
THETAMIN_API size_t thetamin_claim_count(void);
THETAMIN_API const char* thetamin_claim_name(size_t i);
THETAMIN_API thetamin_status thetamin_default_grid(const char* claim, thetamin_grid* out);
/* grid may be NULL for the claim's default grid. */
THETAMIN_API thetamin_status thetamin_verify(const char* claim, const thetamin_grid* grid, int threads,
                                             thetamin_bound_report** out);
THETAMIN_API thetamin_status thetamin_bound_report_summary(const thetamin_bound_report* r,
                                                           thetamin_bound_summary* out);
THETAMIN_API thetamin_status thetamin_bound_report_json(const thetamin_bound_report* r, char** out);
THETAMIN_API void thetamin_bound_report_free(thetamin_bound_report* r);

/* Pair potentials, parsed from JSON:
 * {"kind": "exp-diff"|"quadrature"|"yukawa", "branch": "f"|"g", "alpha",
 *  "beta", "gamma", "nodes": [{"x": .., "weight": ..}, ...]} */
typedef struct thetamin_potential thetamin_potential;

THETAMIN_API thetamin_status thetamin_potential_from_json(const char* text, thetamin_potential** out);
THETAMIN_API thetamin_status thetamin_potential_json(const thetamin_potential* p, char** out);
THETAMIN_API void thetamin_potential_free(thetamin_potential* p);
/* Lattice energy Σ_{P≠0} f(|P|²) at z; tol is the Yukawa quadrature tolerance. */
THETAMIN_API thetamin_status thetamin_energy(const thetamin_potential* p, double x, double y, double tol,
                                             double* out);
THETAMIN_API thetamin_status thetamin_minimize_energy(const thetamin_potential* p, const thetamin_scan_options* o,
                                                      thetamin_scan_report** out);
/* θ(α) - βθ(2α) = factor · (θ(γ) - β'θ(γ/2)). */
THETAMIN_API thetamin_status thetamin_duality(double alpha, double beta, double* gamma, double* beta_prime,
                                              double* factor);

#ifdef __cplusplus
}
#endif

#endif
