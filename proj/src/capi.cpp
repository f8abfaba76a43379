#include "thetamin/thetamin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetamin/bounds_ledger.hpp"
#include "thetamin/errors.hpp"
#include "thetamin/minimizer.hpp"
#include "thetamin/potentials.hpp"

using namespace thetamin;
using nlohmann::json;

struct thetamin_scan_report {
    ScanReport report;
};
struct thetamin_phase_table {
    std::vector<PhaseCell> cells;
};
struct thetamin_bound_report {
    BoundReport report;
};
struct thetamin_potential {
    PotentialSpec spec;
};

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::size_t kClaimCount = 8;

thread_local std::string last_error;

thetamin_status status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument: return THETAMIN_INVALID_ARGUMENT;
    case ErrorKind::IterationLimit: return THETAMIN_ITERATION_LIMIT;
    case ErrorKind::BudgetExceeded: return THETAMIN_BUDGET_EXCEEDED;
    case ErrorKind::CutoffExceeded: return THETAMIN_CUTOFF_EXCEEDED;
    case ErrorKind::NotOnGamma: return THETAMIN_NOT_ON_GAMMA;
    case ErrorKind::RootNotBracketed: return THETAMIN_ROOT_NOT_BRACKETED;
    case ErrorKind::GridOutsideWindow: return THETAMIN_GRID_OUTSIDE_WINDOW;
    case ErrorKind::QuadratureFailure: return THETAMIN_QUADRATURE_FAILURE;
    case ErrorKind::IdentityViolated: return THETAMIN_IDENTITY_VIOLATED;
    }
    return THETAMIN_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread-local message.
template <class F>
thetamin_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return THETAMIN_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return THETAMIN_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return THETAMIN_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return THETAMIN_INTERNAL;
    }
}

template <class T>
void need(const T* p, const char* what) {
    require(p != nullptr, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

FunctionalSpec to_spec(const thetamin_functional& f) { return {f.alpha, f.beta, f.ratio, f.k}; }

ScanOptions to_options(const thetamin_scan_options* o) {
    ScanOptions s;
    if (o) s = {o->nx, o->ny, o->y_max, o->tol, o->step_min, o->threads};
    return s;
}

bool exists_of(const ScanReport& r) { return !r.divergence_detected; }
bool hexagonal_of(const ScanReport& r) { return exists_of(r) && is_hexagonal(r.refined_point); }

thetamin_scan_summary summarize(const ScanReport& r) {
    thetamin_scan_summary s{};
    s.alpha = r.spec.alpha;
    s.beta = r.spec.beta;
    s.k = r.spec.k;
    s.exists = exists_of(r);
    s.hexagonal = hexagonal_of(r);
    s.best_x = r.best_point.x;
    s.best_y = r.best_point.y;
    s.best_value = r.best_value;
    s.refined_x = r.refined_point.x;
    s.refined_y = r.refined_point.y;
    s.refined_value = r.refined_value;
    s.hexagonal_value = r.hexagonal_value;
    s.hexagonal_gap = r.hexagonal_gap;
    s.divergence_detected = r.divergence_detected;
    s.divergence_slope = r.divergence.slope;
    s.telescoping_residual = r.telescoping_residual;
    s.grid_points = r.grid_points;
    s.refine_steps = r.refine_steps;
    return s;
}

json point_json(const UpperHalfPoint& z, double value) { return {{"x", z.x}, {"y", z.y}, {"value", value}}; }

json scan_json(const ScanReport& r) {
    json probes = json::array();
    for (std::size_t i = 0; i < r.divergence.y.size(); ++i)
        probes.push_back({{"y", r.divergence.y[i]}, {"value", r.divergence.value[i]}});
    json refined = point_json(r.refined_point, r.refined_value);
    refined["steps"] = r.refine_steps;
    return {
        {"spec", {{"alpha", r.spec.alpha}, {"beta", r.spec.beta}, {"ratio", r.spec.ratio}, {"k", r.spec.k}}},
        {"grid",
         {{"nx", r.grid.nx},
          {"ny", r.grid.ny},
          {"y_min", r.y_min},
          {"y_max", r.grid.y_max},
          {"points", r.grid_points}}},
        {"exists", exists_of(r)},
        {"class", to_string(hexagonal_of(r) ? MinimizerClass::Hexagonal : MinimizerClass::Other)},
        {"best", point_json(r.best_point, r.best_value)},
        {"refined", refined},
        {"hexagonal", {{"value", r.hexagonal_value}, {"gap", r.hexagonal_gap}}},
        {"divergence_detected", r.divergence_detected},
        {"divergence",
         {{"power", r.divergence.power},
          {"slope", r.divergence.slope},
          {"strictly_decreasing", r.divergence.strictly_decreasing},
          {"probes", probes}}},
        {"telescoping_residual", r.telescoping_residual},
    };
}

json grid_json(const GridSpec& g) {
    return {{"alpha_min", g.alpha_min},   {"alpha_max", g.alpha_max}, {"second_min", g.second_min},
            {"second_max", g.second_max}, {"n_alpha", g.n_alpha},     {"n_second", g.n_second},
            {"n_x", g.n_x},               {"beta", g.beta}};
}

json extremum_json(const Extremum& e) { return {{"value", e.value}, {"alpha", e.alpha}, {"y", e.y}}; }

json bound_json(const BoundReport& r) {
    json details = json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    json j = {
        {"name", r.name},
        {"quantity", r.quantity},
        {"second_axis", r.second_axis},
        {"grid", grid_json(r.grid)},
        {"samples", r.samples},
        {"min", r.min_value},
        {"argmin", extremum_json(r.argmin)},
        {"max", r.max_value},
        {"argmax", extremum_json(r.argmax)},
        {"upper_bound_claim", r.upper_bound_claim},
        {"holds", r.claim_holds},
        {"details", details},
    };
    if (r.upper_bound_claim) j["stated_bound"] = r.stated_bound;
    return j;
}

thetamin_grid to_c_grid(const GridSpec& g) {
    return {g.alpha_min, g.alpha_max, g.second_min, g.second_max, g.n_alpha, g.n_second, g.n_x, g.beta};
}

} // namespace

extern "C" {

const char* thetamin_version(void) { return kVersion; }

const char* thetamin_status_name(thetamin_status s) {
    switch (s) {
    case THETAMIN_OK: return "ok";
    case THETAMIN_INVALID_ARGUMENT: return to_string(ErrorKind::InvalidArgument);
    case THETAMIN_ITERATION_LIMIT: return to_string(ErrorKind::IterationLimit);
    case THETAMIN_BUDGET_EXCEEDED: return to_string(ErrorKind::BudgetExceeded);
    case THETAMIN_CUTOFF_EXCEEDED: return to_string(ErrorKind::CutoffExceeded);
    case THETAMIN_NOT_ON_GAMMA: return to_string(ErrorKind::NotOnGamma);
    case THETAMIN_ROOT_NOT_BRACKETED: return to_string(ErrorKind::RootNotBracketed);
    case THETAMIN_GRID_OUTSIDE_WINDOW: return to_string(ErrorKind::GridOutsideWindow);
    case THETAMIN_QUADRATURE_FAILURE: return to_string(ErrorKind::QuadratureFailure);
    case THETAMIN_IDENTITY_VIOLATED: return to_string(ErrorKind::IdentityViolated);
    case THETAMIN_OUT_OF_MEMORY: return "OutOfMemory";
    case THETAMIN_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* thetamin_last_error(void) { return last_error.c_str(); }

void thetamin_string_free(char* s) { std::free(s); }

void thetamin_functional_default(thetamin_functional* f) {
    if (f) *f = {1.0, 0.0, 2.0, 1};
}

thetamin_status thetamin_eval(thetamin_quantity q, const thetamin_functional* f, double x, double y, double tol,
                              thetamin_certified* out) {
    return guarded([&] {
        need(f, "functional");
        need(out, "out");
        const FunctionalSpec spec = to_spec(*f);
        spec.validate();
        require(tol > 0.0, "eval: tol must be positive");
        const UpperHalfPoint z(x, y);
        Certified c;
        switch (q) {
        case THETAMIN_THETA: c = theta2d(spec.alpha, z, tol); break;
        case THETAMIN_W: c = w_beta(spec, z, tol); break;
        case THETAMIN_W_DX: c = w_dx(spec, z, tol); break;
        case THETAMIN_W_DY: c = w_dy(spec, z, tol); break;
        case THETAMIN_RADIAL: c = radial_operator(spec, z, tol); break;
        default: fail(ErrorKind::InvalidArgument, "eval: unknown quantity");
        }
        *out = {c.value, c.tail_bound, c.terms};
    });
}

thetamin_status thetamin_reduce(double x, double y, thetamin_reduction* out, char** word) {
    return guarded([&] {
        need(out, "out");
        const Reduction r = reduce(UpperHalfPoint(x, y));
        std::string w;
        for (const auto& g : r.word) w += (w.empty() ? "" : " ") + g;
        const GroupElement& e = r.element;
        *out = {r.point.x, r.point.y, e.a, e.b, e.c, e.d, e.reflected, r.iterations};
        if (word) *word = dup_string(w);
    });
}

void thetamin_scan_options_default(thetamin_scan_options* o) {
    if (!o) return;
    const ScanOptions s;
    *o = {s.nx, s.ny, s.y_max, s.tol, s.step_min, s.threads};
}

thetamin_status thetamin_scan(const thetamin_functional* f, const thetamin_scan_options* o,
                              thetamin_scan_report** out) {
    return guarded([&] {
        need(f, "functional");
        need(out, "out");
        *out = new thetamin_scan_report{scan_domain(to_spec(*f), to_options(o))};
    });
}

thetamin_status thetamin_iterate_2k(double alpha, double beta, int k, const thetamin_scan_options* o,
                                    thetamin_scan_report** out) {
    return guarded([&] {
        need(out, "out");
        *out = new thetamin_scan_report{iterate_2k(alpha, beta, k, to_options(o))};
    });
}

thetamin_status thetamin_scan_report_summary(const thetamin_scan_report* r, thetamin_scan_summary* out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = summarize(r->report);
    });
}

thetamin_status thetamin_scan_report_json(const thetamin_scan_report* r, char** out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = dup_string(scan_json(r->report).dump());
    });
}

void thetamin_scan_report_free(thetamin_scan_report* r) { delete r; }

thetamin_status thetamin_phase(const double* alphas, size_t n_alphas, const double* betas, size_t n_betas, int k,
                               const thetamin_scan_options* o, thetamin_phase_table** out) {
    return guarded([&] {
        need(out, "out");
        require((alphas || n_alphas == 0) && (betas || n_betas == 0), "phase: NULL value list");
        std::vector<double> a(alphas, alphas + n_alphas), b(betas, betas + n_betas);
        *out = new thetamin_phase_table{phase_report(a, b, k, to_options(o))};
    });
}

size_t thetamin_phase_table_size(const thetamin_phase_table* t) { return t ? t->cells.size() : 0; }

thetamin_status thetamin_phase_table_cell(const thetamin_phase_table* t, size_t i, thetamin_scan_summary* out) {
    return guarded([&] {
        need(t, "table");
        need(out, "out");
        require(i < t->cells.size(), "phase: cell index out of range");
        const PhaseCell& c = t->cells[i];
        *out = summarize(c.report);
        out->alpha = c.alpha;
        out->beta = c.beta;
        out->k = c.k;
        out->exists = c.exists;
        out->hexagonal = c.cls == MinimizerClass::Hexagonal;
    });
}

thetamin_status thetamin_phase_table_json(const thetamin_phase_table* t, char** out) {
    return guarded([&] {
        need(t, "table");
        need(out, "out");
        json cells = json::array();
        for (const auto& c : t->cells) {
            json j = scan_json(c.report);
            j["alpha"] = c.alpha;
            j["beta"] = c.beta;
            j["k"] = c.k;
            j["exists"] = c.exists;
            j["class"] = to_string(c.cls);
            cells.push_back(std::move(j));
        }
        *out = dup_string(cells.dump());
    });
}

void thetamin_phase_table_free(thetamin_phase_table* t) { delete t; }

thetamin_status thetamin_beta_transition(double alpha, int k, double beta_lo, double beta_hi, double resolution,
                                         double* lo, double* hi) {
    return guarded([&] {
        need(lo, "lo");
        need(hi, "hi");
        const Transition t = beta_transition(alpha, k, beta_lo, beta_hi, resolution);
        *lo = t.lo;
        *hi = t.hi;
    });
}

size_t thetamin_claim_count(void) { return kClaimCount; }

const char* thetamin_claim_name(size_t i) { return i < kClaimCount ? to_string(static_cast<Claim>(i)) : nullptr; }

thetamin_status thetamin_default_grid(const char* claim, thetamin_grid* out) {
    return guarded([&] {
        need(claim, "claim");
        need(out, "out");
        *out = to_c_grid(default_grid(claim_from_string(claim)));
    });
}

thetamin_status thetamin_verify(const char* claim, const thetamin_grid* grid, int threads,
                                thetamin_bound_report** out) {
    return guarded([&] {
        need(claim, "claim");
        need(out, "out");
        const Claim c = claim_from_string(claim);
        GridSpec g = default_grid(c);
        if (grid)
            g = {grid->alpha_min, grid->alpha_max, grid->second_min, grid->second_max,
                 grid->n_alpha,   grid->n_second,  grid->n_x,        grid->beta};
        *out = new thetamin_bound_report{verify_sweep(c, g, threads)};
    });
}

thetamin_status thetamin_bound_report_summary(const thetamin_bound_report* r, thetamin_bound_summary* out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        const BoundReport& b = r->report;
        *out = {b.samples,          b.min_value, b.argmin.alpha, b.argmin.y, b.max_value,
                b.argmax.alpha, b.argmax.y, b.claim_holds};
    });
}

thetamin_status thetamin_bound_report_json(const thetamin_bound_report* r, char** out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = dup_string(bound_json(r->report).dump());
    });
}

void thetamin_bound_report_free(thetamin_bound_report* r) { delete r; }

thetamin_status thetamin_potential_from_json(const char* text, thetamin_potential** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new thetamin_potential{PotentialSpec::from_json(text)};
    });
}

thetamin_status thetamin_potential_json(const thetamin_potential* p, char** out) {
    return guarded([&] {
        need(p, "potential");
        need(out, "out");
        *out = dup_string(p->spec.to_json());
    });
}

void thetamin_potential_free(thetamin_potential* p) { delete p; }

thetamin_status thetamin_energy(const thetamin_potential* p, double x, double y, double tol, double* out) {
    return guarded([&] {
        need(p, "potential");
        need(out, "out");
        *out = lattice_energy(p->spec, UpperHalfPoint(x, y), tol);
    });
}

thetamin_status thetamin_minimize_energy(const thetamin_potential* p, const thetamin_scan_options* o,
                                         thetamin_scan_report** out) {
    return guarded([&] {
        need(p, "potential");
        need(out, "out");
        *out = new thetamin_scan_report{minimize_energy(p->spec, to_options(o))};
    });
}

thetamin_status thetamin_duality(double alpha, double beta, double* gamma, double* beta_prime, double* factor) {
    return guarded([&] {
        need(gamma, "gamma");
        need(beta_prime, "beta_prime");
        need(factor, "factor");
        const Duality d = duality_transfer(alpha, beta);
        *gamma = d.gamma;
        *beta_prime = d.beta_prime;
        *factor = d.factor;
    });
}

} // extern "C"
