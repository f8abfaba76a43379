#include "thetamin/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thetamin/errors.hpp"
#include "thetamin/parallel.hpp"

namespace thetamin {

namespace {

const double kHexY = std::sqrt(3.0) / 2.0;
constexpr int kPatternIterationCap = 1000000;

struct Box {
    double y_min, y_max;

    // Nearest admissible point: clamp x, lift onto the unit arc, clamp y.
    UpperHalfPoint project(double x, double y) const {
        x = std::clamp(x, 0.0, 0.5);
        y = std::max(y, std::sqrt(1.0 - x * x));
        y = std::clamp(y, y_min, y_max);
        return {x, y};
    }
    bool admissible(double x, double y) const { return x * x + y * y >= 1.0 - 1e-12 && y >= y_min; }
};

} // namespace

void ScanOptions::validate() const {
    require(nx >= 16 && ny >= 16, "scan: nx and ny must be at least 16");
    require(std::isfinite(y_max) && y_max >= 2.0, "scan: y_max must be at least 2");
    require(std::isfinite(tol) && tol > 0.0, "scan: tol must be positive");
    require(std::isfinite(step_min) && step_min > 0.0, "scan: step_min must be positive");
}

ScanReport scan_objective(const Objective& f, const ScanOptions& options) {
    options.validate();
    ScanReport r;
    r.grid = options;
    r.y_min = kScanYMinFactor * kHexY;
    const Box box{r.y_min, options.y_max};
    const double hx = 0.5 / (options.nx - 1);
    const double hy = (options.y_max - r.y_min) / (options.ny - 1);

    // rows in x, evaluated concurrently, reduced in index order
    struct Cell {
        double value = std::numeric_limits<double>::infinity();
        UpperHalfPoint at;
        long count = 0;
    };
    std::vector<Cell> rows(options.nx);
    parallel_for(options.nx, options.threads, [&](std::size_t i) {
        const double x = i + 1 == std::size_t(options.nx) ? 0.5 : hx * double(i);
        Cell best;
        for (int j = 0; j < options.ny; ++j) {
            const double y = j + 1 == options.ny ? options.y_max : r.y_min + hy * j;
            if (!box.admissible(x, y)) continue;
            const UpperHalfPoint z(x, y);
            const double v = f(z);
            if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, "scan: objective is not finite");
            ++best.count;
            if (v < best.value) best.value = v, best.at = z;
        }
        rows[i] = best;
    });
    r.best_value = std::numeric_limits<double>::infinity();
    for (const auto& c : rows) {
        r.grid_points += c.count;
        if (c.value < r.best_value) r.best_value = c.value, r.best_point = c.at;
    }
    require(r.grid_points > 0, "scan: grid contains no admissible point");

    UpperHalfPoint p = r.best_point;
    double fp = r.best_value;
    double sx = hx, sy = hy;
    int steps = 0;
    while (std::max(sx, sy) >= options.step_min) {
        if (++steps > kPatternIterationCap) fail(ErrorKind::IterationLimit, "scan: pattern search did not settle");
        bool moved = false;
        const double dirs[4][2] = {{sx, 0.0}, {-sx, 0.0}, {0.0, sy}, {0.0, -sy}};
        for (const auto& d : dirs) {
            const UpperHalfPoint c = box.project(p.x + d[0], p.y + d[1]);
            if (c.x == p.x && c.y == p.y) continue;
            const double fc = f(c);
            if (fc < fp) {
                p = c, fp = fc, moved = true;
                break;
            }
        }
        if (!moved) sx *= 0.5, sy *= 0.5;
    }
    r.refined_point = p;
    r.refined_value = fp;
    r.refine_steps = steps;
    r.hexagonal_value = f(hexagonal_point());
    r.hexagonal_gap = r.refined_value - r.hexagonal_value;
    return r;
}

ScanReport scan_domain(const FunctionalSpec& spec, const ScanOptions& options) {
    spec.validate();
    // minimize the origin-free energy, whose rounding level sits far below
    // W's near the flat hexagonal minimum; report W = energy + (1 - β)
    const double tol = options.tol;
    ScanReport r = scan_objective([&](const UpperHalfPoint& z) { return w_energy(spec, z, tol).value; }, options);
    const double shift = 1.0 - spec.beta;
    r.best_value += shift;
    r.refined_value += shift;
    r.hexagonal_value += shift;
    r.spec = spec;
    r.divergence = detect_nonexistence(spec);
    r.divergence_detected = r.divergence.diverges;
    return r;
}

std::vector<ProfilePoint> vertical_line_profile(const FunctionalSpec& spec, const std::vector<double>& ys,
                                                double tol) {
    spec.validate();
    require(!ys.empty(), "vertical_line_profile: empty y list");
    require(ys.front() >= kHexY - 1e-7, "vertical_line_profile: y must start at or above sqrt(3)/2");
    for (std::size_t i = 1; i < ys.size(); ++i)
        require(ys[i] > ys[i - 1], "vertical_line_profile: y list must be increasing");
    std::vector<ProfilePoint> out;
    out.reserve(ys.size());
    for (double y : ys) {
        require(std::isfinite(y), "vertical_line_profile: y must be finite");
        const UpperHalfPoint z(0.5, y);
        const Certified v = w_beta(spec, z, tol), d = w_dy(spec, z, tol);
        out.push_back({y, v.value, d.value, v.tail_bound, d.tail_bound});
    }
    return out;
}

double predicted_slope(const FunctionalSpec& spec) {
    spec.validate();
    return std::sqrt(1.0 / spec.alpha) * (1.0 - spec.beta / std::sqrt(std::pow(spec.ratio, spec.k)));
}

std::vector<double> divergence_probes(const FunctionalSpec& spec) {
    spec.validate();
    const double s = std::max({1.0, spec.high_alpha() / 2.0, 1.0 / spec.alpha});
    return {10.0 * s, 20.0 * s, 40.0 * s, 80.0 * s};
}

DivergenceEvidence fit_divergence(const std::vector<double>& ys, const std::function<double(double)>& value_at,
                                  double power, double tol) {
    require(ys.size() >= 2, "fit_divergence: need at least two probes");
    require(power > 0.0, "fit_divergence: power must be positive");
    DivergenceEvidence e;
    e.y = ys;
    e.power = power;
    for (double y : ys) e.value.push_back(value_at(y));
    const std::size_t n = ys.size();
    e.slope = (e.value[n - 1] - e.value[n - 2]) / (std::pow(ys[n - 1], power) - std::pow(ys[n - 2], power));
    e.strictly_decreasing = true;
    for (std::size_t i = 1; i < n; ++i) e.strictly_decreasing = e.strictly_decreasing && e.value[i] < e.value[i - 1];
    e.diverges = e.slope < -tol && e.strictly_decreasing && e.value.back() < e.value.front() - tol;
    return e;
}

DivergenceEvidence detect_nonexistence(const FunctionalSpec& spec, double tol) {
    require(std::isfinite(tol) && tol > 0.0, "detect_nonexistence: tol must be positive");
    return fit_divergence(
        divergence_probes(spec),
        [&](double y) { return w_beta(spec, UpperHalfPoint(0.5, y), 1e-13).value; }, 0.5, tol);
}

Certified telescoping_decomposition(double alpha, double beta, int k, const UpperHalfPoint& z, double tol) {
    require(std::isfinite(alpha) && alpha > 0.0 && std::isfinite(beta), "telescoping: invalid alpha or beta");
    require(k >= 0, "telescoping: k must be non-negative");
    const double r2 = std::sqrt(2.0);
    // theta at 2^n α for n = 0..k
    std::vector<Certified> th;
    for (int n = 0; n <= k; ++n) th.push_back(theta2d(std::ldexp(alpha, n), z, tol));
    const double lead = std::pow(r2, k) - beta;
    double value = lead * th[k].value, err = std::fabs(lead) * th[k].tail_bound;
    for (int n = 0; n < k; ++n) {
        const double w = std::pow(r2, n);
        value += w * (th[n].value - r2 * th[n + 1].value);
        err += w * (th[n].tail_bound + r2 * th[n + 1].tail_bound);
    }
    return {value, err, k + 1};
}

ScanReport iterate_2k(double alpha, double beta, int k, const ScanOptions& options) {
    require(std::isfinite(alpha) && alpha >= 1.0, "iterate_2k: alpha must be at least 1");
    require(k >= 0, "iterate_2k: k must be non-negative");
    const FunctionalSpec spec{alpha, beta, 2.0, k};
    ScanReport r = scan_domain(spec, options);
    double worst = 0.0;
    for (const UpperHalfPoint& z : {hexagonal_point(), r.best_point, r.refined_point}) {
        const double direct = w_beta(spec, z, 1e-14).value;
        const double tele = telescoping_decomposition(alpha, beta, k, z, 1e-14).value;
        const double scale = std::max(1.0, std::fabs(direct));
        worst = std::max(worst, std::fabs(direct - tele) / scale);
    }
    r.telescoping_residual = worst;
    if (worst > 1e-10) fail(ErrorKind::IdentityViolated, "iterate_2k: telescoping form disagrees with W");
    return r;
}

const char* to_string(MinimizerClass c) { return c == MinimizerClass::Hexagonal ? "hexagonal" : "other"; }

bool is_hexagonal(const UpperHalfPoint& z, double tol) {
    const UpperHalfPoint p = reduce(z).point;
    const UpperHalfPoint h = hexagonal_point();
    return std::hypot(p.x - h.x, p.y - h.y) <= tol;
}

std::vector<PhaseCell> phase_report(const std::vector<double>& alphas, const std::vector<double>& betas, int k,
                                    const ScanOptions& options) {
    require(!alphas.empty() && !betas.empty(), "phase_report: alpha and beta lists must be nonempty");
    require(k >= 0, "phase_report: k must be non-negative");
    std::vector<PhaseCell> cells;
    for (double a : alphas)
        for (double b : betas) {
            const FunctionalSpec spec{a, b, 2.0, k};
            ScanReport r = scan_domain(spec, options);
            const bool exists = !r.divergence_detected;
            const auto cls = exists && is_hexagonal(r.refined_point) ? MinimizerClass::Hexagonal : MinimizerClass::Other;
            cells.push_back({a, b, k, exists, cls, std::move(r)});
        }
    return cells;
}

Transition beta_transition(double alpha, int k, double beta_lo, double beta_hi, double resolution, double tol) {
    require(beta_lo < beta_hi && resolution > 0.0, "beta_transition: invalid bracket");
    auto diverges = [&](double b) { return detect_nonexistence({alpha, b, 2.0, k}, tol).diverges; };
    Transition t{beta_lo, beta_hi, 2};
    if (diverges(beta_lo) || !diverges(beta_hi))
        fail(ErrorKind::RootNotBracketed, "beta_transition: bracket does not straddle the transition");
    while (t.hi - t.lo > resolution) {
        const double mid = 0.5 * (t.lo + t.hi);
        ++t.probes;
        (diverges(mid) ? t.hi : t.lo) = mid;
    }
    return t;
}

} // namespace thetamin
