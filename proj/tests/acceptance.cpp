// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// quantities underneath. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "thetamin/bounds_ledger.hpp"
#include "thetamin/minimizer.hpp"
#include "thetamin/potentials.hpp"
#include "thetamin/theta_kernel.hpp"

using namespace thetamin;

namespace {

const double kH = std::sqrt(3.0) / 2.0;
const double kSqrt2 = std::sqrt(2.0);

struct Criterion {
    int id;
    std::string title;
    std::vector<std::pair<bool, std::string>> checks;

    void add(bool ok, const std::string& line) { checks.emplace_back(ok, line); }
    bool passed() const {
        for (const auto& c : checks)
            if (!c.first) return false;
        return !checks.empty();
    }
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

UpperHalfPoint domain_point(std::mt19937_64& rng, double ymax) {
    std::uniform_real_distribution<double> ux(0.0, 0.5), uy(kH, ymax);
    for (;;) {
        const UpperHalfPoint z(ux(rng), uy(rng));
        if (z.abs2() > 1.0) return z;
    }
}

UpperHalfPoint interior_point(std::mt19937_64& rng, double ymax) {
    for (;;) {
        const UpperHalfPoint z = domain_point(rng, ymax);
        if (z.x > 0.01 && z.x < 0.49 && z.abs2() > 1.02) return z;
    }
}

GroupElement random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), gen(0, 3);
    GroupElement g;
    for (int i = 0, n = len(rng); i < n; ++i) {
        switch (gen(rng)) {
        case 0: g = compose(GroupElement::inversion(), g); break;
        case 1: g = compose(GroupElement::translation(1), g); break;
        case 2: g = compose(GroupElement::translation(-1), g); break;
        default: g = compose(GroupElement::reflection(), g); break;
        }
    }
    return g;
}

double hex_distance(const UpperHalfPoint& z) {
    const UpperHalfPoint p = reduce(z).point;
    return std::hypot(p.x - 0.5, p.y - kH);
}

void near(Criterion& c, const std::string& name, double value, double target, double tol) {
    const double err = std::fabs(value - target);
    c.add(err <= tol, fmt("%s = %.10g (target %.10g, |diff| %.3g, tol %.0e)", name.c_str(), value, target, err, tol));
}

void max_error(Criterion& c, const std::string& name, double worst, double tol, int samples) {
    c.add(worst <= tol, fmt("%s: max error %.3g over %d samples (tol %.0e)", name.c_str(), worst, samples, tol));
}

Criterion constants() {
    Criterion c{1, "constant reproduction", {}};
    near(c, "beta0", beta0_constant().value, 3.801819, 1e-5);
    near(c, "y_eps", y_epsilon_root(), 1.130998, 1e-5);
    near(c, "sup eps_a", epsilon_a_supremum(1e-3).value, 0.1264717, 1e-6);
    near(c, "sup eps_b", epsilon_b_supremum(1e-3).value, 0.0054169, 1e-6);
    const Extremum p1 = p_supremum(1.0, 4.0, 30.0), p2 = p_supremum(2.0, 4.0, 30.0);
    near(c, fmt("sup y*P(y;alpha) on alpha<=4, y/alpha<=30 (at alpha %.3g, y %.4g)", p1.alpha, p1.y), p1.value,
         4.232412, 1e-4);
    near(c, fmt("sup y*P(y;2alpha) on alpha<=4, y/alpha<=30 (at alpha %.3g, y %.4g)", p2.alpha, p2.y), p2.value,
         10.268696, 1e-4);
    return c;
}

Criterion representations() {
    Criterion c{2, "cross-representation agreement", {}};
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ua(0.2, 10.0), ux(-1.0, 1.0), uy(0.5, 3.0);
    // each side is rounded independently; allow a few ulps of the value
    const double kRounding = 4.0 * std::numeric_limits<double>::epsilon();
    double worst = 0.0, worst_tail_excess = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double a = ua(rng);
        const UpperHalfPoint z(ux(rng), uy(rng));
        const Certified d = theta2d_direct(a, z, 1e-13), e = theta2d_expansion(a, z, 1e-13);
        const double diff = std::fabs(d.value - e.value);
        worst = std::max(worst, diff);
        worst_tail_excess = std::max(worst_tail_excess, diff - (d.tail_bound + e.tail_bound) - kRounding * d.value);
    }
    max_error(c, "theta2d direct vs expansion", worst, 1e-12, 500);
    c.add(worst_tail_excess <= 0.0,
          fmt("direct vs expansion within combined tails plus rounding (max excess %.3g)", worst_tail_excess));

    std::uniform_real_distribution<double> uX(0.2, 3.0), uY(0.0, 1.0);
    double sp = 0.0, sx = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double X = uX(rng), Y = uY(rng);
        const double s = theta1d_series(X, Y).value, p = theta1d_poisson(X, Y).value;
        sp = std::max(sp, std::fabs(s - p));
        sx = std::max(sx, std::fabs(s - theta1d_product(X, Y, 60)));
    }
    max_error(c, "theta1d series vs Poisson, X in [0.2, 3]", sp, 1e-10, 500);
    max_error(c, "theta1d series vs product (60 factors), X in [0.2, 3]", sx, 1e-10, 500);
    return c;
}

Criterion symmetry() {
    Criterion c{3, "symmetry and duality", {}};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ua(0.5, 4.0), ub(-1.0, 2.0);
    double wt = 0.0, ww = 0.0, wd = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng), b = ub(rng);
        const UpperHalfPoint z = domain_point(rng, 3.0);
        const UpperHalfPoint gz = apply(random_word(rng, 10), z);
        wt = std::max(wt, std::fabs(theta2d(a, gz).value - theta2d(a, z).value));
        ww = std::max(ww, std::fabs(w_beta({a, b}, gz).value - w_beta({a, b}, z).value));
        wd = std::max(wd, std::fabs(theta2d(1.0 / a, gz).value - a * theta2d(a, gz).value));
    }
    max_error(c, "theta under random group words", wt, 1e-10, 100);
    max_error(c, "W under random group words", ww, 1e-10, 100);
    max_error(c, "theta(1/a) = a theta(a)", wd, 1e-10, 100);
    return c;
}

Criterion derivatives() {
    Criterion c{4, "derivative correctness", {}};
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(1.0, 3.0), ub(-1.0, 2.0);
    double ex = 0.0, ey = 0.0, er = 0.0;
    for (int i = 0; i < 50; ++i) {
        const FunctionalSpec s{ua(rng), ub(rng)};
        const UpperHalfPoint z = interior_point(rng, 4.0);
        auto W = [&](double x, double y) { return w_beta(s, UpperHalfPoint(x, y), 1e-16).value; };
        const double h = 1e-4;
        const double fdx = (W(z.x + h, z.y) - W(z.x - h, z.y)) / (2 * h);
        const double fdy = (W(z.x, z.y + h) - W(z.x, z.y - h)) / (2 * h);
        ex = std::max(ex, std::fabs(w_dx(s, z).value - fdx));
        ey = std::max(ey, std::fabs(w_dy(s, z).value - fdy));

        const double y = z.y + 0.05, h2 = 1e-3;
        const double wm = W(0.5, y - h2), w0 = W(0.5, y), wp = W(0.5, y + h2);
        const double fdr = (wp - 2 * w0 + wm) / (h2 * h2) + (2 / y) * (wp - wm) / (2 * h2);
        er = std::max(er, std::fabs(radial_operator(s, UpperHalfPoint(0.5, y)).value - fdr));
    }
    max_error(c, "dW/dx vs central difference (h 1e-4)", ex, 1e-6, 50);
    max_error(c, "dW/dy vs central difference (h 1e-4)", ey, 1e-6, 50);
    max_error(c, "radial operator vs second difference (h 1e-3)", er, 1e-4, 50);
    return c;
}

Criterion hexagonal_and_nonexistence() {
    Criterion c{5, "hexagonal minimizer and nonexistence", {}};
    const ScanOptions grid; // 128 x 128, y_max 12
    double worst_dist = 0.0, worst_gap = 0.0;
    int hexagonal = 0, cells = 0;
    bool no_false_divergence = true;
    for (double a : {1.0, 1.5, 2.0, 4.0})
        for (double b : {-1.0, 0.0, 1.0, kSqrt2}) {
            const ScanReport r = scan_domain({a, b}, grid);
            const double d = hex_distance(r.refined_point);
            worst_dist = std::max(worst_dist, d);
            worst_gap = std::min(worst_gap, r.hexagonal_gap);
            hexagonal += d <= 1e-6 && r.hexagonal_gap >= -1e-10;
            no_false_divergence = no_false_divergence && !r.divergence_detected;
            ++cells;
        }
    c.add(hexagonal == cells, fmt("%d/%d cells hexagonal within 1e-6 (max distance %.3g, min gap %.3g)", hexagonal,
                                  cells, worst_dist, worst_gap));
    c.add(no_false_divergence, "no divergence reported for beta <= sqrt2");

    int diverging = 0, total = 0;
    double worst_rel = 0.0;
    for (double a : {1.0, 1.5, 2.0, 4.0})
        for (double b : {1.5, 2.0, 3.0}) {
            const DivergenceEvidence e = detect_nonexistence({a, b});
            const double predicted = std::sqrt(1.0 / (2.0 * a)) * (kSqrt2 - b);
            worst_rel = std::max(worst_rel, std::fabs(e.slope / predicted - 1.0));
            diverging += e.diverges;
            ++total;
        }
    c.add(diverging == total, fmt("%d/%d cells with beta > sqrt2 diverge", diverging, total));
    c.add(worst_rel <= 0.05, fmt("slope vs sqrt(1/2a)(sqrt2 - beta): max relative error %.3g (tol 5%%)", worst_rel));
    return c;
}

Criterion transition() {
    Criterion c{6, "transition sharpness", {}};
    const Transition t = beta_transition(1.0, 1, 1.0, 2.0, 1e-3);
    c.add(t.lo <= kSqrt2 && kSqrt2 <= t.hi && t.hi - t.lo <= 2e-3 && std::fabs(t.lo - kSqrt2) <= 1e-3 &&
              std::fabs(t.hi - kSqrt2) <= 1e-3,
          fmt("bracket [%.7f, %.7f] around sqrt2 = %.7f after %d probes", t.lo, t.hi, kSqrt2, t.probes));
    return c;
}

Criterion sweeps() {
    Criterion c{7, "bound sweeps", {}};
    for (Claim k : {Claim::RPositivity, Claim::XMonotonicity, Claim::WPositivity, Claim::QPositivity,
                    Claim::DoubleSumSandwich}) {
        const BoundReport r = verify_sweep(k, default_grid(k));
        c.add(r.claim_holds, fmt("%s: %ld samples, min %.4g at (alpha %.4g, %s %.4g)", r.name.c_str(), r.samples,
                                 r.min_value, r.argmin.alpha, r.second_axis.c_str(), r.argmin.y));
    }
    return c;
}

Criterion iteration() {
    Criterion c{8, "2^k family", {}};
    const ScanReport hex = iterate_2k(1.0, 2.0, 2);
    c.add(hex_distance(hex.refined_point) <= 1e-6 && !hex.divergence_detected,
          fmt("k=2, beta=2: refined point at distance %.3g from hexagonal, divergence %s",
              hex_distance(hex.refined_point), hex.divergence_detected ? "yes" : "no"));
    const ScanReport gone = iterate_2k(1.0, 2.5, 2);
    c.add(gone.divergence_detected, fmt("k=2, beta=2.5: divergence %s (slope %.4g)",
                                        gone.divergence_detected ? "yes" : "no", gone.divergence.slope));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ua(1.0, 3.0), ub(-1.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = ua(rng), b = ub(rng);
        const UpperHalfPoint z = domain_point(rng, 4.0);
        const double direct = w_beta({a, b, 2.0, 2}, z).value;
        worst = std::max(worst, std::fabs(telescoping_decomposition(a, b, 2, z).value - direct));
    }
    max_error(c, "telescoping identity, k=2", worst, 1e-10, 20);
    return c;
}

Criterion yukawa() {
    Criterion c{9, "Yukawa", {}};
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ua(1.0, 3.0), ub(-1.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double a = ua(rng), b = ub(rng);
        const UpperHalfPoint z = domain_point(rng, 4.0);
        worst = std::max(worst, std::fabs(yukawa_integral_energy(a, b, z, 1e-10).value -
                                          yukawa_direct_energy(a, b, z).value));
    }
    max_error(c, "integral vs direct lattice sum", worst, 1e-7, 10);
    PotentialSpec s;
    s.kind = PotentialKind::Yukawa;
    s.alpha = 1.0;
    s.beta = kSqrt2;
    const ScanReport r = minimize_energy(s);
    c.add(hex_distance(r.refined_point) <= 1e-6 && !r.divergence_detected,
          fmt("alpha=1, beta=sqrt2 scan: refined point at distance %.3g from hexagonal",
              hex_distance(r.refined_point)));
    return c;
}

} // namespace

int main() {
    const std::vector<std::function<Criterion()>> suite = {constants,    representations, symmetry,
                                                           derivatives,  hexagonal_and_nonexistence,    transition,
                                                           sweeps,       iteration,       yukawa};
    int failed = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Criterion c{int(i) + 1, "(aborted)", {}};
        try {
            c = suite[i]();
        } catch (const std::exception& e) {
            c.add(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %d %s (%.1f s)\n", c.passed() ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
        for (const auto& [ok, line] : c.checks) std::printf("    %s %s\n", ok ? "ok  " : "FAIL", line.c_str());
        std::fflush(stdout);
        failed += !c.passed();
    }
    std::printf("%d/%zu criteria passed\n", int(suite.size()) - failed, suite.size());
    return failed == 0 ? 0 : 1;
}
