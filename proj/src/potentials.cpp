#include "thetamin/potentials.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include <json.hpp>

#include "lattice_sum.hpp"
#include "thetamin/errors.hpp"

namespace thetamin {

using std::numbers::pi;

namespace {

constexpr int kSimpsonDepthCap = 40;
constexpr int kPanelCap = 80;
constexpr double kRelTol = 1e-15;

struct KindName {
    PotentialKind kind;
    const char* name;
};
constexpr KindName kKinds[] = {
    {PotentialKind::ExpDiff, "exp-diff"},
    {PotentialKind::WeightedGaussQuadrature, "quadrature"},
    {PotentialKind::Yukawa, "yukawa"},
};

bool finite(double v) { return std::isfinite(v); }

// (θ(a) - 1) - β(θ(b) - 1)
double gaussian_pair(double a, double b, double beta, const UpperHalfPoint& z) {
    const double lo = theta2d_minus_one(a, z, kRelTol).value;
    return beta == 0.0 ? lo : lo - beta * theta2d_minus_one(b, z, kRelTol).value;
}

class Simpson {
public:
    explicit Simpson(const std::function<double(double)>& f) : f_(f) {}

    double integrate(double a, double b, double tol) {
        const double fa = eval(a), fb = eval(b), fm = eval(0.5 * (a + b));
        return step(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 0);
    }
    long evaluations() const { return evals_; }

private:
    double eval(double x) {
        ++evals_;
        return f_(x);
    }
    double step(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double flm = eval(0.5 * (a + m)), frm = eval(0.5 * (m + b));
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
        if (depth >= kSimpsonDepthCap)
            fail(ErrorKind::QuadratureFailure, "yukawa: adaptive quadrature exceeded its depth cap");
        return step(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               step(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    const std::function<double(double)>& f_;
    long evals_ = 0;
};

} // namespace

const char* to_string(PotentialKind k) {
    for (const auto& e : kKinds)
        if (e.kind == k) return e.name;
    return "unknown";
}

const char* to_string(Branch b) { return b == Branch::F ? "f" : "g"; }

void PotentialSpec::validate() const {
    require(finite(alpha) && finite(beta) && finite(gamma), "potential: parameters must be finite");
    const bool f = branch == Branch::F;
    if (f)
        require(alpha >= 1.0, "potential: the f branch requires alpha >= 1");
    else
        require(gamma > 0.0 && gamma < 1.0, "potential: the g branch requires 0 < gamma < 1");
    switch (kind) {
    case PotentialKind::ExpDiff:
        require(nodes.empty(), "potential: exp-diff takes no quadrature nodes");
        break;
    case PotentialKind::WeightedGaussQuadrature:
        require(!nodes.empty(), "potential: quadrature needs at least one node");
        for (const auto& n : nodes) {
            require(finite(n.x) && finite(n.weight), "potential: nodes must be finite");
            require(n.weight >= 0.0, "potential: quadrature weights must be nonnegative");
            if (f)
                require(n.x >= 1.0, "potential: f-branch nodes must satisfy x >= 1");
            else
                require(n.x > 0.0 && n.x <= 1.0, "potential: g-branch nodes must satisfy 0 < x <= 1");
        }
        break;
    case PotentialKind::Yukawa:
        require(f, "potential: yukawa has only the f branch");
        require(nodes.empty(), "potential: yukawa takes no quadrature nodes");
        break;
    }
}

PotentialSpec PotentialSpec::from_json(const std::string& text) {
    using nlohmann::json;
    PotentialSpec s;
    try {
        const json j = json::parse(text);
        require(j.is_object(), "potential: spec must be a JSON object");
        const std::string kind = j.at("kind").get<std::string>();
        bool known = false;
        for (const auto& e : kKinds)
            if (kind == e.name) s.kind = e.kind, known = true;
        require(known, "potential: unknown kind '" + kind + "'");
        const std::string branch = j.value("branch", std::string("f"));
        require(branch == "f" || branch == "g", "potential: branch must be 'f' or 'g'");
        s.branch = branch == "f" ? Branch::F : Branch::G;
        s.alpha = j.value("alpha", s.alpha);
        s.beta = j.value("beta", s.beta);
        s.gamma = j.value("gamma", s.gamma);
        if (j.contains("nodes")) {
            for (const auto& n : j.at("nodes")) {
                if (n.is_array()) {
                    require(n.size() == 2, "potential: node pairs must be [x, weight]");
                    s.nodes.push_back({n[0].get<double>(), n[1].get<double>()});
                } else {
                    s.nodes.push_back({n.at("x").get<double>(), n.at("weight").get<double>()});
                }
            }
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("potential: malformed spec: ") + e.what());
    }
    s.validate();
    return s;
}

std::string PotentialSpec::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["branch"] = to_string(branch);
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["gamma"] = gamma;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : nodes) j["nodes"].push_back({{"x", n.x}, {"weight", n.weight}});
    return j.dump();
}

Certified yukawa_direct_energy(double alpha, double beta, const UpperHalfPoint& z0, double tol) {
    require(finite(alpha) && alpha > 0.0 && finite(beta), "yukawa: invalid alpha or beta");
    require(finite(tol) && tol > 0.0, "yukawa: tol must be positive");
    const UpperHalfPoint z = reduce(z0).point;
    const double a = pi * alpha;
    auto term = [&](int, int, double q) { return std::exp(-a * q) / q - beta * std::exp(-2.0 * a * q) / (2.0 * q); };
    // on the reduced lattice every q ≥ 1/y
    const double coef = (1.0 + std::fabs(beta) / 2.0) * z.y;
    return detail::shell_sum(z, term, {{coef, 0, a}}, tol, kDefaultMaxRadius, true, "yukawa_direct_energy");
}

YukawaIntegral yukawa_integral_energy(double alpha, double beta, const UpperHalfPoint& z0, double tol) {
    require(finite(alpha) && alpha > 0.0 && finite(beta), "yukawa: invalid alpha or beta");
    require(finite(tol) && tol > 0.0, "yukawa: tol must be positive");
    const UpperHalfPoint z = reduce(z0).point;
    const double scale = pi * alpha; // energy = πα · integral
    const std::function<double(double)> g = [&](double x) {
        return gaussian_pair(alpha * x, 2.0 * alpha * x, beta, z);
    };
    // ∫_X^∞ in energy units ≤ (1 + |β|/2)(θ(αX) - 1)·y, since |P|² ≥ 1/y
    auto tail = [&](double X) {
        return (1.0 + std::fabs(beta) / 2.0) * theta2d_minus_one(alpha * X, z, kRelTol).value * z.y;
    };
    Simpson simpson(g);
    double sum = 0.0, lo = 1.0, t = tail(lo);
    for (int panel = 0; t > 0.5 * tol; ++panel) {
        if (panel >= kPanelCap) fail(ErrorKind::QuadratureFailure, "yukawa: upper limit did not converge");
        const double hi = 2.0 * lo;
        sum += simpson.integrate(lo, hi, std::ldexp(0.5 * tol, -(panel + 1)) / scale);
        lo = hi;
        t = tail(lo);
    }
    return {scale * sum, t, lo, simpson.evaluations()};
}

double lattice_energy(const PotentialSpec& spec, const UpperHalfPoint& z, double tol) {
    spec.validate();
    require(finite(tol) && tol > 0.0, "lattice_energy: tol must be positive");
    const bool f = spec.branch == Branch::F;
    const double width = f ? spec.alpha : spec.gamma;
    const double partner = f ? 2.0 : 0.5;
    switch (spec.kind) {
    case PotentialKind::ExpDiff: return gaussian_pair(width, partner * width, spec.beta, z);
    case PotentialKind::WeightedGaussQuadrature: {
        double s = 0.0;
        for (const auto& n : spec.nodes)
            if (n.weight != 0.0) s += n.weight * gaussian_pair(width * n.x, partner * width * n.x, spec.beta, z);
        return s;
    }
    case PotentialKind::Yukawa: return yukawa_integral_energy(spec.alpha, spec.beta, z, tol).value;
    }
    return 0.0;
}

Duality duality_transfer(double alpha, double beta) {
    require(finite(alpha) && alpha > 0.0 && finite(beta), "duality: invalid alpha or beta");
    const double gamma = 1.0 / alpha;
    return {gamma, beta / 2.0, gamma};
}

ScanReport minimize_energy(const PotentialSpec& spec, const ScanOptions& options) {
    spec.validate();
    const bool f = spec.branch == Branch::F;
    const double yukawa_tol = 1e-10;
    const Objective objective = [&](const UpperHalfPoint& z) { return lattice_energy(spec, z, yukawa_tol); };
    ScanReport r = scan_objective(objective, options);

    // the standard functional this energy is equivalent to, for the report
    // and the divergence probe heights
    double width = f ? spec.alpha : 1.0 / spec.gamma;
    if (spec.kind == PotentialKind::WeightedGaussQuadrature) {
        double lo = spec.nodes.front().x, hi = lo;
        for (const auto& n : spec.nodes) lo = std::min(lo, n.x), hi = std::max(hi, n.x);
        width = f ? spec.alpha * hi : 1.0 / (spec.gamma * lo);
    }
    r.spec = FunctionalSpec{width, f ? spec.beta : 2.0 * spec.beta, 2.0, 1};
    const double power = spec.kind == PotentialKind::Yukawa ? 1.0 : 0.5;
    r.divergence = fit_divergence(
        divergence_probes(r.spec), [&](double y) { return lattice_energy(spec, UpperHalfPoint(0.5, y), 1e-9); },
        power, 1e-9);
    r.divergence_detected = r.divergence.diverges;
    return r;
}

} // namespace thetamin
