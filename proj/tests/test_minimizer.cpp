#include "doctest.h"

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "thetamin/errors.hpp"
#include "thetamin/minimizer.hpp"

using namespace thetamin;

namespace {

const double kH = std::sqrt(3.0) / 2.0;
const double kSqrt2 = std::sqrt(2.0);

double hex_distance(const UpperHalfPoint& z) {
    const UpperHalfPoint p = reduce(z).point;
    return std::hypot(p.x - 0.5, p.y - kH);
}

ScanOptions small_grid() {
    ScanOptions o;
    o.nx = o.ny = 32;
    return o;
}

// W(1/2 + iy)/√y from the row-0 sum alone; other rows are below e^{-παy}.
double slope_oracle(double alpha, double beta, double y) {
    auto row0 = [y](oracle::ld a) {
        oracle::ld s = 0;
        for (int m = -2000; m <= 2000; ++m) s += std::exp(-oracle::kPi * a * m * m / y);
        return s;
    };
    return double((row0(alpha) - beta * row0(2 * alpha)) / std::sqrt(oracle::ld(y)));
}

} // namespace

TEST_CASE("scan finds the hexagonal point") {
    for (double a : {1.0, 2.0})
        for (double b : {-1.0, 0.0, kSqrt2}) {
            const auto r = scan_domain({a, b}, small_grid());
            CHECK(hex_distance(r.refined_point) < 1e-6);
            CHECK(r.hexagonal_gap >= -1e-10);
            CHECK(r.hexagonal_gap <= 1e-10);
            CHECK(r.refined_value <= r.best_value);
            CHECK_FALSE(r.divergence_detected);
            CHECK(r.grid_points > 0);
            CHECK(membership(r.refined_point).region != Region::Outside);
        }
}

TEST_CASE("scan invariants across options") {
    ScanOptions o = small_grid();
    o.threads = 1;
    const auto r1 = scan_domain({1.0, 1.0}, o);
    o.threads = 4;
    const auto r4 = scan_domain({1.0, 1.0}, o);
    CHECK(r1.best_value == r4.best_value);
    CHECK(r1.refined_point.x == r4.refined_point.x);
    CHECK(r1.refined_point.y == r4.refined_point.y);
    // W at the refined point agrees with the reported value
    CHECK(w_beta({1.0, 1.0}, r1.refined_point).value == doctest::Approx(r1.refined_value).epsilon(1e-14));

    ScanOptions bad = small_grid();
    bad.nx = 8;
    CHECK_THROWS_AS(scan_domain({1.0, 0.0}, bad), Error);
    bad = small_grid();
    bad.y_max = 1.5;
    CHECK_THROWS_AS(scan_domain({1.0, 0.0}, bad), Error);
}

TEST_CASE("scan minimum is invariant under group images of the grid") {
    std::mt19937_64 rng(3);
    const FunctionalSpec spec{1.5, 0.5};
    const auto base = scan_domain(spec, small_grid());
    for (int i = 0; i < 5; ++i) {
        GroupElement g;
        for (int j = 0; j < 6; ++j)
            g = compose(rng() % 2 ? GroupElement::inversion() : GroupElement::translation(int(rng() % 5) - 2), g);
        if (rng() % 2) g = compose(GroupElement::reflection(), g);
        const auto r = scan_objective(
            [&](const UpperHalfPoint& z) { return w_beta(spec, apply(g, z), 1e-15).value; }, small_grid());
        CHECK(r.refined_value == doctest::Approx(base.refined_value).epsilon(1e-13));
    }
}

TEST_CASE("scan with a generic objective") {
    // minimum of a smooth bowl inside the domain
    const auto r = scan_objective(
        [](const UpperHalfPoint& z) { return (z.x - 0.2) * (z.x - 0.2) + (z.y - 3.0) * (z.y - 3.0); }, small_grid());
    CHECK(r.refined_point.x == doctest::Approx(0.2).epsilon(1e-8));
    CHECK(r.refined_point.y == doctest::Approx(3.0).epsilon(1e-8));
    // minimum outside the closure lands on its boundary arc
    const auto arc = scan_objective([](const UpperHalfPoint& z) { return z.y - 0.1 * z.x; }, small_grid());
    CHECK(arc.refined_point.x == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(arc.refined_point.y == doctest::Approx(kH).epsilon(1e-9));
    CHECK_THROWS_AS(scan_objective([](const UpperHalfPoint&) { return NAN; }, small_grid()), Error);
}

TEST_CASE("vertical line profile") {
    std::vector<double> ys;
    for (double y = 0.88; y <= 50.0; y *= 1.15) ys.push_back(y);
    for (const auto& p : vertical_line_profile({1.0, kSqrt2}, ys)) CHECK(p.dvalue > 0.0);
    const auto at_hex = vertical_line_profile({1.0, kSqrt2}, {kH});
    CHECK(std::abs(at_hex[0].dvalue) < 1e-8);
    const auto down = vertical_line_profile({1.0, 1.5}, {5.0, 10.0, 20.0, 40.0});
    for (std::size_t i = 1; i < down.size(); ++i) CHECK(down[i].value < down[i - 1].value);
    CHECK_THROWS_AS(vertical_line_profile({1.0, 0.0}, {0.5}), Error);
    CHECK_THROWS_AS(vertical_line_profile({1.0, 0.0}, {2.0, 1.0}), Error);
}

TEST_CASE("nonexistence detection") {
    const auto d = detect_nonexistence({1.0, 2.0});
    CHECK(d.diverges);
    CHECK(d.strictly_decreasing);
    CHECK(d.slope == doctest::Approx(-0.41421356237309515).epsilon(1e-6));
    CHECK(d.slope == doctest::Approx(slope_oracle(1.0, 2.0, 1000.0)).epsilon(1e-6));
    CHECK_FALSE(detect_nonexistence({1.0, kSqrt2}).diverges);
    CHECK_FALSE(detect_nonexistence({1.0, 0.0}).diverges);
    for (double a : {1.0, 1.5, 2.0, 4.0})
        for (double b : {1.5, 2.0, 3.0}) {
            const FunctionalSpec spec{a, b};
            const auto e = detect_nonexistence(spec);
            CHECK(e.diverges);
            CHECK(std::abs(e.slope / predicted_slope(spec) - 1.0) < 0.05);
        }
    // probes scale with the Gaussian widths
    CHECK(divergence_probes({4.0, 1.0})[0] == doctest::Approx(40.0));
    CHECK(divergence_probes({0.25, 1.0})[0] == doctest::Approx(40.0));
}

TEST_CASE("beta transition") {
    const auto t = beta_transition(1.0, 1, 1.0, 2.0);
    CHECK(t.hi - t.lo <= 1e-3);
    CHECK(t.lo <= kSqrt2);
    CHECK(t.hi >= kSqrt2);
    CHECK_THROWS_AS(beta_transition(1.0, 1, 1.5, 2.0), Error);
    // the k = 2 threshold is 2
    const auto t2 = beta_transition(1.0, 2, 1.0, 3.0);
    CHECK(t2.lo <= 2.0);
    CHECK(t2.hi >= 2.0);
}

TEST_CASE("telescoping identity and the 2^k family") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto [x, y] = oracle::domain_point(rng, 4.0);
        const UpperHalfPoint z(x, y);
        for (int k : {0, 1, 2, 3}) {
            const double direct = w_beta({1.2, 1.7, 2.0, k}, z).value;
            CHECK(telescoping_decomposition(1.2, 1.7, k, z).value == doctest::Approx(direct).epsilon(1e-12));
        }
    }
    const auto hex = iterate_2k(1.0, 2.0, 2, small_grid());
    CHECK(hex_distance(hex.refined_point) < 1e-6);
    CHECK_FALSE(hex.divergence_detected);
    CHECK(hex.telescoping_residual < 1e-12);
    CHECK(iterate_2k(1.0, 2.5, 2, small_grid()).divergence_detected);
    // k = 0: (1 - β)θ
    CHECK(hex_distance(iterate_2k(1.0, 0.5, 0, small_grid()).refined_point) < 1e-6);
    CHECK(iterate_2k(1.0, 1.5, 0, small_grid()).divergence_detected);
    CHECK_THROWS_AS(iterate_2k(0.5, 1.0, 1, small_grid()), Error);
}

TEST_CASE("phase report") {
    ScanOptions o = small_grid();
    const auto cells = phase_report({1.0, 2.0}, {0.0, 1.0, 1.5}, 1, o);
    REQUIRE(cells.size() == 6);
    int hex = 0, gone = 0;
    for (const auto& c : cells) {
        if (c.cls == MinimizerClass::Hexagonal) ++hex;
        if (!c.exists) {
            ++gone;
            CHECK(c.cls == MinimizerClass::Other);
            CHECK(c.beta == 1.5);
        }
    }
    CHECK(hex == 4);
    CHECK(gone == 2);
    CHECK(cells[1].alpha == 1.0);
    CHECK(cells[1].beta == 1.0);
    CHECK(std::string(to_string(MinimizerClass::Hexagonal)) == "hexagonal");
    CHECK(is_hexagonal(UpperHalfPoint(-0.5, kH)));
    CHECK_FALSE(is_hexagonal(UpperHalfPoint(0.0, 1.0)));
}
