#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "thetamin/errors.hpp"
#include "thetamin/lattice_theta.hpp"

using namespace thetamin;
using std::numbers::pi;

namespace ref {
constexpr double theta3_1 = 1.0864348112133080146;
constexpr double theta2d_1_i = 1.180340599016096226;
constexpr double theta2d_1_hex = 1.1595952669639283658;
constexpr double w_1_sqrt2_hex = -0.26061308914010345015;
} // namespace ref

namespace {

const double kH = std::sqrt(3.0) / 2.0;
const double kSqrt2 = std::sqrt(2.0);

GroupElement random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), gen(0, 3);
    GroupElement g;
    for (int i = 0, n = len(rng); i < n; ++i) {
        const int c = gen(rng);
        const GroupElement s = c == 0   ? GroupElement::inversion()
                               : c == 1 ? GroupElement::translation(1)
                               : c == 2 ? GroupElement::translation(-1)
                                        : GroupElement::reflection();
        g = compose(s, g);
    }
    return g;
}

UpperHalfPoint interior_point(std::mt19937_64& rng, double ymax) {
    for (;;) {
        auto [x, y] = oracle::domain_point(rng, ymax);
        if (x > 1e-3 && x < 0.5 - 1e-3 && x * x + y * y > 1.0 + 1e-3) return {x, y};
    }
}

} // namespace

TEST_CASE("theta2d reference values") {
    const UpperHalfPoint sq(0.0, 1.0), hex(0.5, kH);
    const auto d = theta2d_direct(1.0, sq);
    CHECK(d.value == doctest::Approx(ref::theta2d_1_i).epsilon(1e-15));
    CHECK(d.value == doctest::Approx(ref::theta3_1 * ref::theta3_1).epsilon(1e-15));
    CHECK(d.tail_bound <= kDefaultTol);
    CHECK(theta2d_expansion(1.0, sq).value == doctest::Approx(ref::theta2d_1_i).epsilon(1e-15));
    CHECK(theta2d_direct(1.0, hex).value == doctest::Approx(ref::theta2d_1_hex).epsilon(1e-15));
    CHECK(std::abs(theta2d_direct(1.0, hex).value - theta2d_expansion(1.0, hex).value) <= 1e-12);
    CHECK(w_beta({1.0, kSqrt2}, hex).value == doctest::Approx(ref::w_1_sqrt2_hex).epsilon(1e-14));
    CHECK(w_beta({1.3, 0.0}, UpperHalfPoint(0.2, 1.4)).value ==
          theta2d(1.3, UpperHalfPoint(0.2, 1.4)).value);
}

TEST_CASE("direct and expansion paths agree on random (alpha, z)") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ua(0.2, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double a = ua(rng);
        auto [x, y] = oracle::domain_point(rng, 6.0);
        const UpperHalfPoint z(x, y);
        const auto d = theta2d_direct(a, z, 1e-13), e = theta2d_expansion(a, z, 1e-13);
        const double round = 32 * 2.2e-16 * std::abs(d.value);
        CHECK(std::abs(d.value - e.value) <= d.tail_bound + e.tail_bound + round);
        CHECK(std::abs(d.value - e.value) <= 1e-12);
    }
    // brute-force oracle at a few points
    for (int i = 0; i < 10; ++i) {
        const double a = ua(rng);
        auto [x, y] = oracle::domain_point(rng, 3.0);
        CHECK(theta2d({a}, UpperHalfPoint(x, y)).value ==
              doctest::Approx(double(oracle::theta2d(a, x, y))).epsilon(1e-13));
    }
}

TEST_CASE("cutoff cap") {
    CHECK_THROWS_AS(theta2d_direct(1e-4, UpperHalfPoint(0.0, 1.0), 1e-13, 50), Error);
}

TEST_CASE("group invariance and duality") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ua(0.5, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        auto [x, y] = oracle::domain_point(rng, 3.0);
        const UpperHalfPoint z(x, y);
        const auto gz = apply(random_word(rng, 6), z);
        CHECK(std::abs(theta2d(a, gz).value - theta2d(a, z).value) <= 1e-10);
        const FunctionalSpec s{a, 1.3};
        CHECK(std::abs(w_beta(s, gz).value - w_beta(s, z).value) <= 1e-10);
        CHECK(std::abs(theta2d(1.0 / a, z).value - a * theta2d(a, z).value) <= 1e-10 * std::max(1.0, a));
    }
}

TEST_CASE("x-derivative") {
    CHECK(theta2d_dx(1.0, UpperHalfPoint(0.0, 2.0)).value == doctest::Approx(0.0));
    CHECK(std::abs(theta2d_dx(1.0, UpperHalfPoint(0.5, 1.3)).value) <= 1e-14);
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ua(0.5, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double a = ua(rng), h = 1e-4;
        const UpperHalfPoint z = interior_point(rng, 3.0);
        const double fd = (theta2d_expansion(a, {z.x + h, z.y}).value - theta2d_expansion(a, {z.x - h, z.y}).value) / (2 * h);
        CHECK(std::abs(theta2d_dx(a, z).value - fd) <= 1e-6);
    }
}

TEST_CASE("y-derivative") {
    for (double a : {1.0, 2.0, 3.7})
        CHECK(std::abs(theta2d_dy(a, UpperHalfPoint(0.5, kH)).value) <= 1e-12);
    CHECK(std::abs(theta2d_dy(1.0, UpperHalfPoint(0.0, 1.0)).value) <= 1e-13);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.5, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double a = ua(rng), h = 1e-4;
        const UpperHalfPoint z = interior_point(rng, 3.0);
        const double fd = (theta2d_direct(a, {z.x, z.y + h}).value - theta2d_direct(a, {z.x, z.y - h}).value) / (2 * h);
        CHECK(std::abs(theta2d_dy(a, z).value - fd) <= 1e-6);
    }
}

TEST_CASE("radial operator") {
    for (double a : {1.0, 2.0})
        for (double y : {0.9, 1.2, 2.0}) {
            const FunctionalSpec s{a, kSqrt2};
            const double h = 1e-3;
            auto W = [&](double yy) { return w_beta(s, UpperHalfPoint(0.5, yy)).value; };
            const double d2 = (W(y + h) - 2 * W(y) + W(y - h)) / (h * h);
            const double d1 = (W(y + h) - W(y - h)) / (2 * h);
            CHECK(std::abs(radial_operator(s, UpperHalfPoint(0.5, y)).value - (d2 + 2 / y * d1)) <= 1e-4);
        }
    CHECK(radial_operator({1.0, kSqrt2}, UpperHalfPoint(0.5, kH)).value > 0.0);
    CHECK_THROWS_AS(radial_operator({1.0, kSqrt2}, UpperHalfPoint(0.4, 1.0)), Error);
}

TEST_CASE("W is decreasing in x inside the domain for beta below the threshold") {
    std::mt19937_64 rng(37);
    int checked = 0;
    for (double beta : {0.0, 1.0, kSqrt2, 3.5})
        for (double a : {1.0, 2.0, 5.0})
            for (int i = 0; i < 200 / 12 + 1; ++i) {
                const UpperHalfPoint z = interior_point(rng, 10.0);
                CHECK(w_dx({a, beta}, z, 1e-300 + 1e-16 * std::exp(-pi * a * z.y)).value < 0.0);
                CHECK(e_functional(a, beta, z) > 0.0);
                ++checked;
            }
    CHECK(checked >= 200);
}

TEST_CASE("hexagonal point is critical") {
    const UpperHalfPoint hex(0.5, kH);
    for (double a : {1.0, 1.5, 2.0, 4.0})
        for (double b : {-1.0, 0.0, 1.0, kSqrt2}) {
            CHECK(std::abs(w_dx({a, b}, hex).value) <= 1e-8);
            CHECK(std::abs(w_dy({a, b}, hex).value) <= 1e-8);
        }
}

TEST_CASE("origin-free theta keeps relative accuracy") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> ua(0.3, 8.0);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        auto [x, y] = oracle::domain_point(rng, 5.0);
        const UpperHalfPoint z(x, y);
        const auto m = theta2d_minus_one(a, z);
        CHECK(std::abs(m.value - (theta2d(a, z, 1e-15).value - 1.0)) <= 4e-15);
        const double ref = double(oracle::theta2d(a, x, y) - 1.0L);
        CHECK(m.value == doctest::Approx(ref).epsilon(1e-11));
        CHECK(m.value > 0.0);
    }
    // deep in the flat regime θ - 1 is tiny but fully resolved
    const UpperHalfPoint hex(0.5, kH);
    const double e = theta2d_minus_one(8.0, hex).value;
    CHECK(e == doctest::Approx(double(oracle::theta2d(8.0, 0.5, kH) - 1.0L)).epsilon(1e-9));
    CHECK(e < 1e-10);
    // energy = W - (1 - β)
    const FunctionalSpec spec{1.3, 1.2};
    CHECK(w_energy(spec, hex).value == doctest::Approx(w_beta(spec, hex).value - (1.0 - 1.2)).epsilon(1e-13));
    CHECK(theta2d_minus_one(1.0, UpperHalfPoint(3.2, 0.1)).value ==
          doctest::Approx(theta2d_minus_one(1.0, reduce(UpperHalfPoint(3.2, 0.1)).point).value));
}

TEST_CASE("dW/dy combined form matches per-width derivatives") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> ua(0.5, 6.0), ub(-2.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng), b = ub(rng);
        auto [x, y] = oracle::domain_point(rng, 8.0);
        const UpperHalfPoint z(x, y);
        const auto w = w_dy({a, b, 2.0, 1 + int(i % 3)}, z);
        const double sep = theta2d_dy(a, z).value - b * theta2d_dy(a * std::pow(2.0, 1 + i % 3), z).value;
        CHECK(std::abs(w.value - sep) <= 1e-12 * (1.0 + std::abs(sep)));
    }
    // at the critical β the √y growth cancels exactly, leaving a tiny positive slope
    for (double y : {10.0, 20.0, 40.0}) {
        const double d = w_dy({1.0, std::sqrt(2.0)}, UpperHalfPoint(0.5, y)).value;
        CHECK(d > 0.0);
        CHECK(d < 1e-5);
    }
}
