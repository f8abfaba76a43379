#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace thetamin {

// z = x + iy in the upper half plane. Always y > 0 and finite.
struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;

    UpperHalfPoint() = default;
    UpperHalfPoint(double x_, double y_);

    double abs2() const { return x * x + y * y; }
};

// Element of the group generated by z -> -1/z, z -> z+1, z -> -conj(z).
// Acts as w -> (a w + b)/(c w + d) with w = -conj(z) when `reflected`.
struct GroupElement {
    long long a = 1, b = 0, c = 0, d = 1;
    bool reflected = false;

    static GroupElement identity() { return {}; }
    static GroupElement inversion() { return {0, -1, 1, 0, false}; }
    static GroupElement translation(long long t) { return {1, t, 0, 1, false}; }
    static GroupElement reflection() { return {1, 0, 0, 1, true}; }

    long long det() const { return a * d - b * c; }
};

// g∘h: apply h first, then g.
GroupElement compose(const GroupElement& g, const GroupElement& h);

UpperHalfPoint apply(const GroupElement& g, const UpperHalfPoint& z);

struct Reduction {
    UpperHalfPoint point;
    GroupElement element; // apply(element, input) == point
    int iterations = 0;
    // Generators in order of application: "T<t>" (z+t), "S" (-1/z), "R" (-conj z).
    std::vector<std::string> word;
};

inline constexpr int kReduceIterationCap = 10000;

// Maps z into the closure of {|z| > 1, 0 < x < 1/2}.
Reduction reduce(const UpperHalfPoint& z, int max_iterations = kReduceIterationCap);

enum class Region { Interior, Boundary, Outside };

struct DomainMembership {
    Region region;
    double distance; // min(|z|-1, x, 1/2-x); negative outside
};

inline constexpr double kBoundaryTol = 1e-12;

DomainMembership membership(const UpperHalfPoint& z, double tol = kBoundaryTol);

const char* to_string(Region r);

inline UpperHalfPoint hexagonal_point() { return {0.5, std::sqrt(3.0) / 2.0}; }

} // namespace thetamin
