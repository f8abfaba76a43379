#include "thetamin/halfplane.hpp"

#include <algorithm>
#include <string>

#include "thetamin/errors.hpp"

namespace thetamin {

UpperHalfPoint::UpperHalfPoint(double x_, double y_) : x(x_), y(y_) {
    require(std::isfinite(x) && std::isfinite(y), "UpperHalfPoint: non-finite coordinate");
    require(y > 0.0, "UpperHalfPoint: y must be positive");
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    // Pushing the reflection of g through h conjugates h by z -> -conj(z),
    // which flips the signs of b and c.
    long long ha = h.a, hb = h.b, hc = h.c, hd = h.d;
    if (g.reflected) {
        hb = -hb;
        hc = -hc;
    }
    GroupElement r;
    r.a = g.a * ha + g.b * hc;
    r.b = g.a * hb + g.b * hd;
    r.c = g.c * ha + g.d * hc;
    r.d = g.c * hb + g.d * hd;
    r.reflected = g.reflected != h.reflected;
    return r;
}

UpperHalfPoint apply(const GroupElement& g, const UpperHalfPoint& z) {
    const double wx = g.reflected ? -z.x : z.x;
    const double wy = z.y;
    const double a = double(g.a), b = double(g.b), c = double(g.c), d = double(g.d);
    const double nr = a * wx + b;
    const double dr = c * wx + d;
    const double di = c * wy;
    const double den = dr * dr + di * di;
    const double x = (nr * dr + a * c * wy * wy) / den;
    const double y = wy * double(g.det()) / den;
    return {x, y};
}

Reduction reduce(const UpperHalfPoint& z, int max_iterations) {
    Reduction r{z, GroupElement::identity(), 0, {}};
    UpperHalfPoint& p = r.point;
    for (;;) {
        if (r.iterations >= max_iterations)
            fail(ErrorKind::IterationLimit,
                 "reduce: no convergence after " + std::to_string(max_iterations) + " steps");
        ++r.iterations;
        // translate x into (-1/2, 1/2]
        const double t = -std::ceil(p.x - 0.5);
        if (t != 0.0) {
            p.x += t;
            r.element = compose(GroupElement::translation(static_cast<long long>(t)), r.element);
            r.word.push_back("T" + std::to_string(static_cast<long long>(t)));
        }
        // Points within rounding of the unit circle count as on it; inverting
        // them can bounce across x = ±1/2 forever.
        if (p.abs2() < 1.0 - 1e-14) {
            const double n = p.abs2();
            p = UpperHalfPoint(-p.x / n, p.y / n);
            r.element = compose(GroupElement::inversion(), r.element);
            r.word.push_back("S");
            continue;
        }
        break;
    }
    if (p.x < 0.0) {
        p.x = -p.x;
        r.element = compose(GroupElement::reflection(), r.element);
        r.word.push_back("R");
    }
    return r;
}

DomainMembership membership(const UpperHalfPoint& z, double tol) {
    const double dist = std::min({std::sqrt(z.abs2()) - 1.0, z.x, 0.5 - z.x});
    Region region = Region::Interior;
    if (dist < -tol)
        region = Region::Outside;
    else if (dist <= tol)
        region = Region::Boundary;
    return {region, dist};
}

const char* to_string(Region r) {
    switch (r) {
    case Region::Interior: return "interior";
    case Region::Boundary: return "boundary";
    case Region::Outside: return "outside";
    }
    return "unknown";
}

} // namespace thetamin
