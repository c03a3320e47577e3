#pragma once

#include "conchoid/classical/classical.hpp"

namespace conchoid::classical::detail {

inline Point2 opposite(const Point2& A) { return {-A.a, -A.b}; }

/// x^2 + y^2 and x +- iy at the origin.
MultiPoly q0();
MultiPoly l1_0();
MultiPoly l2_0();

/// Square root of r2 in Q, if any.
std::optional<Rational> exact_radius(const Rational& r2);

struct Radii {
    std::vector<Rational> values;
    /// Every probe met D only in rational points, so the list misses no pair.
    bool exhaustive = true;
};
Radii probe_radii(const PlaneCurve& D, const Point2& A, const std::vector<MultiPoly>& probes);

/// Proper conchoid of G (already centered at the origin) for the circle of squared radius r2 there.
MultiPoly proper_at_origin(const Rational& r2, const MultiPoly& G);

/// Witness found at the origin, for G given at the origin.
SplitResult split_at_origin(const MultiPoly& G);

} // namespace conchoid::classical::detail
