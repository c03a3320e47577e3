#pragma once

#include "conchoid/core/types.hpp"

#include <stdexcept>
#include <utility>

namespace conchoid::core {

/// Raised when the resultant vanishes identically (both curves are powers of z).
class IdenticallyZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// R(F, G) exactly as the determinant of the conchoid matrix (sign included).
MultiPoly raw_conchoidal_transform(const PlaneCurve& B, const PlaneCurve& C);

/// The conchoid of C with respect to B, normalized monic; degree 2 deg B deg C.
PlaneCurve conchoidal_transform(const PlaneCurve& B, const PlaneCurve& C);

struct Membership {
    Scalar value;
    /// Both specialized polynomials drop degree in lambda; value is meaningless.
    bool degenerate = false;
};

/// Resultant in lambda of F((1-l)a, (1-l)b, 1) and G(l a, l b, 1) at Q = [a:b:1].
/// Equals R(F, G)(a, b, 1) whenever it is not degenerate.
Membership membership_value(const PlaneCurve& B, const PlaneCurve& C, const ProjPoint& Q);

/// f in the affine chart centered at P (P moved to the origin), in two variables.
MultiPoly local_equation(const PlaneCurve& f, const ProjPoint& P);

/// Order of vanishing of f at P; 0 when P is not on f.
int multiplicity_at(const PlaneCurve& f, const ProjPoint& P);

/// Lowest-degree form of f at P. Throws when P is not on f.
MultiPoly tangent_cone_at(const PlaneCurve& f, const ProjPoint& P);

/// f(x, y, 0).
BinaryForm infinity_restriction(const PlaneCurve& f);

/// Splits off from R the base curve, powers of z, the line blocks through A
/// given by the factors of the top form of B, and optionally C.
Divisor extract_known_components(const PlaneCurve& R, const Scene& scene, const std::optional<PlaneCurve>& C = std::nullopt,
                                 Field field = Field::Q);

/// Affine equation in x, y of the conchoid computed by elimination from
/// F(X-x, Y-y, 1), xY - yX and G(x, y, 1); squarefree, so multiplicities are lost.
MultiPoly elimination_crosscheck(const PlaneCurve& B, const PlaneCurve& C);

/// (2 d delta, d gamma + delta g + (d-1)(delta-1)) for smooth B of degree d.
std::pair<int, Rational> degree_genus_predict(int d, const Rational& g, int delta, const Rational& gamma);

} // namespace conchoid::core
