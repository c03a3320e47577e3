#pragma once

#include "conchoid/algebra/multipoly.hpp"
#include "conchoid/algebra/unipoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace conchoid::algebra {

/// A homogeneous polynomial in x and y.
using BinaryForm = MultiPoly;

/// q with f = q*g exactly, or nullopt when g does not divide f.
/// Throws std::domain_error when g is zero.
std::optional<MultiPoly> poly_exact_div(const MultiPoly& f, const MultiPoly& g);

/// Greatest common divisor, normalized monic under graded-lex.
/// Recursive subresultant PRS with content/primitive-part splitting.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

/// f / gcd(f, all partial derivatives), monic. Zero for zero input.
MultiPoly squarefree_part(const MultiPoly& f);

/// g with g^2 = f, sign fixed so that the leading coefficient is canonically positive.
/// Square roots of coefficients are taken in f's field.
std::optional<MultiPoly> formal_square_root(const MultiPoly& f);

struct ScaledSquare {
    Scalar scale;   // f = scale * root^2
    MultiPoly root; // monic
};
/// Decides whether f is a scalar multiple of a perfect square; never needs scalar square roots.
std::optional<ScaledSquare> square_root_up_to_scalar(const MultiPoly& f);

struct Root {
    Scalar value;
    int multiplicity = 1;
};
/// All roots of f inside f's field, with multiplicities, sorted by (re, im).
std::vector<Root> rational_roots(const UniPoly& f);

/// [F_d, F_{d-1}, ..., F_0] with F = sum F_h(x, y) z^(d-h). Throws on inhomogeneous input.
std::vector<BinaryForm> homogeneous_decompose(const MultiPoly& F);

/// Factors a binary form over the given field into linear factors found from
/// rational roots plus leftover blocks without roots in the field. Factors are monic.
/// Blocks of degree <= 3 are irreducible; larger blocks may not be.
std::vector<std::pair<BinaryForm, int>> factor_binary_form(const BinaryForm& h, Field field);

/// Multiplies every term by a power of var so that the result is homogeneous of the given degree.
MultiPoly homogenize(const MultiPoly& f, const std::string& var, int degree);

/// Largest k such that var^k divides f (0 for zero input).
int valuation(const MultiPoly& f, const std::string& var);

} // namespace conchoid::algebra
