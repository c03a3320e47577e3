#pragma once

// Determinants of polynomial matrices and the resultants built from them.

#include "conchoid/algebra/multipoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace conchoid::resultant {

using algebra::Field;
using algebra::MultiPoly;
using algebra::Scalar;

/// Square or rectangular matrix of polynomials, row-major.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<MultiPoly> entries;

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c)) {}
    MultiPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
    const MultiPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
};

/// [Phi_0, ..., Phi_d] with Phi_i = (-1)^i sum_{j>=i} C(j,i) F_j z^(d-j).
std::vector<MultiPoly> phi_forms(const MultiPoly& F);

/// The (d+delta)x(d+delta) matrix: delta shifted rows of (Phi_d..Phi_0),
/// then d shifted rows of (G_delta, z G_(delta-1), ..., z^delta G_0).
PolyMatrix conchoid_matrix(const MultiPoly& F, const MultiPoly& G);

struct DetOptions {
    /// Largest number of grid points before switching to polynomial Bareiss.
    std::size_t max_grid = 200000;
    /// Evaluate grid points on several threads.
    bool parallel = true;
};

/// Exact determinant, degree_bound >= total degree of the result.
/// Throws std::invalid_argument for a non-square matrix and
/// std::runtime_error when the bound is detected to be too small.
MultiPoly poly_matrix_det(const PolyMatrix& M, int degree_bound, const DetOptions& opts = {});

/// Fraction-free elimination directly on polynomial entries.
MultiPoly bareiss_det(PolyMatrix M);

/// Determinant of an n x n scalar matrix given row-major.
Scalar scalar_det(std::vector<Scalar> m, int n);

/// Sylvester matrix of f and g with respect to var, with the given formal degrees.
PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, const std::string& var, int m, int n);

/// Classical resultant eliminating var. Throws if var occurs in neither input.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Resultant of two univariate coefficient lists (low to high) taken with formal
/// degrees m and n; coefficients beyond the list are zero.
Scalar sylvester_resultant_formal(const std::vector<Scalar>& f, int m, const std::vector<Scalar>& g, int n);

} // namespace conchoid::resultant
