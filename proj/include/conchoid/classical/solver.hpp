#pragma once

#include "conchoid/algebra/operations.hpp"

#include <map>
#include <string>
#include <vector>

namespace conchoid::classical {

using Assignment = std::map<std::string, algebra::Scalar>;

struct SolveResult {
    std::vector<Assignment> solutions;
    /// False when roots outside the field were dropped or free variables were pinned to 0,
    /// i.e. when an empty solution list does not prove that no solution exists.
    bool exhaustive = true;
};

/// Common zeros in the field of a small polynomial system, by pairwise resultants,
/// gcds and rational roots, eliminating variables from the back of `vars`.
SolveResult solve_polynomial_system(std::vector<algebra::MultiPoly> eqs, const std::vector<std::string>& vars, algebra::Field field);

} // namespace conchoid::classical
