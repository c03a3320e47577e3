#pragma once

#include "conchoid/core/types.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace conchoid::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kInconclusive = 3 };

/// Parses a curve. With `affine` the input may not contain z and is homogenized
/// with z to its total degree; without it the input must already be homogeneous.
core::PlaneCurve parse_curve(std::string_view text, algebra::Field field = algebra::Field::Q, bool affine = false);

/// Runs one command line (args excludes the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace conchoid::cli
