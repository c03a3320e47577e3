#pragma once

#include "conchoid/core/types.hpp"

#include <string>

namespace conchoid::cli {

struct PlotSpec {
    algebra::Rational xmin = -2, xmax = 2, ymin = -2, ymax = 2;
    int grid = 128; // cells per axis
    std::string stroke = "#1f4e79";
    double stroke_width = 1.5;
    int width = 512; // pixels; the height follows the window's aspect ratio
};

struct Plot {
    std::string svg;
    std::size_t segments = 0;
};

/// Real affine locus f(x, y, 1) = 0 drawn by marching squares. Node values are
/// exact; floating point enters only for the final coordinates, so the output
/// is the same on every run.
Plot render_svg(const core::PlaneCurve& f, const PlotSpec& spec);

} // namespace conchoid::cli
