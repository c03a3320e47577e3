#include "conchoid/cli/plot.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace conchoid::cli {

using algebra::Rational;
using algebra::Scalar;

namespace {

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

Plot render_svg(const core::PlaneCurve& f, const PlotSpec& spec) {
    if (!(spec.xmin < spec.xmax) || !(spec.ymin < spec.ymax)) throw std::invalid_argument("plot window is degenerate");
    if (spec.grid < 16) throw std::invalid_argument("plot grid must be at least 16");
    if (f.equation().coefficient_field() != algebra::Field::Q) throw std::invalid_argument("plot needs real coefficients");

    const int n = spec.grid;
    const Rational dx = (spec.xmax - spec.xmin) / n, dy = (spec.ymax - spec.ymin) / n;
    algebra::MultiPoly h = f.equation().substitute("z", algebra::MultiPoly(Scalar(1)));

    // Horner in y over the x-coefficients: each column costs one pass per coefficient.
    auto ycoeffs = h.coefficients_in("y");
    std::vector<std::vector<Rational>> value(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i <= n; ++i) {
        Rational x = spec.xmin + dx * i;
        std::vector<Rational> c;
        for (const auto& k : ycoeffs) c.push_back(k.evaluate({{"x", Scalar(x)}}).re());
        for (int j = 0; j <= n; ++j) {
            Rational y = spec.ymin + dy * j, acc = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
            value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    }

    const double W = spec.width;
    const double H = std::max(1.0, W * Rational((spec.ymax - spec.ymin) / (spec.xmax - spec.xmin)).get_d());
    auto to_screen = [&](const Rational& x, const Rational& y) {
        return Pt{Rational((x - spec.xmin) / (spec.xmax - spec.xmin)).get_d() * W, Rational((spec.ymax - y) / (spec.ymax - spec.ymin)).get_d() * H};
    };
    // Crossing on the edge from node p to node q, by linear interpolation of exact values.
    auto crossing = [&](int i0, int j0, int i1, int j1) {
        const Rational &a = value[static_cast<std::size_t>(i0)][static_cast<std::size_t>(j0)],
                       &b = value[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j1)];
        Rational t = a / (a - b);
        Rational x = spec.xmin + dx * (i0 + (i1 - i0) * t), y = spec.ymin + dy * (j0 + (j1 - j0) * t);
        return to_screen(x, y);
    };

    std::ostringstream path;
    std::size_t segments = 0;
    auto emit = [&](const Pt& p, const Pt& q) {
        path << (segments ? " " : "") << "M" << fmt(p.x) << " " << fmt(p.y) << "L" << fmt(q.x) << " " << fmt(q.y);
        ++segments;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // corners counterclockwise from (i, j)
            const std::array<std::pair<int, int>, 4> c{{{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
            std::array<bool, 4> in{};
            for (int k = 0; k < 4; ++k) in[static_cast<std::size_t>(k)] = sgn(value[static_cast<std::size_t>(c[static_cast<std::size_t>(k)].first)][static_cast<std::size_t>(c[static_cast<std::size_t>(k)].second)]) > 0;
            std::vector<Pt> pts;
            for (int k = 0; k < 4; ++k) {
                auto p = c[static_cast<std::size_t>(k)], q = c[static_cast<std::size_t>((k + 1) % 4)];
                if (in[static_cast<std::size_t>(k)] != in[static_cast<std::size_t>((k + 1) % 4)]) pts.push_back(crossing(p.first, p.second, q.first, q.second));
            }
            if (pts.size() == 2) {
                emit(pts[0], pts[1]);
            } else if (pts.size() == 4) {
                // saddle: the sign of the cell average decides which corners connect
                Rational avg = 0;
                for (const auto& [a, b] : c) avg += value[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                bool center_in = sgn(avg) > 0;
                if (center_in == in[0]) {
                    emit(pts[0], pts[1]);
                    emit(pts[2], pts[3]);
                } else {
                    emit(pts[0], pts[3]);
                    emit(pts[1], pts[2]);
                }
            }
        }
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(W) << "\" height=\"" << fmt(H) << "\" viewBox=\"0 0 "
        << fmt(W) << " " << fmt(H) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(W) << "\" height=\"" << fmt(H) << "\" fill=\"white\"/>\n";
    if (spec.xmin < 0 && spec.xmax > 0) {
        Pt a = to_screen(0, spec.ymin);
        Pt b = to_screen(0, spec.ymax);
        svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#cccccc\"/>\n";
    }
    if (spec.ymin < 0 && spec.ymax > 0) {
        Pt a = to_screen(spec.xmin, 0);
        Pt b = to_screen(spec.xmax, 0);
        svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#cccccc\"/>\n";
    }
    if (segments > 0)
        svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << spec.stroke << "\" stroke-width=\"" << fmt(spec.stroke_width)
            << "\" stroke-linecap=\"round\"/>\n";
    svg << "</svg>\n";
    return {svg.str(), segments};
}

} // namespace conchoid::cli
