// Deciding whether a curve is a conchoid with a circular base.
//
// Both procedures reduce to finitely many rational candidates (A, r^2) and then
// verify each one exactly; every rejection that depends on rationality is
// reported as inconclusive rather than no.

#include "internal.hpp"

#include "conchoid/classical/solver.hpp"
#include "conchoid/resultant/resultant.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace conchoid::classical {

using algebra::Monomial;
using core::ProjPoint;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

std::string show(const Point2& A) { return "(" + A.a.get_str() + ", " + A.b.get_str() + ")"; }

void add_check(RecognitionReport& r, std::string name, bool passed, std::string detail) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
}

struct Centers {
    std::vector<Point2> points;
    bool exhaustive = true;
};

// Affine real rational points where every partial derivative of order `order` vanishes.
Centers points_with_vanishing_derivatives(const PlaneCurve& D, int order, int min_mult) {
    MultiPoly h = D.equation().substitute("z", MultiPoly(Scalar(1))).with_variables({"x", "y"});
    std::vector<MultiPoly> eqs;
    for (int a = 0; a <= order; ++a) {
        MultiPoly d = h;
        for (int i = 0; i < a; ++i) d = d.derivative("x");
        for (int i = 0; i < order - a; ++i) d = d.derivative("y");
        eqs.push_back(d);
    }
    SolveResult sol = solve_polynomial_system(eqs, {"x", "y"}, D.equation().coefficient_field());
    Centers out;
    out.exhaustive = sol.exhaustive;
    for (const auto& s : sol.solutions) {
        const Scalar &a = s.at("x"), &b = s.at("y");
        if (!a.is_real() || !b.is_real()) continue;
        if (core::multiplicity_at(D, ProjPoint::affine(a, b)) < min_mult) continue;
        out.points.push_back({a.re(), b.re()});
    }
    return out;
}

// Factors of the residual that occur at least twice, as gcd with a derivative.
// A repeated factor involving x survives the specialization y = y0, z = 1 as
// long as the x-degree does not drop, and likewise with the roles swapped.
bool certainly_squarefree(const MultiPoly& f) {
    for (const char* v : {"x", "y"}) {
        const char* other = v[0] == 'x' ? "y" : "x";
        int full = f.degree_in(v);
        if (full <= 0) continue;
        bool done = false;
        for (int t = 2; t < 40 && !done; t += 3) {
            MultiPoly s = f.substitute({{other, MultiPoly(Scalar(t))}, {"z", MultiPoly(Scalar(1))}});
            auto u = algebra::UniPoly::from_multipoly(s.trimmed(), v);
            if (u.degree() != full) continue;
            if (algebra::gcd(u, u.derivative()).degree() > 0) return false;
            done = true;
        }
        if (!done) return false;
    }
    return true;
}

std::vector<MultiPoly> doubled_factors(const MultiPoly& residual) {
    std::vector<MultiPoly> out;
    if (certainly_squarefree(residual)) return out;
    MultiPoly g(Scalar(1));
    for (const char* v : {"x", "y", "z"}) {
        MultiPoly d = residual.derivative(v);
        if (d.is_zero()) continue;
        g = algebra::poly_gcd(residual, d);
        if (!g.is_constant()) break;
    }
    if (g.is_constant()) return out;
    for (const MultiPoly& cand : {g, algebra::squarefree_part(g)}) {
        auto once = algebra::poly_exact_div(residual, cand);
        if (!once || !algebra::poly_exact_div(*once, cand)) continue;
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand.with_variables(kXYZ));
    }
    return out;
}

std::optional<MultiPoly> residual_of(const Rational& r2, const MultiPoly& Dc) {
    CircleSpec B{{}, r2};
    PlaneCurve base = B.curve();
    try {
        PlaneCurve R = core::conchoidal_transform(base, PlaneCurve(Dc));
        auto res = core::extract_known_components(R, core::Scene(base)).find(core::Label::Residual);
        if (!res) return std::nullopt;
        return res->poly;
    } catch (const core::IdenticallyZero&) {
        return std::nullopt;
    }
}

bool divides(const MultiPoly& d, const MultiPoly& f) { return algebra::poly_exact_div(f, d).has_value(); }

std::optional<MultiPoly> verify_complete(const MultiPoly& Dc, const Rational& r2, int delta) {
    auto res = residual_of(r2, Dc);
    if (!res) return std::nullopt;
    CircleSpec B{{}, r2};
    for (const auto& cand : doubled_factors(*res)) {
        if (cand.total_degree() != delta) continue;
        if (algebra::equal_up_to_scalar(core::conchoidal_transform(B.curve(), PlaneCurve(cand)).equation(), Dc)) return cand;
    }
    return std::nullopt;
}

// Nullspace vectors of a dense matrix over Q(i), by reduced row echelon form.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> m, std::size_t cols) {
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Scalar inv = m[row][c].inverse();
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            Scalar f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

MultiPoly monomial_poly(const Monomial& m) {
    MultiPoly p(kXYZ);
    p.add_term(m, Scalar(1));
    return p;
}

// The curve of degree `degree` containing the image of {D = 0} under phi, if there is one.
std::optional<MultiPoly> implicitize(const MultiPoly& D, const std::array<MultiPoly, 3>& phi, int degree) {
    auto gm = monomials_of_degree(degree);
    std::vector<MultiPoly> columns;
    int top = -1;
    for (const auto& m : gm) {
        MultiPoly v(Scalar(1));
        for (int i = 0; i < 3; ++i) v *= phi[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(m[static_cast<std::size_t>(i)]));
        v = v.with_variables(kXYZ);
        top = std::max(top, v.total_degree());
        columns.push_back(v);
    }
    int kdeg = top - D.total_degree();
    if (kdeg < 0) return std::nullopt;
    for (const auto& m : monomials_of_degree(kdeg)) columns.push_back((-(D * monomial_poly(m))).with_variables(kXYZ));
    auto rows = monomials_of_degree(top);
    std::vector<std::vector<Scalar>> mat(rows.size(), std::vector<Scalar>(columns.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) mat[r][c] = columns[c].coefficient(rows[r]);
    for (const auto& v : nullspace(mat, columns.size())) {
        MultiPoly G(kXYZ, Field::Qi);
        for (std::size_t j = 0; j < gm.size(); ++j) G.add_term(gm[j], v[j]);
        if (!G.is_zero() && G.total_degree() == degree) return G.monic();
    }
    return std::nullopt;
}

std::optional<MultiPoly> verify_proper(const MultiPoly& Dc, const Rational& r2) {
    // A proper conchoid that is irreducible: C shows up twice in the conchoid of D.
    if (auto res = residual_of(r2, Dc)) {
        for (const auto& cand : doubled_factors(*res)) {
            auto back = residual_of(r2, cand);
            if (back && divides(Dc, *back)) return cand;
        }
    }
    // One half of a split conchoid: D itself splits, and the branch map sends D onto C.
    auto r = detail::exact_radius(r2);
    if (!r || Dc.total_degree() % 2 != 0) return std::nullopt;
    SplitResult s;
    try {
        s = detail::split_at_origin(Dc);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (!s.witness || s.witness->parity != Parity::Even) return std::nullopt;
    auto k = algebra::scalar_sqrt(s.witness->kappa, Field::Qi);
    if (!k) return std::nullopt;
    const MultiPoly &H1 = s.witness->H1, &H2 = s.witness->H2;
    for (int sign : {1, -1}) {
        MultiPoly M = H1 + MultiPoly::z() * H2 * (*k * Scalar(*r) * Scalar(sign));
        std::array<MultiPoly, 3> phi{MultiPoly::x() * M, MultiPoly::y() * M, MultiPoly::z() * H1};
        auto G = implicitize(Dc, phi, Dc.total_degree() / 2);
        if (!G) continue;
        auto back = residual_of(r2, *G);
        if (back && divides(Dc, *back)) return G->with_field(G->coefficient_field());
    }
    return std::nullopt;
}

struct Lines {
    std::vector<Scalar> offsets;
    bool exhaustive = true;
    std::string note;
};

// Values c for which x + sign*i*y - c z meets D only with even multiplicities
// away from the cyclic point it passes through.
Lines tangent_lines(const MultiPoly& D, int sign) {
    Lines out;
    MultiPoly c = MultiPoly::variable("c"), y = MultiPoly::y();
    // affine chart z = 1 of the line, parametrized by y; the cyclic point is at y = infinity
    MultiPoly affine = D.substitute({{"x", c - y * (Scalar(sign) * Scalar::i())}, {"z", MultiPoly(Scalar(1))}});
    if (affine.degree_in("y") <= 0) {
        out.exhaustive = false;
        out.note = "every line of the pencil qualifies";
        return out;
    }
    MultiPoly disc = resultant::sylvester_resultant(affine, affine.derivative("y"), "y");
    if (disc.is_zero()) {
        out.exhaustive = false;
        out.note = "restrictions are never squarefree";
        return out;
    }
    std::vector<Scalar> cands;
    for (const MultiPoly& cond : {disc, affine.coefficients_in("y").back()}) {
        if (cond.is_constant()) continue;
        SolveResult r = solve_polynomial_system({cond}, {"c"}, Field::Qi);
        if (!r.exhaustive) out.exhaustive = false;
        for (const auto& s : r.solutions)
            if (std::find(cands.begin(), cands.end(), s.at("c")) == cands.end()) cands.push_back(s.at("c"));
    }
    for (const auto& cv : cands) {
        MultiPoly form = affine.substitute("c", MultiPoly(cv));
        if (form.is_zero()) continue;
        if (form.is_constant() || algebra::square_root_up_to_scalar(form)) out.offsets.push_back(cv);
    }
    return out;
}

} // namespace

RecognitionReport recognize_complete(const PlaneCurve& D) {
    RecognitionReport rep;
    const int deg = D.degree();
    if (deg <= 0 || deg % 4 != 0) {
        add_check(rep, "degree", false, "degree " + std::to_string(deg) + " is not a positive multiple of 4");
        rep.verdict = Verdict::No;
        return rep;
    }
    const int delta = deg / 4;
    add_check(rep, "degree", true, "degree " + std::to_string(deg) + ", delta = " + std::to_string(delta));

    MultiPoly top = core::infinity_restriction(D);
    auto rest = algebra::poly_exact_div(top, detail::q0().pow(static_cast<unsigned>(delta)));
    if (!rest || !algebra::square_root_up_to_scalar(*rest)) {
        add_check(rep, "infinity", false, "D(x, y, 0) is not (x^2 + y^2)^delta times a square");
        rep.verdict = Verdict::No;
        return rep;
    }
    add_check(rep, "infinity", true, "D(x, y, 0) = (x^2 + y^2)^" + std::to_string(delta) + " * square");

    Centers centers = points_with_vanishing_derivatives(D, 2 * delta - 1, 2 * delta);
    if (centers.points.empty()) {
        add_check(rep, "center", false, "no rational affine point of multiplicity >= " + std::to_string(2 * delta));
        rep.verdict = centers.exhaustive ? Verdict::No : Verdict::Inconclusive;
        return rep;
    }
    std::string names;
    for (const auto& A : centers.points) names += (names.empty() ? "" : ", ") + show(A);
    add_check(rep, "center", true, names);

    bool exhaustive = centers.exhaustive;
    std::size_t tried = 0;
    for (const auto& A : centers.points) {
        detail::Radii radii = detail::probe_radii(D, A, {});
        exhaustive = exhaustive && radii.exhaustive;
        MultiPoly Dc = recenter(D.equation(), A).with_variables(kXYZ);
        for (const auto& r2 : radii.values) {
            ++tried;
            if (auto w = verify_complete(Dc, r2, delta))
                rep.candidates.push_back({A, r2, recenter(*w, detail::opposite(A)).monic().with_variables(kXYZ)});
        }
    }
    add_check(rep, "radii", tried > 0, std::to_string(tried) + " candidate pairs (A, r^2)");
    add_check(rep, "verification", !rep.candidates.empty(),
              rep.candidates.empty() ? "no candidate has a doubled component whose conchoid is D" : "conchoid of the witness equals D");
    rep.verdict = !rep.candidates.empty() ? Verdict::Yes : exhaustive ? Verdict::No : Verdict::Inconclusive;
    return rep;
}

RecognitionReport recognize_proper(const PlaneCurve& D) {
    RecognitionReport rep;
    const int deg = D.degree();
    if (deg < 2 || deg % 2 != 0) {
        add_check(rep, "degree", false, "degree " + std::to_string(deg) + " is not even and at least 2");
        rep.verdict = deg % 2 != 0 && deg > 2 ? Verdict::Inconclusive : Verdict::No;
        return rep;
    }
    add_check(rep, "degree", true, "degree " + std::to_string(deg));

    Lines first = tangent_lines(D.equation(), 1), second = tangent_lines(D.equation(), -1);
    bool exhaustive = first.exhaustive && second.exhaustive;
    std::ostringstream lines;
    lines << first.offsets.size() << " line(s) through [1:i:0], " << second.offsets.size() << " through [1:-i:0]";
    if (!first.note.empty()) lines << "; " << first.note;
    add_check(rep, "tangent_lines", !first.offsets.empty() && !second.offsets.empty(), lines.str());

    std::vector<Point2> centers;
    for (const auto& c1 : first.offsets) {
        for (const auto& c2 : second.offsets) {
            // x + iy = c1 and x - iy = c2
            Scalar a = (c1 + c2) / Scalar(2), b = (c1 - c2) / (Scalar(2) * Scalar::i());
            if (!a.is_real() || !b.is_real()) continue;
            Point2 A{a.re(), b.re()};
            if (std::find(centers.begin(), centers.end(), A) == centers.end()) centers.push_back(A);
        }
    }
    if (centers.empty()) {
        add_check(rep, "center", false, "no real affine intersection of a tangent pair");
        rep.verdict = exhaustive ? Verdict::No : Verdict::Inconclusive;
        return rep;
    }
    std::string names;
    for (const auto& A : centers) names += (names.empty() ? "" : ", ") + show(A);
    add_check(rep, "center", true, names);

    std::size_t tried = 0;
    for (const auto& A : centers) {
        detail::Radii radii = detail::probe_radii(D, A, {});
        exhaustive = exhaustive && radii.exhaustive;
        MultiPoly Dc = recenter(D.equation(), A).with_variables(kXYZ);
        for (const auto& r2 : radii.values) {
            ++tried;
            if (auto w = verify_proper(Dc, r2))
                rep.candidates.push_back({A, r2, recenter(*w, detail::opposite(A)).monic().with_variables(kXYZ)});
        }
    }
    add_check(rep, "radii", tried > 0, std::to_string(tried) + " candidate pairs (A, r^2)");
    add_check(rep, "verification", !rep.candidates.empty(),
              rep.candidates.empty() ? "no candidate curve has D in its proper conchoid" : "D is a component of the witness' proper conchoid");
    rep.verdict = !rep.candidates.empty() ? Verdict::Yes : exhaustive ? Verdict::No : Verdict::Inconclusive;
    return rep;
}

} // namespace conchoid::classical
