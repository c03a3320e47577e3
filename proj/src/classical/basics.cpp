#include "internal.hpp"

#include "conchoid/resultant/resultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace conchoid::classical {

using algebra::UniPoly;

namespace detail {

MultiPoly q0() { return MultiPoly::x().pow(2) + MultiPoly::y().pow(2); }
MultiPoly l1_0() { return MultiPoly::x() + Scalar::i() * MultiPoly::y(); }
MultiPoly l2_0() { return MultiPoly::x() - Scalar::i() * MultiPoly::y(); }

std::optional<Rational> exact_radius(const Rational& r2) { return algebra::rational_sqrt(r2); }

MultiPoly proper_at_origin(const Rational& r2, const MultiPoly& G) {
    CircleSpec B{{}, r2};
    PlaneCurve base = B.curve();
    PlaneCurve R = core::conchoidal_transform(base, PlaneCurve(G));
    core::Divisor d = core::extract_known_components(R, core::Scene(base));
    auto res = d.find(core::Label::Residual);
    return res ? res->poly : MultiPoly(Scalar(1), {"x", "y", "z"});
}

Radii probe_radii(const PlaneCurve& D, const Point2& A, const std::vector<MultiPoly>& probes) {
    std::vector<MultiPoly> lines = probes;
    if (lines.empty()) {
        lines.push_back(MultiPoly::y() - MultiPoly(Scalar(A.b)) * MultiPoly::z());
        lines.push_back(MultiPoly::x() - MultiPoly(Scalar(A.a)) * MultiPoly::z());
    }
    MultiPoly Dc = recenter(D.equation(), A);
    Radii out;
    for (const auto& probe : lines) {
        MultiPoly l = recenter(probe, A).with_variables({"x", "y", "z"});
        if (!l.is_homogeneous() || l.total_degree() != 1 || l.involves("z"))
            throw std::invalid_argument("probe must be a line through the center: " + probe.to_string());
        Scalar alpha = l.coefficient({1, 0, 0}), beta = l.coefficient({0, 1, 0});
        if (!alpha.is_real() || !beta.is_real()) throw std::invalid_argument("probe must be a real line");
        // Points A + t (beta, -alpha).
        MultiPoly t = MultiPoly::variable("t");
        MultiPoly restricted = Dc.substitute({{"x", t * beta}, {"y", t * (-alpha)}, {"z", MultiPoly(Scalar(1))}});
        if (restricted.is_zero()) continue;
        UniPoly u = UniPoly::from_multipoly(restricted.trimmed(), "t");
        std::vector<Rational> ts{Rational(0)};
        int found = 0;
        if (u.degree() > 0) {
            for (const auto& r : algebra::rational_roots(u)) {
                if (!r.value.is_real()) continue;
                found += r.multiplicity;
                if (std::find(ts.begin(), ts.end(), r.value.re()) == ts.end()) ts.push_back(r.value.re());
            }
        }
        if (found != std::max(u.degree(), 0)) out.exhaustive = false;
        Rational norm = (alpha * alpha + beta * beta).re();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                Rational s = (ts[i] - ts[j]) * (ts[i] - ts[j]) * norm;
                for (Rational v : {Rational(s / 4), s, Rational(s * 4)}) {
                    v.canonicalize();
                    if (std::find(out.values.begin(), out.values.end(), v) == out.values.end()) out.values.push_back(v);
                }
            }
        }
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

} // namespace detail

PlaneCurve CircleSpec::curve() const {
    return PlaneCurve(squared_distance_form(center) - MultiPoly(Scalar(r2)) * MultiPoly::z().pow(2));
}

MultiPoly recenter(const MultiPoly& f, const Point2& A) {
    MultiPoly z = MultiPoly::z();
    return f.substitute({{"x", MultiPoly::x() + MultiPoly(Scalar(A.a)) * z}, {"y", MultiPoly::y() + MultiPoly(Scalar(A.b)) * z}});
}

std::pair<MultiPoly, MultiPoly> cyclic_tangent_pair(const Point2& A) {
    Point2 back = detail::opposite(A);
    return {recenter(detail::l1_0(), back), recenter(detail::l2_0(), back)};
}

MultiPoly squared_distance_form(const Point2& A) { return recenter(detail::q0(), detail::opposite(A)); }

std::vector<Rational> candidate_radii(const PlaneCurve& D, const Point2& A, const std::vector<MultiPoly>& probes) {
    return detail::probe_radii(D, A, probes).values;
}

Field SplitWitness::field() const {
    bool real = H1.coefficient_field() == Field::Q && H2.coefficient_field() == Field::Q && scale.is_real() && kappa.is_real();
    return real && parity == Parity::Even ? Field::Q : Field::Qi;
}

bool SplitWitness::verify(const MultiPoly& G) const {
    MultiPoly lhs = G * scale;
    if (parity == Parity::Even) return lhs == H1 * H1 - kappa * squared_distance_form(center) * H2 * H2;
    auto [l1, l2] = cyclic_tangent_pair(center);
    return lhs == l1 * H1 * H1 - kappa * l2 * H2 * H2;
}

nlohmann::json SplitWitness::to_json() const {
    return {{"parity", parity == Parity::Even ? "even" : "odd"},
            {"center", {center.a.get_str(), center.b.get_str()}},
            {"H1", H1.to_string()},
            {"H2", H2.to_string()},
            {"scale", scale.to_string()},
            {"kappa", kappa.to_string()}};
}

std::string to_string(SplitVerdict v) {
    switch (v) {
    case SplitVerdict::Split: return "split";
    case SplitVerdict::Irreducible: return "irreducible";
    case SplitVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

nlohmann::json RecognitionReport::to_json() const {
    nlohmann::json checks_j = nlohmann::json::array();
    for (const auto& c : checks) checks_j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : candidates)
        cands.push_back({{"center", {c.center.a.get_str(), c.center.b.get_str()}}, {"r2", c.r2.get_str()}, {"witness", c.witness.to_string()}});
    return {{"verdict", to_string(verdict)}, {"checks", checks_j}, {"candidates", cands}};
}

MultiPoly proper_conchoid(const CircleSpec& B, const PlaneCurve& C) {
    MultiPoly res = detail::proper_at_origin(B.r2, recenter(C.equation(), B.center));
    return recenter(res, detail::opposite(B.center)).monic();
}

FocusResult conic_focus_split(const PlaneCurve& C, const Point2& A) {
    if (C.degree() != 2) throw std::invalid_argument("conic_focus_split: expected a conic");
    MultiPoly G = recenter(C.equation(), A).with_variables({"x", "y", "z"});
    std::vector<Scalar> M(9);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            algebra::Monomial m(3, 0);
            m[static_cast<std::size_t>(i)] += 1;
            m[static_cast<std::size_t>(j)] += 1;
            Scalar c = G.coefficient(m);
            M[static_cast<std::size_t>(3 * i + j)] = i == j ? c : c / Scalar(2);
        }
    }
    if (resultant::scalar_det(M, 3).is_zero()) throw std::invalid_argument("conic_focus_split: the conic is degenerate");
    MultiPoly polar = MultiPoly::x() * M[6] + MultiPoly::y() * M[7] + MultiPoly::z() * M[8];
    FocusResult out;
    out.polar = recenter(polar, detail::opposite(A));
    if (M[8].is_zero()) return out; // A on C: the polar has no z and cannot produce G's z terms
    Scalar lambda = M[8].inverse();
    MultiPoly rest = G - polar * polar * lambda;
    Scalar mu = rest.with_variables({"x", "y", "z"}).coefficient({2, 0, 0});
    if (mu.is_zero() || rest != detail::q0() * mu) return out;
    out.is_focus = true;
    out.c = -mu / lambda;
    return out;
}

} // namespace conchoid::classical
