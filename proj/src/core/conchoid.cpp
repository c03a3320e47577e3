#include "conchoid/core/conchoid.hpp"

#include "conchoid/resultant/resultant.hpp"

#include <random>

namespace conchoid::core {

using algebra::poly_exact_div;
using algebra::poly_gcd;

MultiPoly raw_conchoidal_transform(const PlaneCurve& B, const PlaneCurve& C) {
    if (B.degree() < 1 || C.degree() < 1) throw std::invalid_argument("conchoidal transform needs curves of positive degree");
    auto M = resultant::conchoid_matrix(B.equation(), C.equation());
    return resultant::poly_matrix_det(M, 2 * B.degree() * C.degree());
}

PlaneCurve conchoidal_transform(const PlaneCurve& B, const PlaneCurve& C) {
    MultiPoly R = raw_conchoidal_transform(B, C);
    if (R.is_zero()) throw IdenticallyZero("the resultant vanishes identically (both curves are supported on z = 0)");
    return PlaneCurve(R.monic());
}

Membership membership_value(const PlaneCurve& B, const PlaneCurve& C, const ProjPoint& Q) {
    if (!Q.is_affine()) throw std::invalid_argument("membership_value: point at infinity");
    ProjPoint q = Q.canonical();
    std::map<std::string, Scalar> at{{"x", q.coords[0]}, {"y", q.coords[1]}, {"z", Scalar(1)}};
    auto phi = resultant::phi_forms(B.equation());
    std::vector<Scalar> f, g;
    for (const auto& p : phi) f.push_back(p.evaluate(at));
    const auto& parts = C.z_parts(); // parts[k] = G_(delta-k)
    for (int h = 0; h <= C.degree(); ++h) g.push_back(parts[static_cast<std::size_t>(C.degree() - h)].evaluate(at));
    Membership m;
    m.degenerate = f.back().is_zero() && g.back().is_zero();
    m.value = m.degenerate ? Scalar(0) : resultant::sylvester_resultant_formal(f, B.degree(), g, C.degree());
    return m;
}

MultiPoly local_equation(const PlaneCurve& f, const ProjPoint& P) {
    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y();
    const MultiPoly one(Scalar(1));
    MultiPoly g;
    if (P.is_affine()) {
        ProjPoint p = P.canonical();
        g = f.equation().substitute({{"x", x + MultiPoly(p.coords[0])}, {"y", y + MultiPoly(p.coords[1])}, {"z", one}});
    } else if (!P.coords[0].is_zero()) {
        Scalar s = P.coords[1] / P.coords[0];
        g = f.equation().substitute({{"x", one}, {"y", x + MultiPoly(s)}, {"z", y}});
    } else {
        g = f.equation().substitute({{"x", x}, {"y", one}, {"z", y}});
    }
    return g.with_variables({"x", "y"});
}

int multiplicity_at(const PlaneCurve& f, const ProjPoint& P) { return local_equation(f, P).lowest_degree(); }

MultiPoly tangent_cone_at(const PlaneCurve& f, const ProjPoint& P) {
    MultiPoly g = local_equation(f, P);
    int m = g.lowest_degree();
    if (m == 0) throw std::invalid_argument("tangent_cone_at: point " + P.to_string() + " is not on the curve");
    return g.homogeneous_part(m);
}

BinaryForm infinity_restriction(const PlaneCurve& f) {
    return f.equation().substitute("z", MultiPoly(Scalar(0))).with_variables({"x", "y"});
}

Divisor extract_known_components(const PlaneCurve& R, const Scene& scene, const std::optional<PlaneCurve>& C, Field field) {
    Divisor d;
    MultiPoly rem = R.equation();
    auto take = [&](const MultiPoly& h, Label label) {
        if (h.is_zero() || h.is_constant()) return;
        MultiPoly m = h.monic();
        int k = 0;
        while (auto q = poly_exact_div(rem, m)) {
            rem = std::move(*q);
            ++k;
        }
        if (k > 0) d.components.push_back({m.with_variables({"x", "y", "z"}), k, label});
    };
    take(scene.base.equation(), Label::Base);
    take(MultiPoly::z(), Label::LineInfinity);
    Field f = algebra::join(field, scene.base.field());
    for (const auto& [h, mult] : algebra::factor_binary_form(scene.base.z_parts().front(), f)) take(h, Label::LineBlock);
    if (C) take(C->equation(), Label::Input);
    d.unit = rem.leading_coefficient();
    MultiPoly residual = rem.monic();
    if (!residual.is_constant()) d.components.push_back({residual.with_variables({"x", "y", "z"}), 1, Label::Residual});
    return d;
}

namespace {

enum class Verdict { OnCurve, OffCurve, Mixed, Unknown };

// Samples rational points of {g = 0} (g must be linear in x or y) and asks the membership oracle.
Verdict sample_membership(const PlaneCurve& B, const PlaneCurve& C, const MultiPoly& g, std::mt19937& rng) {
    std::string solve, other;
    if (g.degree_in("x") == 1) {
        solve = "x";
        other = "y";
    } else if (g.degree_in("y") == 1) {
        solve = "y";
        other = "x";
    } else {
        return Verdict::Unknown;
    }
    auto c = g.coefficients_in(solve);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 7);
    int on = 0, off = 0;
    for (int tries = 0; tries < 200 && on + off < 25; ++tries) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        std::map<std::string, Scalar> at{{other, Scalar(t)}};
        Scalar c1 = c[1].evaluate(at);
        if (c1.is_zero()) continue;
        Scalar w = -c[0].evaluate(at) / c1;
        ProjPoint Q = solve == "x" ? ProjPoint::affine(w, Scalar(t)) : ProjPoint::affine(Scalar(t), w);
        Membership m = membership_value(B, C, Q);
        if (m.degenerate) continue;
        (m.value.is_zero() ? on : off) += 1;
    }
    if (on + off == 0) return Verdict::Unknown;
    if (off == 0) return Verdict::OnCurve;
    if (on == 0) return Verdict::OffCurve;
    return Verdict::Mixed;
}

MultiPoly leading_in(const MultiPoly& f, const std::string& v) {
    auto c = f.coefficients_in(v);
    return c.empty() ? MultiPoly() : c.back();
}

} // namespace

MultiPoly elimination_crosscheck(const PlaneCurve& B, const PlaneCurve& C) {
    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y();
    const MultiPoly u = MultiPoly::variable("u"), v = MultiPoly::variable("v");
    MultiPoly f1 = B.equation().substitute({{"x", x - u}, {"y", y - v}, {"z", MultiPoly(Scalar(1))}});
    MultiPoly L = u * y - v * x;
    MultiPoly g = C.equation().substitute({{"x", u}, {"y", v}, {"z", MultiPoly(Scalar(1))}});

    MultiPoly r1 = resultant::sylvester_resultant(f1, L, "v");
    MultiPoly r2 = resultant::sylvester_resultant(g, L, "v");
    if (r1.is_zero() || r2.is_zero()) throw std::runtime_error("elimination: intermediate resultant vanishes identically");
    if (!r1.involves("u") && !r2.involves("u")) throw std::runtime_error("elimination: no variable left to eliminate");
    MultiPoly r = resultant::sylvester_resultant(r1, r2, "u");
    if (r.is_zero()) throw std::runtime_error("elimination: resultant vanishes identically");
    if (r.is_constant()) return MultiPoly(Scalar(1), {"x", "y"});
    MultiPoly S = algebra::squarefree_part(r).with_variables({"x", "y"});

    std::vector<MultiPoly> candidates{leading_in(f1, "v"), leading_in(g, "v"), leading_in(L, "v"),
                                      leading_in(r1, "u"), leading_in(r2, "u"), x, y};
    std::mt19937 rng(2024);
    for (const auto& cand : candidates) {
        if (cand.is_zero() || cand.is_constant() || cand.involves("u") || cand.involves("v")) continue;
        MultiPoly h = poly_gcd(S, cand.trimmed());
        if (h.is_constant()) continue;
        if (sample_membership(B, C, h, rng) == Verdict::OffCurve) S = *poly_exact_div(S, h);
    }
    return S.monic().with_variables({"x", "y"});
}

std::pair<int, Rational> degree_genus_predict(int d, const Rational& g, int delta, const Rational& gamma) {
    if (d < 1 || delta < 1) throw std::invalid_argument("degrees must be positive");
    Rational expected((d - 1) * (d - 2), 2);
    expected.canonicalize();
    if (g != expected) throw std::invalid_argument("genus of B must be (d-1)(d-2)/2 for a smooth curve of degree d");
    Rational genus = Rational(d) * gamma + Rational(delta) * g + Rational((d - 1) * (delta - 1));
    return {2 * d * delta, genus};
}

} // namespace conchoid::core
