// Reducibility of the proper conchoid for a circular base.
//
// At the origin, write the candidate identity as G = c (H1^2 - kappa q H2^2)
// (even degree) or G = c (l1 H1^2 - kappa l2 H2^2) (odd degree). Restricting
// to l1 = 0 and l2 = 0 pins H1, H2 down modulo l1 or l2 up to sign, so what is
// left is a small system for the free part, solved exactly.

#include "internal.hpp"

#include "conchoid/classical/solver.hpp"

#include <stdexcept>

namespace conchoid::classical {

using algebra::Monomial;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

// Coefficients of E as a polynomial in x, y, z, keyed by exponent triple.
std::map<Monomial, MultiPoly> coefficients_over_xyz(const MultiPoly& E) {
    const auto& vars = E.variables();
    std::vector<std::string> rest;
    for (const auto& v : vars)
        if (v != "x" && v != "y" && v != "z") rest.push_back(v);
    std::map<Monomial, MultiPoly> out;
    for (const auto& [m, c] : E.terms()) {
        Monomial key(3, 0), other;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == "x") key[0] = m[i];
            else if (vars[i] == "y") key[1] = m[i];
            else if (vars[i] == "z") key[2] = m[i];
            else other.push_back(m[i]);
        }
        auto it = out.try_emplace(key, MultiPoly(rest, algebra::Field::Qi)).first;
        it->second.add_term(other, c);
    }
    return out;
}

std::vector<MultiPoly> coefficient_equations(const MultiPoly& E) {
    std::vector<MultiPoly> eqs;
    for (auto& [m, c] : coefficients_over_xyz(E)) eqs.push_back(c);
    return eqs;
}

MultiPoly on_line(const MultiPoly& G, const Scalar& sign) {
    // x = sign * i * y, the line x - sign*i*y = 0
    return G.substitute("x", MultiPoly::y() * (sign * Scalar::i())).with_field(Field::Qi);
}

Scalar at_origin_axis(const MultiPoly& s) { return s.evaluate({{"x", Scalar(0)}, {"y", Scalar(0)}, {"z", Scalar(1)}}); }

SplitResult make(SplitVerdict v, std::string detail) { return {v, std::nullopt, std::move(detail)}; }

SplitResult found(SplitWitness w, std::string detail) { return {SplitVerdict::Split, std::move(w), std::move(detail)}; }

SplitResult split_line(const MultiPoly& G) {
    MultiPoly g = G.with_variables(kXYZ);
    if (!g.coefficient({0, 0, 1}).is_zero()) return make(SplitVerdict::Irreducible, "line not through the center");
    Scalar g1 = g.coefficient({1, 0, 0}), g2 = g.coefficient({0, 1, 0});
    Scalar alpha = (g1 - Scalar::i() * g2) / Scalar(2), beta = (g1 + Scalar::i() * g2) / Scalar(2);
    SplitWitness w;
    w.parity = Parity::Odd;
    w.H2 = MultiPoly(Scalar(1));
    if (!alpha.is_zero()) {
        w.scale = alpha.inverse();
        w.H1 = MultiPoly(Scalar(1));
        w.kappa = -beta / alpha;
    } else {
        w.scale = beta.inverse();
        w.H1 = MultiPoly(Scalar(0));
        w.kappa = Scalar(-1);
    }
    return found(w, "line through the center");
}

SplitResult split_odd(const MultiPoly& G, int k) {
    MultiPoly y = MultiPoly::y();
    MultiPoly r2 = on_line(G, Scalar(1)), r1 = on_line(G, Scalar(-1));
    if (r1.is_zero() || r2.is_zero()) return make(SplitVerdict::Inconclusive, "curve contains a line through the center and a cyclic point");
    auto d2 = algebra::poly_exact_div(r2, y * (Scalar(2) * Scalar::i()));
    auto d1 = algebra::poly_exact_div(r1, y * (Scalar(-2) * Scalar::i()));
    if (!d1 || !d2) return make(SplitVerdict::Irreducible, "curve does not pass through the center");
    auto sq1 = algebra::square_root_up_to_scalar(*d2), sq2 = algebra::square_root_up_to_scalar(*d1);
    if (!sq1 || !sq2) return make(SplitVerdict::Irreducible, "restriction to a cyclic line through the center is not a square");
    Scalar scale = sq1->scale.inverse();
    Scalar kappa = -scale * sq2->scale;
    if (k >= 2) return make(SplitVerdict::Inconclusive, "necessary square conditions hold; degree above 4 is not decided");

    MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b");
    MultiPoly l1 = detail::l1_0(), l2 = detail::l2_0();
    MultiPoly H1 = sq1->root + a * l2, H2 = sq2->root + b * l1;
    MultiPoly E = l1 * H1 * H1 - kappa * l2 * H2 * H2 - G * scale;
    SolveResult sol = solve_polynomial_system(coefficient_equations(E), {"a", "b"}, Field::Qi);
    for (const auto& s : sol.solutions) {
        SplitWitness w;
        w.parity = Parity::Odd;
        w.H1 = (sq1->root + l2 * s.at("a")).with_variables(kXYZ);
        w.H2 = (sq2->root + l1 * s.at("b")).with_variables(kXYZ);
        w.scale = scale;
        w.kappa = kappa;
        if (w.verify(G)) return found(w, "odd degree identity solved");
    }
    if (!sol.exhaustive) return make(SplitVerdict::Inconclusive, "identity may need coefficients outside Q(i)");
    return make(SplitVerdict::Irreducible, "no solution of the odd degree identity");
}

SplitResult split_even(const MultiPoly& G, int k) {
    MultiPoly x = MultiPoly::x(), y = MultiPoly::y();
    MultiPoly r1 = on_line(G, Scalar(-1)), r2 = on_line(G, Scalar(1));
    if (r1.is_zero() || r2.is_zero()) return make(SplitVerdict::Inconclusive, "curve contains a line through the center and a cyclic point");
    auto sq1 = algebra::square_root_up_to_scalar(r1), sq2 = algebra::square_root_up_to_scalar(r2);
    if (!sq1 || !sq2) return make(SplitVerdict::Irreducible, "restriction to a cyclic line through the center is not a square");
    Scalar scale = sq1->scale.inverse();
    Scalar target = sq2->scale / sq1->scale;
    if (k >= 3) return make(SplitVerdict::Inconclusive, "necessary square conditions hold; degree above 4 is not decided");

    // H1 = beta * s2 on l2; both restrictions meet at the center [0:0:1].
    Scalar a1 = at_origin_axis(sq1->root), a2 = at_origin_axis(sq2->root);
    std::vector<Scalar> betas;
    if (!a2.is_zero()) {
        Scalar beta = a1 / a2;
        if (beta * beta != target) return make(SplitVerdict::Irreducible, "restrictions to l1 and l2 are incompatible");
        betas.push_back(beta);
    } else if (!a1.is_zero()) {
        return make(SplitVerdict::Irreducible, "restrictions to l1 and l2 are incompatible");
    } else {
        auto beta = algebra::scalar_sqrt(target, Field::Qi);
        if (!beta) return make(SplitVerdict::Inconclusive, "compatibility constant is not a square in Q(i)");
        betas = {*beta, -*beta};
    }

    const MultiPoly q = detail::q0();
    bool exhaustive = true;
    for (const auto& beta : betas) {
        MultiPoly u = sq1->root, v = sq2->root * beta;
        // H1 = P + x Q modulo q, from u = P - i y Q and v = P + i y Q.
        MultiPoly P = (u + v) * Scalar(Rational(1, 2));
        auto Q = algebra::poly_exact_div((v - u) * (Scalar(2) * Scalar::i()).inverse(), y);
        if (!Q) continue;
        MultiPoly H10 = (P + x * *Q).with_variables(kXYZ);
        auto W0 = algebra::poly_exact_div(H10 * H10 - G * scale, q);
        if (!W0) continue;
        if (k == 1) {
            if (W0->is_zero()) continue;
            SplitWitness w{Parity::Even, {}, H10, MultiPoly(Scalar(1)), scale, W0->constant_value()};
            if (w.verify(G)) return found(w, "even degree identity lifted");
            continue;
        }
        // k = 2: H1 = H10 + c q and W(c) = kappa H2^2 must have rank one.
        MultiPoly c = MultiPoly::variable("c");
        MultiPoly W = *W0 + c * H10 * Scalar(2) + c * c * q;
        auto coeffs = coefficients_over_xyz(W);
        MultiPoly M[3][3];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Monomial m(3, 0);
                m[static_cast<std::size_t>(i)] += 1;
                m[static_cast<std::size_t>(j)] += 1;
                auto it = coeffs.find(m);
                MultiPoly e = it == coeffs.end() ? MultiPoly(Scalar(0)) : it->second;
                M[i][j] = i == j ? e : e * Scalar(Rational(1, 2));
            }
        }
        std::vector<MultiPoly> minors;
        for (int i1 = 0; i1 < 3; ++i1)
            for (int i2 = i1 + 1; i2 < 3; ++i2)
                for (int j1 = 0; j1 < 3; ++j1)
                    for (int j2 = j1 + 1; j2 < 3; ++j2) minors.push_back(M[i1][j1] * M[i2][j2] - M[i1][j2] * M[i2][j1]);
        SolveResult sol = solve_polynomial_system(minors, {"c"}, Field::Qi);
        exhaustive = exhaustive && sol.exhaustive;
        const MultiPoly xyz[3] = {x, y, MultiPoly::z()};
        for (const auto& s : sol.solutions) {
            Scalar cv = s.at("c");
            Scalar Mc[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) Mc[i][j] = M[i][j].evaluate({{"c", cv}});
            int piv = -1;
            for (int j = 0; j < 3 && piv < 0; ++j)
                if (!Mc[j][j].is_zero()) piv = j;
            if (piv < 0) continue;
            MultiPoly H2(Scalar(0));
            for (int i = 0; i < 3; ++i) H2 += xyz[i] * Mc[i][piv];
            SplitWitness w{Parity::Even, {}, (H10 + q * cv).with_variables(kXYZ), H2.with_variables(kXYZ), scale, Mc[piv][piv].inverse()};
            if (w.verify(G)) return found(w, "even degree identity lifted");
        }
    }
    if (!exhaustive) return make(SplitVerdict::Inconclusive, "identity may need coefficients outside Q(i)");
    return make(SplitVerdict::Irreducible, "no lift of the restrictions satisfies the identity");
}

MultiPoly norm_over_s(const MultiPoly& E, const MultiPoly& q) {
    auto c = E.coefficients_in("s");
    MultiPoly A(Scalar(0)), B(Scalar(0));
    MultiPoly qk(Scalar(1));
    for (std::size_t j = 0; j < c.size(); j += 2) {
        A += c[j] * qk;
        if (j + 1 < c.size()) B += c[j + 1] * qk;
        qk *= q;
    }
    return A * A - q * B * B;
}

} // namespace

namespace detail {

SplitResult split_at_origin(const MultiPoly& G) {
    int delta = G.total_degree();
    if (delta < 1) throw std::invalid_argument("split_test: curve of degree 0");
    if (algebra::squarefree_part(G).total_degree() < delta) throw std::invalid_argument("split_test: curve is not reduced");
    if (delta == 1) return split_line(G);
    return delta % 2 == 0 ? split_even(G, delta / 2) : split_odd(G, delta / 2);
}

} // namespace detail

SplitResult split_test(const PlaneCurve& C, const Point2& A) {
    SplitResult r = detail::split_at_origin(recenter(C.equation(), A).with_variables(kXYZ));
    if (r.witness) {
        Point2 back = detail::opposite(A);
        r.witness->center = A;
        r.witness->H1 = recenter(r.witness->H1, back).with_variables(kXYZ);
        r.witness->H2 = recenter(r.witness->H2, back).with_variables(kXYZ);
        if (!r.witness->verify(C.equation())) throw std::logic_error("split witness failed to transport back");
    }
    return r;
}

std::optional<std::pair<MultiPoly, MultiPoly>> split_components(const PlaneCurve& C, const SplitWitness& w, const Rational& r2) {
    auto r = detail::exact_radius(r2);
    auto k = algebra::scalar_sqrt(w.kappa, Field::Qi);
    if (!r || !k) return std::nullopt;
    MultiPoly G = recenter(C.equation(), w.center);
    MultiPoly H1 = recenter(w.H1, w.center), H2 = recenter(w.H2, w.center);
    MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z(), s = MultiPoly::variable("s");
    MultiPoly t = s - z * Scalar(*r);
    // The point of C that the conchoid point (x, y, z) comes from, with s^2 = q.
    std::map<std::string, MultiPoly> P{{"x", x * t}, {"y", y * t}, {"z", z * s}};
    MultiPoly E = w.parity == Parity::Even ? H1.substitute(P) + t * s * H2.substitute(P) * *k
                                           : detail::l1_0() * H1.substitute(P) + s * H2.substitute(P) * *k;
    MultiPoly N = norm_over_s(E, detail::q0());
    MultiPoly res = detail::proper_at_origin(r2, G);
    MultiPoly first = algebra::poly_gcd(res, N.with_variables(kXYZ));
    if (first.is_constant() || first.total_degree() >= res.total_degree()) return std::nullopt;
    MultiPoly second = *algebra::poly_exact_div(res, first);
    Point2 back = detail::opposite(w.center);
    return std::make_pair(recenter(first, back).monic().with_variables(kXYZ), recenter(second, back).monic().with_variables(kXYZ));
}

} // namespace conchoid::classical
