#include "conchoid/algebra/operations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conchoid::algebra {

namespace {

bool divides_monomial(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

MultiPoly one_like(const MultiPoly& p) { return MultiPoly(Scalar(1), p.variables(), p.field()); }

MultiPoly exact(const MultiPoly& f, const MultiPoly& g) {
    auto q = poly_exact_div(f, g);
    if (!q) throw std::logic_error("expected exact division failed");
    return *q;
}

using Coeffs = std::vector<MultiPoly>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

// lc(B)^(deg A - deg B + 1) * A mod B, coefficients in a polynomial ring.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
    const MultiPoly& lb = b.back();
    int delta = deg(a) - deg(b) + 1;
    while (deg(a) >= deg(b) && !a.empty()) {
        int shift = deg(a) - deg(b);
        MultiPoly la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= deg(b); ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
        trim(a);
        --delta;
    }
    if (delta > 0) {
        MultiPoly f = lb.pow(static_cast<unsigned>(delta));
        for (auto& c : a) c *= f;
    }
    return a;
}

MultiPoly gcd_recursive(const MultiPoly& f, const MultiPoly& g);

MultiPoly content_of(const Coeffs& c) {
    MultiPoly acc;
    bool first = true;
    for (const auto& k : c) {
        if (k.is_zero()) continue;
        if (first) {
            acc = k;
            first = false;
        } else {
            acc = gcd_recursive(acc, k);
        }
        if (acc.is_constant()) return MultiPoly(Scalar(1), acc.variables(), acc.field());
    }
    return acc;
}

Coeffs primitive(const Coeffs& c, const MultiPoly& content) {
    Coeffs out;
    out.reserve(c.size());
    for (const auto& k : c) out.push_back(exact(k, content));
    return out;
}

Coeffs subresultant_gcd(Coeffs a, Coeffs b) {
    if (deg(a) < deg(b)) std::swap(a, b);
    MultiPoly g = one_like(a.back()), h = one_like(a.back());
    while (true) {
        int d = deg(a) - deg(b);
        Coeffs r = pseudo_remainder(a, b);
        if (r.empty()) return b;
        if (deg(r) == 0) return {one_like(a.back())};
        MultiPoly denom = g * h.pow(static_cast<unsigned>(d));
        for (auto& k : r) k = exact(k, denom);
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (d > 0) h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
}

MultiPoly gcd_recursive(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto vars = merge_variables(f.support(), g.support());
    if (vars.empty()) return MultiPoly(Scalar(1), {}, join(f.field(), g.field()));
    if (vars.size() == 1) {
        UniPoly uf = UniPoly::from_multipoly(f, vars[0]), ug = UniPoly::from_multipoly(g, vars[0]);
        return gcd(uf, ug).to_multipoly(vars[0]);
    }
    const std::string v = vars.back();
    if (!f.involves(v)) return gcd_recursive(f, content_of(g.coefficients_in(v)));
    if (!g.involves(v)) return gcd_recursive(content_of(f.coefficients_in(v)), g);
    Coeffs cf = f.coefficients_in(v), cg = g.coefficients_in(v);
    MultiPoly contf = content_of(cf), contg = content_of(cg);
    MultiPoly c = gcd_recursive(contf, contg);
    Coeffs h = subresultant_gcd(primitive(cf, contf), primitive(cg, contg));
    h = primitive(h, content_of(h));
    return c * MultiPoly::from_coefficients(h, v);
}

} // namespace

std::optional<MultiPoly> poly_exact_div(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    auto vars = merge_variables(f.variables(), g.variables());
    MultiPoly r = f.with_variables(vars);
    MultiPoly d = g.with_variables(vars);
    Field field = join(f.field(), g.field());
    MultiPoly q(vars, field);
    const Monomial& ld = d.leading_monomial();
    Scalar inv = d.leading_coefficient().inverse();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!divides_monomial(ld, lr)) return std::nullopt;
        Monomial m(lr.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = lr[i] - ld[i];
        Scalar c = r.leading_coefficient() * inv;
        MultiPoly t(vars, field);
        t.add_term(m, c);
        q.add_term(m, c);
        r -= t * d;
    }
    return q.with_field(field);
}

MultiPoly homogenize(const MultiPoly& f, const std::string& var, int degree) {
    auto vars = merge_variables(f.variables(), {var});
    MultiPoly g = f.with_variables(vars);
    auto idx = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), var) - vars.begin());
    MultiPoly out(vars, f.field());
    for (const auto& [m, c] : g.terms()) {
        Monomial nm = m;
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (d > degree) throw std::invalid_argument("homogenize: term degree exceeds target");
        nm[idx] += degree - d;
        out.add_term(nm, c);
    }
    return out;
}

int valuation(const MultiPoly& f, const std::string& var) {
    if (f.is_zero()) return 0;
    auto c = f.coefficients_in(var);
    int k = 0;
    while (k < static_cast<int>(c.size()) && c[static_cast<std::size_t>(k)].is_zero()) ++k;
    return k;
}

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    auto vars = merge_variables(f.support(), g.support());
    if (vars.size() >= 2 && f.is_homogeneous() && g.is_homogeneous()) {
        // Dehomogenize in the last variable, recombine with the common power of it.
        const std::string v = vars.back();
        int k = std::min(valuation(f, v), valuation(g, v));
        MultiPoly one(Scalar(1));
        MultiPoly h = gcd_recursive(f.substitute(v, one), g.substitute(v, one));
        MultiPoly hh = homogenize(h, v, h.total_degree());
        return (hh * MultiPoly::variable(v).pow(static_cast<unsigned>(k))).monic();
    }
    return gcd_recursive(f, g).monic();
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) return f;
    MultiPoly g = f;
    for (const auto& v : f.support()) g = poly_gcd(g, f.derivative(v));
    return exact(f, g).monic();
}

std::optional<MultiPoly> formal_square_root(const MultiPoly& f) {
    if (f.is_zero()) return f;
    Field field = f.field();
    const auto& vars = f.variables();
    const Monomial& lm = f.leading_monomial();
    Monomial half(lm.size());
    for (std::size_t i = 0; i < lm.size(); ++i) {
        if (lm[i] % 2) return std::nullopt;
        half[i] = lm[i] / 2;
    }
    auto lc = scalar_sqrt(f.leading_coefficient(), field);
    if (!lc) return std::nullopt;
    MultiPoly g(vars, field);
    g.add_term(half, *lc);
    MultiPoly r = f - g * g;
    GrlexGreater greater;
    Monomial last = half;
    Scalar two_lc = *lc * Scalar(2);
    std::size_t guard = f.term_count() * f.term_count() + 16;
    while (!r.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const Monomial& lr = r.leading_monomial();
        if (!divides_monomial(half, lr)) return std::nullopt;
        Monomial m(lr.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = lr[i] - half[i];
        if (!greater(last, m)) return std::nullopt;
        MultiPoly t(vars, field);
        t.add_term(m, r.leading_coefficient() / two_lc);
        r -= t * (g * Scalar(2) + t);
        g += t;
        last = m;
    }
    if (!g.leading_coefficient().is_canonically_positive()) g = -g;
    return g;
}

std::optional<ScaledSquare> square_root_up_to_scalar(const MultiPoly& f) {
    if (f.is_zero()) return std::nullopt;
    auto root = formal_square_root(f.monic().with_field(Field::Qi));
    if (!root) return std::nullopt;
    return ScaledSquare{f.leading_coefficient(), root->monic()};
}

std::vector<BinaryForm> homogeneous_decompose(const MultiPoly& F) {
    if (F.is_zero()) throw std::invalid_argument("homogeneous_decompose: zero polynomial");
    if (!F.is_homogeneous()) throw std::invalid_argument("homogeneous_decompose: polynomial is not homogeneous");
    for (const auto& v : F.support())
        if (v != "x" && v != "y" && v != "z")
            throw std::invalid_argument("homogeneous_decompose: unexpected variable '" + v + "'");
    int d = F.total_degree();
    MultiPoly G = F.with_variables({"x", "y", "z"});
    auto byz = G.coefficients_in("z");
    std::vector<BinaryForm> out;
    out.reserve(static_cast<std::size_t>(d + 1));
    for (int h = d; h >= 0; --h) {
        auto k = static_cast<std::size_t>(d - h);
        out.push_back(k < byz.size() ? byz[k].with_variables({"x", "y"}) : MultiPoly({"x", "y"}, F.field()));
    }
    return out;
}

std::vector<std::pair<BinaryForm, int>> factor_binary_form(const BinaryForm& h, Field field) {
    std::vector<std::pair<BinaryForm, int>> out;
    if (h.is_zero() || h.total_degree() <= 0) return out;
    if (!h.is_homogeneous()) throw std::invalid_argument("factor_binary_form: not homogeneous");
    BinaryForm f = h.with_variables({"x", "y"});
    int ky = valuation(f, "y");
    if (ky > 0) out.emplace_back(MultiPoly::y(), ky);
    MultiPoly rest = exact(f, MultiPoly::y().pow(static_cast<unsigned>(ky)));
    UniPoly u = UniPoly::from_multipoly(rest.substitute("y", MultiPoly(Scalar(1))), "x").with_field(field);
    for (auto& [piece, mult] : squarefree_decomposition(u)) {
        UniPoly left = piece.with_field(field);
        for (const auto& root : rational_roots(left)) {
            MultiPoly lin = MultiPoly::x() - MultiPoly::y() * root.value;
            out.emplace_back(lin, mult);
            left = left.divmod(UniPoly({-root.value, Scalar(1)}, field)).first;
        }
        if (left.degree() > 0) out.emplace_back(homogenize(left.to_multipoly("x"), "y", left.degree()).monic(), mult);
    }
    return out;
}

} // namespace conchoid::algebra
