// Roots of univariate polynomials inside Q or Q(i).
//
// Each squarefree factor is scaled to integer (Gaussian integer) coefficients.
// Over Q, when both end coefficients factor cheaply, the rational root theorem
// candidates are enumerated directly. Otherwise all complex roots are
// approximated with Aberth iteration and each approximation z yields the
// single candidate round(lc*z)/lc, since lc*root is a (Gaussian) integer for
// any root in the field. Every candidate is checked exactly.

#include "conchoid/algebra/operations.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace conchoid::algebra {

namespace {

struct GaussInt {
    Integer re, im;
};

// Multiplies by the lcm of every denominator.
std::vector<GaussInt> integerize(const UniPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::vector<GaussInt> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        Rational re = c.re() * l, im = c.im() * l;
        out.push_back({re.get_num(), im.get_num()});
    }
    return out;
}

// Prime factorization by trial division; nullopt when the cofactor is composite.
std::optional<std::vector<std::pair<Integer, int>>> cheap_factor(Integer n) {
    std::vector<std::pair<Integer, int>> f;
    n = abs(n);
    for (unsigned long p = 2; p <= 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        f.emplace_back(Integer(p), e);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
        f.emplace_back(n, 1);
    }
    return f;
}

std::vector<Integer> divisors(const std::vector<std::pair<Integer, int>>& f) {
    std::vector<Integer> d{Integer(1)};
    for (const auto& [p, e] : f) {
        std::size_t n = d.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < n; ++j) d.push_back(d[j] * pk);
        }
    }
    return d;
}

std::optional<std::vector<Scalar>> enumerate_roots(const UniPoly& p, const std::vector<GaussInt>& zc) {
    constexpr double kMaxCandidates = 50000;
    auto fl = cheap_factor(zc.back().re);
    if (!fl) return std::nullopt;
    auto ft = cheap_factor(zc.front().re);
    if (!ft) return std::nullopt;
    double count = 1;
    for (const auto& [q, e] : *fl) count *= e + 1;
    for (const auto& [q, e] : *ft) count *= e + 1;
    if (count > kMaxCandidates) return std::nullopt;
    std::vector<Scalar> roots;
    std::vector<Rational> seen;
    for (const auto& num : divisors(*ft)) {
        for (const auto& den : divisors(*fl)) {
            for (int s : {1, -1}) {
                Rational r(num * s, den);
                r.canonicalize();
                if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                seen.push_back(r);
                if (p.evaluate(Scalar(r)).is_zero()) roots.emplace_back(r);
            }
        }
    }
    return roots;
}

struct Complex {
    mpf_class re, im;
};

Complex mul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Complex add(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex sub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex div(const Complex& a, const Complex& b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
mpf_class abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }

std::mutex& precision_mutex() {
    static std::mutex m;
    return m;
}

Integer round_to_integer(const mpf_class& v) {
    mpf_class h = v + mpf_class(0.5, v.get_prec());
    mpf_class f = floor(h);
    return Integer(f);
}

std::vector<Scalar> aberth_roots(const UniPoly& p, const std::vector<GaussInt>& zc, Field field) {
    std::size_t bits = 0;
    for (const auto& c : zc) bits = std::max({bits, mpz_sizeinbase(c.re.get_mpz_t(), 2), mpz_sizeinbase(c.im.get_mpz_t(), 2)});
    const int n = p.degree();
    const mp_bitcnt_t prec = 4 * bits + 16 * static_cast<mp_bitcnt_t>(n) + 128;

    std::lock_guard<std::mutex> lock(precision_mutex());
    const mp_bitcnt_t saved = mpf_get_default_prec();
    mpf_set_default_prec(prec);

    std::vector<Complex> a;
    a.reserve(zc.size());
    for (const auto& c : zc) a.push_back({mpf_class(c.re, prec), mpf_class(c.im, prec)});
    std::vector<Complex> da;
    for (int k = 1; k <= n; ++k) {
        const auto& c = a[static_cast<std::size_t>(k)];
        da.push_back({c.re * k, c.im * k});
    }
    auto horner = [](const std::vector<Complex>& co, const Complex& z) {
        Complex acc{mpf_class(0), mpf_class(0)};
        for (auto it = co.rbegin(); it != co.rend(); ++it) acc = add(mul(acc, z), *it);
        return acc;
    };

    // Cauchy bound for the starting circle.
    double lead = std::sqrt(abs2(a.back()).get_d());
    double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::sqrt(abs2(a[static_cast<std::size_t>(k)]).get_d()) / lead);
    radius = std::min(radius + 1.0, 1e300);

    std::vector<Complex> z;
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.4;
        z.push_back({mpf_class(radius * std::cos(ang)), mpf_class(radius * std::sin(ang))});
    }
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec - 24);
    mpf_class eps2 = eps * eps;
    const int max_iter = 200 + 40 * n;
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int k = 0; k < n; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            Complex pv = horner(a, zk);
            if (abs2(pv) == 0) continue;
            Complex w = div(pv, horner(da, zk));
            Complex s{mpf_class(0), mpf_class(0)};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex diff = sub(zk, z[static_cast<std::size_t>(j)]);
                if (abs2(diff) == 0) diff.re += eps;
                s = add(s, div(Complex{mpf_class(1), mpf_class(0)}, diff));
            }
            Complex denom = sub(Complex{mpf_class(1), mpf_class(0)}, mul(w, s));
            Complex step = abs2(denom) == 0 ? w : div(w, denom);
            zk = sub(zk, step);
            if (abs2(step) > eps2 * (1 + abs2(zk))) done = false;
        }
        if (done) break;
    }

    Scalar lc(Rational(zc.back().re), Rational(zc.back().im));
    // lc * root is a Gaussian integer; with |lc|^2 in place of lc this also holds
    // and keeps the rounding purely real: conj(lc) * lc * root.
    Scalar scale = field == Field::Q ? lc : Scalar(lc.norm());
    mpf_class sre(scale.re(), prec);
    std::vector<Scalar> roots;
    for (const auto& zk : z) {
        Rational re(round_to_integer(zk.re * sre), scale.re().get_num());
        re.canonicalize();
        Scalar cand(re);
        if (field == Field::Qi) {
            Rational im(round_to_integer(zk.im * sre), scale.re().get_num());
            im.canonicalize();
            cand = Scalar(re, im);
        }
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (p.evaluate(cand).is_zero()) roots.push_back(cand);
    }
    mpf_set_default_prec(saved);
    return roots;
}

std::vector<Scalar> roots_of_squarefree(UniPoly p, Field field) {
    std::vector<Scalar> out;
    if (p.degree() < 1) return out;
    if (p[0].is_zero()) {
        out.emplace_back(0);
        p = p.divmod(UniPoly({Scalar(0), Scalar(1)}, p.field())).first;
        if (p.degree() < 1) return out;
    }
    if (p.degree() == 1) {
        Scalar r = -p[0] / p[1];
        if (field == Field::Qi || r.is_real()) out.push_back(r);
        return out;
    }
    if (p.degree() == 2) {
        Scalar disc = p[1] * p[1] - Scalar(4) * p[0] * p[2];
        if (auto s = scalar_sqrt(disc, field)) {
            out.push_back((-p[1] + *s) / (Scalar(2) * p[2]));
            out.push_back((-p[1] - *s) / (Scalar(2) * p[2]));
        }
        return out;
    }
    auto zc = integerize(p);
    bool real = std::all_of(zc.begin(), zc.end(), [](const GaussInt& g) { return sgn(g.im) == 0; });
    if (field == Field::Q && real) {
        if (auto r = enumerate_roots(p, zc)) {
            out.insert(out.end(), r->begin(), r->end());
            return out;
        }
    }
    auto r = aberth_roots(p, zc, field);
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

} // namespace

std::vector<Root> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    const Field field = f.field();
    std::vector<Root> out;
    for (const auto& [piece, mult] : squarefree_decomposition(f)) {
        for (auto& r : roots_of_squarefree(piece.with_field(field), field)) out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.re() != b.value.re()) return a.value.re() < b.value.re();
        return a.value.im() < b.value.im();
    });
    return out;
}

} // namespace conchoid::algebra
