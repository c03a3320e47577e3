#include "conchoid/algebra/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace conchoid::algebra {

UniPoly::UniPoly(std::vector<Scalar> coeffs, Field field) : c_(std::move(coeffs)), field_(field) {
    for (const auto& c : c_)
        if (!c.is_real()) field_ = Field::Qi;
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::with_field(Field f) const {
    UniPoly r(*this);
    bool real = std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
    r.field_ = real ? f : Field::Qi;
    return r;
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, const std::string& var) {
    for (const auto& v : p.support())
        if (v != var) throw std::invalid_argument("polynomial is not univariate in '" + var + "'");
    auto coeffs = p.coefficients_in(var);
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (const auto& k : coeffs) c.push_back(k.constant_value());
    return UniPoly(std::move(c), p.field());
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
    MultiPoly r({var}, field_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.add_term(Monomial{static_cast<int>(k)}, c_[k]);
    return r;
}

const Scalar& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Scalar UniPoly::evaluate(const Scalar& t) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UniPoly(std::move(d), field_);
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    Scalar inv = leading().inverse();
    std::vector<Scalar> d(c_);
    for (auto& v : d) v *= inv;
    return UniPoly(std::move(d), field_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
    return UniPoly(std::move(r), join(a.field_, b.field_));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] - b[k];
    return UniPoly(std::move(r), join(a.field_, b.field_));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, join(a.field_, b.field_));
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r), join(a.field_, b.field_));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Field f = join(field_, d.field_);
    if (degree() < d.degree()) return {UniPoly({}, f), *this};
    std::vector<Scalar> rem(c_);
    std::vector<Scalar> quo(c_.size() - d.c_.size() + 1);
    Scalar inv = d.leading().inverse();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        auto top = static_cast<std::size_t>(k + d.degree());
        Scalar q = rem[top] * inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * d.c_[j];
    }
    return {UniPoly(std::move(quo), f), UniPoly(std::move(rem), f)};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() < 1) return out;
    UniPoly fm = f.monic();
    UniPoly d = fm.derivative();
    UniPoly a = gcd(fm, d);
    UniPoly b = fm.divmod(a).first;
    UniPoly c = d.divmod(a).first;
    UniPoly e = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        UniPoly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, k);
        b = b.divmod(g).first;
        c = e.divmod(g).first;
        e = c - b.derivative();
        ++k;
    }
    return out;
}

} // namespace conchoid::algebra
