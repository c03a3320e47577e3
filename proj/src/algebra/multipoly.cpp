#include "conchoid/algebra/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conchoid::algebra {

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int variable_rank(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name == "t") return 3;
    return 100;
}

std::vector<std::string> canonical_variables(std::vector<std::string> names) {
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        int ra = variable_rank(a), rb = variable_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> all(a);
    all.insert(all.end(), b.begin(), b.end());
    return canonical_variables(std::move(all));
}

MultiPoly::MultiPoly(std::vector<std::string> vars, Field field)
    : vars_(canonical_variables(std::move(vars))), field_(field) {}

MultiPoly::MultiPoly(const Scalar& c, std::vector<std::string> vars, Field field)
    : vars_(canonical_variables(std::move(vars))), field_(field) {
    if (!c.is_zero()) {
        terms_.emplace(Monomial(vars_.size(), 0), c);
        if (!c.is_real()) field_ = Field::Qi;
    }
}

MultiPoly MultiPoly::variable(const std::string& name, Field field) {
    MultiPoly p({name}, field);
    p.terms_.emplace(Monomial{1}, Scalar(1));
    return p;
}

MultiPoly MultiPoly::with_field(Field f) const {
    MultiPoly r(*this);
    r.field_ = (coefficient_field() == Field::Qi) ? Field::Qi : f;
    return r;
}

Field MultiPoly::coefficient_field() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_real()) return Field::Qi;
    return Field::Q;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Scalar MultiPoly::constant_value() const {
    return coefficient(Monomial(vars_.size(), 0));
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.begin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::lowest_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::degree_in(const std::string& var) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    auto idx = static_cast<std::size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree() == lowest_degree();
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly r(vars_, field_);
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0) == degree) r.terms_.emplace(m, c);
    return r;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    Scalar inv = leading_coefficient().inverse();
    MultiPoly r(*this);
    r *= inv;
    r.field_ = field_;
    return r;
}

std::vector<std::string> MultiPoly::support() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; });
        if (used) out.push_back(vars_[i]);
    }
    return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
    auto target = canonical_variables(vars);
    if (target == vars_) return *this;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), vars_[i]);
        if (it == target.end()) {
            if (degree_in(vars_[i]) > 0)
                throw std::invalid_argument("variable '" + vars_[i] + "' missing from target variable list");
            where[i] = target.size();
        } else {
            where[i] = static_cast<std::size_t>(it - target.begin());
        }
    }
    MultiPoly r(target, field_);
    for (const auto& [m, c] : terms_) {
        Monomial nm(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (where[i] < target.size()) nm[where[i]] = m[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

MultiPoly MultiPoly::trimmed() const { return with_variables(support()); }

Scalar MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    if (!c.is_real()) field_ = Field::Qi;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    std::vector<std::string> rest;
    for (const auto& v : vars_)
        if (v != var) rest.push_back(v);
    if (it == vars_.end()) {
        if (terms_.empty()) return {};
        return {with_variables(rest)};
    }
    auto idx = static_cast<std::size_t>(it - vars_.begin());
    int deg = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(deg + 1, 0)), MultiPoly(rest, field_));
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        nm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != idx) nm.push_back(m[i]);
        out[static_cast<std::size_t>(m[idx])].terms_.emplace(std::move(nm), c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, const std::string& var) {
    std::vector<std::string> vars{var};
    Field f = Field::Q;
    for (const auto& c : coeffs) {
        vars = merge_variables(vars, c.vars_);
        f = join(f, c.field_);
    }
    MultiPoly r(vars, f);
    auto idx = static_cast<std::size_t>(std::find(r.vars_.begin(), r.vars_.end(), var) - r.vars_.begin());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        MultiPoly c = coeffs[k].with_variables(vars);
        for (auto& [m, v] : c.terms_) {
            Monomial nm = m;
            nm[idx] += static_cast<int>(k);
            r.terms_.emplace(std::move(nm), v);
        }
    }
    return r;
}

Scalar MultiPoly::evaluate(const std::map<std::string, Scalar>& point) const {
    std::vector<const Scalar*> vals(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it != point.end()) vals[i] = &it->second;
    }
    // Cache powers per variable.
    std::vector<std::vector<Scalar>> powers(vars_.size());
    Scalar sum(0);
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vals[i]) throw std::invalid_argument("no value for variable '" + vars_[i] + "'");
            auto& pw = powers[i];
            if (pw.empty()) pw.emplace_back(1);
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * *vals[i]);
            term *= pw[static_cast<std::size_t>(m[i])];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& subs) const {
    std::vector<std::string> kept;
    for (const auto& v : vars_)
        if (!subs.count(v)) kept.push_back(v);
    std::vector<std::string> vars = kept;
    Field f = field_;
    for (const auto& [name, value] : subs) {
        vars = merge_variables(vars, value.vars_);
        f = join(f, value.field_);
    }
    std::vector<const MultiPoly*> sub(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = subs.find(vars_[i]);
        if (it != subs.end()) sub[i] = &it->second;
    }
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    MultiPoly result(vars, f);
    for (const auto& [m, c] : terms_) {
        MultiPoly term(vars, f);
        Monomial base(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (sub[i] || m[i] == 0) continue;
            auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
            base[pos] = m[i];
        }
        term.terms_.emplace(base, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!sub[i] || m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(MultiPoly(Scalar(1), vars, f));
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * sub[i]->with_variables(vars));
            term *= pw[static_cast<std::size_t>(m[i])];
        }
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    MultiPoly r(vars_, field_);
    if (it == vars_.end()) return r;
    auto idx = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [m, c] : terms_) {
        if (m[idx] == 0) continue;
        Monomial nm = m;
        nm[idx] -= 1;
        r.terms_.emplace(std::move(nm), c * Scalar(m[idx]));
    }
    return r;
}

void MultiPoly::align_with(const MultiPoly& o) {
    if (vars_ != o.vars_) *this = with_variables(merge_variables(vars_, o.vars_));
    field_ = join(field_, o.field_);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    align_with(o);
    const MultiPoly& other = (o.vars_ == vars_) ? o : o.with_variables(vars_);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto vars = merge_variables(a.vars_, b.vars_);
    const MultiPoly& aa = (a.vars_ == vars) ? a : a.with_variables(vars);
    MultiPoly bb_storage;
    const MultiPoly* bb = &b;
    if (b.vars_ != vars) {
        bb_storage = b.with_variables(vars);
        bb = &bb_storage;
    }
    MultiPoly r(vars, join(a.field_, b.field_));
    Monomial m(vars.size());
    for (const auto& [ma, ca] : aa.terms_) {
        for (const auto& [mb, cb] : bb->terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = r.terms_.try_emplace(m, ca);
            if (inserted)
                it->second *= cb;
            else
                it->second += ca * cb;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (!c.is_real()) field_ = Field::Qi;
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(Scalar(1), vars_, field_), base(*this);
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = c.conj();
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merge_variables(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string term;
        if (mono.empty())
            term = c.to_string();
        else if (c.is_one())
            term = mono;
        else if (c == Scalar(-1))
            term = "-" + mono;
        else if (c.is_compound())
            term = "(" + c.to_string() + ")*" + mono;
        else
            term = c.to_string() + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

} // namespace conchoid::algebra
