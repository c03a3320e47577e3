#pragma once

#include "conchoid/algebra/multipoly.hpp"

#include <utility>
#include <vector>

namespace conchoid::algebra {

/// Dense univariate polynomial over Q or Q(i); coefficient k multiplies t^k.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs, Field field = Field::Q);

    /// Reads a MultiPoly that involves at most the variable `var`.
    static UniPoly from_multipoly(const MultiPoly& p, const std::string& var);
    MultiPoly to_multipoly(const std::string& var) const;

    const std::vector<Scalar>& coefficients() const { return c_; }
    Field field() const { return field_; }
    UniPoly with_field(Field f) const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& leading() const;
    Scalar operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

    Scalar evaluate(const Scalar& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder over the field.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

private:
    void trim();
    std::vector<Scalar> c_;
    Field field_ = Field::Q;
};

/// Monic gcd over the field (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's squarefree decomposition: pairs (factor, multiplicity), factors monic and pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

} // namespace conchoid::algebra
