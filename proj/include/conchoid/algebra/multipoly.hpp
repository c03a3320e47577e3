#pragma once

// Sparse multivariate polynomials over Q or Q(i).
//
// Terms are keyed by exponent vectors aligned with an ordered variable list.
// Variable lists are kept in a canonical order (x, y, z, t, then the rest
// alphabetically), so that two polynomials over the same variables always
// agree on the term order. Terms are sorted graded-lexicographically with the
// leading term first.

#include "conchoid/algebra/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace conchoid::algebra {

using Monomial = std::vector<int>;

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Rank used to order variable names canonically.
int variable_rank(const std::string& name);
std::vector<std::string> canonical_variables(std::vector<std::string> names);
std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars, Field field = Field::Q);
    MultiPoly(const Scalar& c, std::vector<std::string> vars = {}, Field field = Field::Q);

    static MultiPoly variable(const std::string& name, Field field = Field::Q);
    static MultiPoly constant(const Scalar& c, Field field = Field::Q) { return MultiPoly(c, {}, field); }
    /// Convenience: x, y, z as a triple.
    static MultiPoly x() { return variable("x"); }
    static MultiPoly y() { return variable("y"); }
    static MultiPoly z() { return variable("z"); }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    Field field() const { return field_; }
    /// Re-tags the field (promotion to Qi, or demotion to Q when all coefficients are real).
    MultiPoly with_field(Field f) const;
    /// Q when every coefficient is real, Qi otherwise.
    Field coefficient_field() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const;            // -1 for zero
    int degree_in(const std::string& var) const;  // -1 for zero
    int lowest_degree() const;           // smallest total degree of a term, -1 for zero
    bool is_homogeneous() const;
    /// Homogeneous component of the given total degree.
    MultiPoly homogeneous_part(int degree) const;

    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    /// Divides by the leading coefficient (zero stays zero).
    MultiPoly monic() const;

    /// Variables that actually occur with positive exponent.
    std::vector<std::string> support() const;
    bool involves(const std::string& var) const { return degree_in(var) > 0; }

    /// Same polynomial expressed over a (super)set of variables.
    MultiPoly with_variables(const std::vector<std::string>& vars) const;
    /// Drops variables that do not occur.
    MultiPoly trimmed() const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    /// Coefficients in powers of var: result[k] multiplies var^k (var removed from the variable list).
    std::vector<MultiPoly> coefficients_in(const std::string& var) const;
    static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, const std::string& var);

    Scalar evaluate(const std::map<std::string, Scalar>& point) const;
    /// Simultaneous substitution var -> polynomial. Unlisted variables stay.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& subs) const;
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const { return substitute({{var, value}}); }
    MultiPoly derivative(const std::string& var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(unsigned e) const;
    MultiPoly conj() const;

    /// Equality of the represented polynomial, independent of variable lists and field tags.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Canonical text: graded-lex term order, no spaces, minus signs folded into coefficients.
    std::string to_string() const;

private:
    void align_with(const MultiPoly& o);

    std::vector<std::string> vars_;
    TermMap terms_;
    Field field_ = Field::Q;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Equal up to a nonzero scalar factor (both normalized by their leading coefficient).
bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b);

} // namespace conchoid::algebra
