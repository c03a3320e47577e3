#pragma once

// Exact scalars for the two coefficient fields we support: Q and Q(i).

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

namespace conchoid::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field of a computation. Qi is the Gaussian field Q(i).
enum class Field { Q, Qi };

inline Field join(Field a, Field b) { return (a == Field::Qi || b == Field::Qi) ? Field::Qi : Field::Q; }

std::string to_string(Field f);

/// An element re + im*i of Q(i). Rationals embed with im = 0.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}                       // NOLINT(google-explicit-constructor)
    GaussianRational(long v) : re_(v) {}                      // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& r) : re_(r) {}           // NOLINT(google-explicit-constructor)
    GaussianRational(const Integer& r) : re_(r) {}            // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Text in the shared polynomial grammar: "3", "-1/2", "i", "-2*i", "1/2+3*i".
    std::string to_string() const;
    /// True when the printed form needs parentheses as a product factor.
    bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

    /// Positive real part, or zero real part and positive imaginary part.
    bool is_canonically_positive() const;

    GaussianRational pow(unsigned e) const;

private:
    Rational re_{0};
    Rational im_{0};
};

using Scalar = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

/// Square root inside the given field, with the canonical sign convention
/// (positive real part, ties broken by positive imaginary part).
std::optional<Scalar> scalar_sqrt(const Scalar& v, Field field);

std::optional<Rational> rational_sqrt(const Rational& v);

Rational binomial(unsigned n, unsigned k);

} // namespace conchoid::algebra
