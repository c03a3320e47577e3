#include "conchoid/algebra/scalar.hpp"

#include <stdexcept>

namespace conchoid::algebra {

std::string to_string(Field f) { return f == Field::Q ? "Q" : "Qi"; }

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_real()) return {Rational(1) / re_, Rational(0)};
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational result(1), base(*this);
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

bool GaussianRational::is_canonically_positive() const {
    int s = sgn(re_);
    if (s != 0) return s > 0;
    return sgn(im_) > 0;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (imag[0] == '-') return re_.get_str() + imag;
    return re_.get_str() + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.to_string(); }

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
    return Rational(n, d);
}

std::optional<Scalar> scalar_sqrt(const Scalar& v, Field field) {
    if (v.is_zero()) return Scalar(0);
    if (v.is_real()) {
        if (sgn(v.re()) > 0) {
            auto r = rational_sqrt(v.re());
            if (!r) return std::nullopt;
            return Scalar(*r);
        }
        if (field == Field::Q) return std::nullopt;
        auto r = rational_sqrt(-v.re());
        if (!r) return std::nullopt;
        return Scalar(Rational(0), *r);
    }
    if (field == Field::Q) return std::nullopt;
    // (c + d i)^2 = a + b i  =>  c^2 = (a + |v|)/2, d = b / (2c)
    auto modulus = rational_sqrt(v.norm());
    if (!modulus) return std::nullopt;
    auto c = rational_sqrt((v.re() + *modulus) / 2);
    if (!c || sgn(*c) == 0) return std::nullopt;
    Rational d = v.im() / (2 * *c);
    return Scalar(*c, d);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

} // namespace conchoid::algebra
