#include "conchoid/algebra/parser.hpp"

#include <cctype>

namespace conchoid::algebra {

namespace {

class Parser {
public:
    Parser(std::string_view s, Field field) : s_(s), field_(field) {}

    MultiPoly run() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        MultiPoly p = expr();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p.with_field(field_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            Integer e(digits());
            if (!e.fits_uint_p() || e > 1000) fail("exponent too large");
            skip();
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Rational v(num);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                Integer den(digits());
                if (den == 0) fail("zero denominator");
                v = Rational(num, den);
                v.canonicalize();
            }
            skip();
            return MultiPoly(Scalar(v), {}, field_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "i") {
                if (field_ != Field::Qi) {
                    pos_ = start;
                    fail("imaginary unit requires field Qi");
                }
                skip();
                return MultiPoly(Scalar::i(), {}, Field::Qi);
            }
            if (name != "x" && name != "y" && name != "z" && name != "t") {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            skip();
            return MultiPoly::variable(name, field_);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    Field field_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_polynomial(std::string_view text, Field field) { return Parser(text, field).run(); }

Scalar parse_scalar(std::string_view text, Field field) {
    MultiPoly p = parse_polynomial(text, field);
    if (!p.is_constant()) throw ParseError("expected a constant", 0);
    return p.constant_value();
}

} // namespace conchoid::algebra
