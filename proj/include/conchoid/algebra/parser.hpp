#pragma once

#include "conchoid/algebra/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace conchoid::algebra {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar: variables x y z t, integer and p/q literals, i (Qi only),
/// + - * ^ with nonnegative integer exponents, parentheses. No implicit products.
MultiPoly parse_polynomial(std::string_view text, Field field = Field::Q);

/// A constant expression in the same grammar, e.g. "3/4" or "1-2*i".
Scalar parse_scalar(std::string_view text, Field field = Field::Q);

} // namespace conchoid::algebra
