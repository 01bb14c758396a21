#pragma once

#include <stdexcept>
#include <string>

#include "conekit/polynomial.hpp"

namespace conekit {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses the text grammar: variables named as in the ring's ambient
/// (t0, z1, x3, ...), integer or a/b coefficients, + - * ^ and
/// parentheses. Multiplication is always explicit.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Prints terms in the ring's order. Prime-field coefficients use the
/// symmetric representative in (-p/2, p/2]. parse(print(p)) == p.
std::string print_polynomial(const Polynomial& p);

}  // namespace conekit
