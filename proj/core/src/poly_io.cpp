#include "conekit/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace conekit {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (accept('/')) den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
      return Polynomial::constant(ring_, ring_->field().from_ratio(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto v = ring_->ambient().find_var(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *v);
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

// Sign and magnitude text of a coefficient.
std::pair<bool, std::string> split_sign(const Scalar& c) {
  if (c.is_rational()) {
    const mpq_class& q = c.rational();
    if (sgn(q) < 0) return {true, mpq_class(-q).get_str()};
    return {false, q.get_str()};
  }
  std::uint32_t v = c.residue(), p = c.modulus();
  if (v > p / 2) return {true, std::to_string(p - v)};
  return {false, std::to_string(v)};
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) { return Parser(ring, text).parse(); }

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const AmbientSpace& amb = p.ring()->ambient();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    auto [negative, mag] = split_sign(t.coefficient);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != "1" || t.monomial.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < amb.num_vars(); ++i) {
      unsigned e = t.monomial[i];
      if (!e) continue;
      if (wrote) os << "*";
      os << amb.var_name(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const { return print_polynomial(*this); }

std::string canonical_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  if (p.ring()->order() == MonomialOrder::grevlex()) return print_polynomial(p);
  return print_polynomial(p.to_ring(p.ring()->with_order(MonomialOrder::grevlex())));
}

}  // namespace conekit
