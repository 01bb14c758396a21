#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conekit/ambient.hpp"
#include "conekit/scalar.hpp"

namespace conekit {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with inline storage. Exponents are capped at 255; an
/// overflow raises ResourceError since desk-scale inputs never get there.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Bitmask of variables with nonzero exponent; a cheap divisibility filter.
  std::uint32_t support() const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; caller guarantees divides().
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const { return (support() & o.support()) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
  unsigned degree_ = 0;
};

/// Term order. Block elimination ranks any monomial containing an
/// eliminated variable above every monomial free of them (degree in the
/// eliminated variables first, graded reverse lex to break ties).
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination };

  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}, {}); }
  static MonomialOrder eliminating(const AmbientSpace& ambient, const std::vector<std::string>& blocks);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& eliminated_blocks() const { return blocks_; }
  const std::bitset<kMaxVars>& eliminated_vars() const { return mask_; }

  /// -1, 0, 1 for a < b, a == b, a > b over the first nvars variables.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  /// "lex", "grevlex" or "elim:b1,b2".
  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_;
  }

 private:
  MonomialOrder(Kind k, std::vector<std::string> blocks, std::bitset<kMaxVars> mask)
      : kind_(k), blocks_(std::move(blocks)), mask_(mask) {}

  Kind kind_ = Kind::grevlex;
  std::vector<std::string> blocks_;
  std::bitset<kMaxVars> mask_;
};

/// Polynomial ring: ambient variables, a term order and a coefficient field.
class Ring {
 public:
  Ring(AmbientSpace ambient, Field field, MonomialOrder order = MonomialOrder::grevlex());

  const AmbientSpace& ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t num_vars() const { return ambient_.num_vars(); }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, ambient_.num_vars()); }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  AmbientSpace ambient_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(AmbientSpace ambient, Field field, MonomialOrder order = MonomialOrder::grevlex());

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial with terms sorted descending under the ring order.
/// Value type; every operation returns a canonical result.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Sorts and merges arbitrary terms; zero coefficients are dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusted variant: terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  /// this - c * m * g, the reduction step.
  Polynomial minus_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;

  unsigned total_degree() const;
  /// Per-block degree vector if every term agrees on it; nullopt otherwise.
  std::optional<std::vector<int>> multidegree() const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;
  /// Largest k with var^k dividing every term.
  unsigned common_power(std::size_t var) const;
  Polynomial divide_by_power(std::size_t var, unsigned k) const;
  unsigned degree_in(std::size_t var) const;
  std::size_t max_coefficient_bits() const;

  /// Replaces each variable in the map by the given polynomial (same ring).
  Polynomial substitute(const std::map<std::size_t, Polynomial>& assignment) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial swap_variables(std::size_t i, std::size_t j) const;
  /// Coefficient of var^k, as a polynomial free of var.
  Polynomial coefficient_of(std::size_t var, unsigned k) const;

  /// Same polynomial in another ring whose ambient contains every variable
  /// used here (matched by name). Throws if a used variable is missing.
  Polynomial to_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_ring(const Polynomial& o) const;
  void sort_and_merge();

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

/// Fixed multiplicative order on monomials used to canonicalize text
/// output independent of the active term order.
std::string canonical_string(const Polynomial& p);

/// Taylor coefficient of (t - 1)^r where `t` is an affine variable of p's
/// ring: the exact g_r with p = sum_r (t - 1)^r g_r.
Polynomial taylor_shift_coefficient(const Polynomial& p, std::size_t t, unsigned r);

/// p with its i-th variable replaced by images[i]; the result lives in
/// the images' ring. Fields must agree.
Polynomial compose(const Polynomial& p, const RingPtr& target, const std::vector<Polynomial>& images);

}  // namespace conekit
