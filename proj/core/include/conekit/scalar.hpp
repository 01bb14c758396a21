#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace conekit {

/// Raised when a computation would exceed a configured resource cap
/// (basis size, S-pair budget, coefficient bit-size). Callers turn this
/// into an INCONCLUSIVE verdict; it never means "false".
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Residue modulo a prime below 2^31.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
};

class Scalar;

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rationals, prime };

  /// The field of rational numbers.
  static Field rationals() { return Field(Kind::rationals, 0); }
  /// F_p; throws FieldError unless p is a prime in [2, 2^31).
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Prime-field residues carry their modulus so that
/// mixing elements of different fields is detected rather than silently
/// producing garbage.
class Scalar {
 public:
  Scalar() : rep_(Residue{}) {}
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }

  /// Meaningful only for prime-field elements.
  std::uint32_t residue() const { return std::get<Residue>(rep_).value; }
  std::uint32_t modulus() const { return std::get<Residue>(rep_).modulus; }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

  Field field() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  /// Bits in numerator plus denominator (rationals); 0 for residues.
  std::size_t bit_size() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: residue as a plain integer, rationals as "a" or "a/b".
  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Deterministic per-stream sampler. Prime fields draw uniformly from
/// [0, p); rationals draw numerator and denominator with |value| <= 2^16.
class ScalarSampler {
 public:
  ScalarSampler(Field field, std::uint64_t seed) : field_(field), rng_(seed) {}

  Scalar next();
  Scalar next_nonzero();
  /// Small integer in [lo, hi], used where bounded coefficients keep
  /// rational computations tame.
  long next_int(long lo, long hi);

  const Field& field() const { return field_; }
  std::mt19937_64& engine() { return rng_; }

 private:
  Field field_;
  std::mt19937_64 rng_;
};

}  // namespace conekit
