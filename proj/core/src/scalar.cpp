#include "conekit/scalar.hpp"

#include <ostream>
#include <sstream>

namespace conekit {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void check_same(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) throw FieldError("operands belong to different prime fields");
}

[[noreturn]] void mixed() { throw FieldError("mixed rational and prime-field operands"); }

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime_number(p))
    throw FieldError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  const std::string prefix = "Fp:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(text.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      throw FieldError("bad field specification: " + text);
    }
    if (used + prefix.size() != text.size()) throw FieldError("bad field specification: " + text);
    return prime(p);
  }
  throw FieldError("bad field specification: " + text + " (expected Q or Fp:<p>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (kind_ == Kind::rationals) return Scalar(mpq_class(value));
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DivisionByZero();
  if (kind_ == Kind::rationals) return Scalar(mpq_class(num, den));
  mpz_class n = num % p_;
  mpz_class d = den % p_;
  if (n < 0) n += p_;
  if (d < 0) d += p_;
  Scalar a(Residue{static_cast<std::uint32_t>(n.get_ui()), p_});
  Scalar b(Residue{static_cast<std::uint32_t>(d.get_ui()), p_});
  return a / b;
}

std::string Field::to_string() const {
  if (kind_ == Kind::rationals) return "Q";
  return "Fp:" + std::to_string(p_);
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&rep_)) return Field(Field::Kind::prime, r->modulus);
  return Field::rationals();
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (auto a = std::get_if<Residue>(&rep_)) {
    auto b = std::get_if<Residue>(&o.rep_);
    if (!b) mixed();
    check_same(*a, *b);
    std::uint64_t s = std::uint64_t(a->value) + b->value;
    if (s >= a->modulus) s -= a->modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(s), a->modulus});
  }
  if (!o.is_rational()) mixed();
  return Scalar(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (auto a = std::get_if<Residue>(&rep_)) {
    auto b = std::get_if<Residue>(&o.rep_);
    if (!b) mixed();
    check_same(*a, *b);
    std::uint32_t s = a->value >= b->value ? a->value - b->value : a->value + (a->modulus - b->value);
    return Scalar(Residue{s, a->modulus});
  }
  if (!o.is_rational()) mixed();
  return Scalar(mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (auto a = std::get_if<Residue>(&rep_)) {
    auto b = std::get_if<Residue>(&o.rep_);
    if (!b) mixed();
    check_same(*a, *b);
    return Scalar(Residue{static_cast<std::uint32_t>((std::uint64_t(a->value) * b->value) % a->modulus),
                          a->modulus});
  }
  if (!o.is_rational()) mixed();
  return Scalar(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (auto a = std::get_if<Residue>(&rep_))
    return Scalar(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto a = std::get_if<Residue>(&rep_)) return Scalar(Residue{mod_inverse(a->value, a->modulus), a->modulus});
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar base = *this;
  Scalar result = field().one();
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::size_t Scalar::bit_size() const {
  if (!is_rational()) return 0;
  const auto& q = std::get<mpq_class>(rep_);
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

bool Scalar::operator==(const Scalar& o) const {
  if (auto a = std::get_if<Residue>(&rep_)) {
    auto b = std::get_if<Residue>(&o.rep_);
    return b && a->modulus == b->modulus && a->value == b->value;
  }
  return o.is_rational() && std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

std::string Scalar::to_string() const {
  if (auto a = std::get_if<Residue>(&rep_)) return std::to_string(a->value);
  return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar ScalarSampler::next() {
  if (field_.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field_.characteristic() - 1);
    return Scalar(Residue{dist(rng_), field_.characteristic()});
  }
  constexpr long kHeight = 1L << 16;
  std::uniform_int_distribution<long> num(-kHeight, kHeight);
  std::uniform_int_distribution<long> den(1, kHeight);
  return Scalar(mpq_class(num(rng_), den(rng_)));
}

Scalar ScalarSampler::next_nonzero() {
  for (;;) {
    Scalar s = next();
    if (!s.is_zero()) return s;
  }
}

long ScalarSampler::next_int(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(rng_);
}

}  // namespace conekit
