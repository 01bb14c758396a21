#include "conekit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace conekit {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  if (value > 255) throw ResourceError("monomial exponent exceeds 255");
  degree_ = degree_ - e_[i] + value;
  e_[i] = static_cast<std::uint8_t>(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i]) mask |= (1U << i);
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e_[i]) + o.e_[i];
    if (s > 255) throw ResourceError("monomial exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.degree_ = d;
  return r;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::eliminating(const AmbientSpace& ambient, const std::vector<std::string>& blocks) {
  std::bitset<kMaxVars> mask;
  for (const auto& name : blocks) {
    std::size_t b = ambient.block_index(name);
    for (std::size_t i = 0; i < ambient.blocks()[b].size; ++i) mask.set(ambient.block_offset(b) + i);
  }
  return MonomialOrder(Kind::elimination, blocks, mask);
}

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::grevlex:
      return grevlex_compare(a, b, nvars);
    case Kind::elimination: {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (mask_[i]) {
          da += a[i];
          db += b[i];
        }
      if (da != db) return da < db ? -1 : 1;
      return grevlex_compare(a, b, nvars);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::elimination: {
      std::string s = "elim:";
      for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + blocks_[i];
      return s;
    }
  }
  return "?";
}

// -------------------------------------------------------------------- Ring

Ring::Ring(AmbientSpace ambient, Field field, MonomialOrder order)
    : ambient_(std::move(ambient)), field_(field), order_(std::move(order)) {
  if (ambient_.num_vars() > kMaxVars)
    throw std::invalid_argument("ambient has more than " + std::to_string(kMaxVars) + " variables");
}

std::shared_ptr<const Ring> Ring::with_order(MonomialOrder order) const {
  return std::make_shared<const Ring>(ambient_, field_, std::move(order));
}

RingPtr make_ring(AmbientSpace ambient, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(ambient), field, std::move(order));
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->num_vars()) throw std::out_of_range("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(i), ring->field().one()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t i = ring->ambient().var(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.sort_and_merge();
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

void Polynomial::sort_and_merge() {
  const Ring& r = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
      if (out.back().coefficient.is_zero()) out.pop_back();
    } else if (!t.coefficient.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
    throw std::invalid_argument("polynomial operands live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_) return o;
  if (!o.ring_) return *this;
  check_ring(o);
  const Ring& r = *ring_;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = r.compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coefficient + o.terms_[j].coefficient;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, -t.coefficient});
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return Polynomial(ring_ ? ring_ : o.ring_);
  check_ring(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  return from_terms(ring_, std::move(prod));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coefficient * c});
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the order of terms
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coefficient * c});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::minus_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  const Ring& r = *ring_;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].monomial * m;
    int cmp = r.compare(terms_[i].monomial, gm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({gm, -(c * g.terms_[j].coefficient)});
      ++j;
    } else {
      Scalar s = terms_[i].coefficient - c * g.terms_[j].coefficient;
      if (!s.is_zero()) out.terms_.push_back({gm, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.terms_.push_back({g.terms_[j].monomial * m, -(c * g.terms_[j].coefficient)});
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coefficient.is_one()) return *this;
  return scaled(terms_.front().coefficient.inverse());
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::optional<std::vector<int>> Polynomial::multidegree() const {
  const AmbientSpace& amb = ring_->ambient();
  std::vector<int> deg(amb.blocks().size(), 0);
  bool first = true;
  for (const auto& t : terms_) {
    std::vector<int> d(amb.blocks().size(), 0);
    for (std::size_t i = 0; i < amb.num_vars(); ++i) d[amb.block_of_var(i)] += static_cast<int>(t.monomial[i]);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return std::nullopt;
    }
  }
  return deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

unsigned Polynomial::common_power(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned k = 255;
  for (const auto& t : terms_) k = std::min(k, t.monomial[var]);
  return k;
}

Polynomial Polynomial::divide_by_power(std::size_t var, unsigned k) const {
  Monomial m = Monomial::variable(var, k);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial / m, t.coefficient});
  // dividing every term by the same monomial preserves a monomial order
  return out;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned k = 0;
  for (const auto& t : terms_) k = std::max(k, t.monomial[var]);
  return k;
}

std::size_t Polynomial::max_coefficient_bits() const {
  std::size_t b = 0;
  for (const auto& t : terms_) b = std::max(b, t.coefficient.bit_size());
  return b;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& assignment) const {
  if (assignment.empty()) return *this;
  for (const auto& [var, q] : assignment) check_ring(q);
  // cache powers of substituted polynomials
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, assignment.at(var).pow(e)).first->second;
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Monomial kept = t.monomial;
    Polynomial factor = constant(ring_, t.coefficient);
    for (const auto& [var, q] : assignment) {
      unsigned e = t.monomial[var];
      if (e == 0) continue;
      kept.set(var, 0);
      factor *= power_of(var, e);
    }
    for (const auto& ft : factor.terms_) acc.push_back({ft.monomial * kept, ft.coefficient});
  }
  return from_terms(ring_, std::move(acc));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  Scalar sum = field().zero();
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i)
      if (t.monomial[i]) v *= point.at(i).pow(t.monomial[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coefficient * field().from_int(e)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::swap_variables(std::size_t i, std::size_t j) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    unsigned a = m[i], b = m[j];
    m.set(i, b);
    m.set(j, a);
    out.push_back({m, t.coefficient});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::coefficient_of(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial[var] != k) continue;
    Monomial m = t.monomial;
    m.set(var, 0);
    out.push_back({m, t.coefficient});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::to_ring(const RingPtr& target) const {
  if (ring_ == target) return *this;
  if (!(ring_->field() == target->field())) throw FieldError("to_ring: field mismatch");
  if (ring_->ambient() == target->ambient()) {
    Polynomial out(target);
    out.terms_ = terms_;
    if (!(ring_->order() == target->order())) {
      const Ring& r = *target;
      std::sort(out.terms_.begin(), out.terms_.end(),
                [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
    }
    return out;
  }
  const AmbientSpace& src = ring_->ambient();
  std::vector<std::optional<std::size_t>> map(src.num_vars());
  for (std::size_t i = 0; i < src.num_vars(); ++i) map[i] = target->ambient().find_var(src.var_name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < src.num_vars(); ++i) {
      if (!t.monomial[i]) continue;
      if (!map[i]) throw std::invalid_argument("variable " + src.var_name(i) + " missing in target ring");
      m.set(*map[i], t.monomial[i]);
    }
    out.push_back({m, t.coefficient});
  }
  return from_terms(target, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial taylor_shift_coefficient(const Polynomial& p, std::size_t t, unsigned r) {
  Polynomial shifted_t = Polynomial::variable(p.ring(), t) + Polynomial::constant(p.ring(), 1);
  Polynomial shifted = p.substitute({{t, shifted_t}});
  return shifted.coefficient_of(t, r);
}

Polynomial compose(const Polynomial& p, const RingPtr& target, const std::vector<Polynomial>& images) {
  std::size_t nv = p.ring()->num_vars();
  if (images.size() != nv) throw std::invalid_argument("compose: need one image per variable");
  for (const auto& q : images)
    if (!(*q.ring() == *target)) throw std::invalid_argument("compose: image outside target ring");
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, images[var].pow(e)).first->second;
  };
  Polynomial out(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient);
    for (std::size_t v = 0; v < nv && !term.is_zero(); ++v)
      if (t.monomial[v]) term *= power_of(v, t.monomial[v]);
    out += term;
  }
  return out;
}

}  // namespace conekit
