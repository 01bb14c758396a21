#include "conekit/groebner.hpp"

#include <algorithm>
#include <limits>

#include "conekit/basis_cache.hpp"
#include "conekit/poly_io.hpp"
#include "reduction.hpp"

namespace conekit {

std::uint64_t stable_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    gens_.push_back(g.ring() == ring_ ? std::move(g) : g.to_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::irrelevant(RingPtr ring, const std::string& block) {
  const AmbientSpace& amb = ring->ambient();
  std::size_t b = amb.block_index(block);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < amb.blocks()[b].size; ++i)
    gens.push_back(Polynomial::variable(ring, amb.block_offset(b) + i));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(ring, g));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = gens_;
  for (const auto& g : other.gens_) gens.push_back(g.to_ring(ring_));
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::plus(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = gens_;
  for (const auto& g : extra) gens.push_back(g.to_ring(ring_));
  return Ideal(ring_, std::move(gens));
}

bool Ideal::is_multihomogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.multidegree().has_value(); });
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::to_ring(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.to_ring(target));
  return Ideal(target, std::move(gens));
}

std::vector<std::string> Ideal::printed() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(print_polynomial(g));
  return out;
}

// ------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const EngineCaps& caps) : ring_(std::move(ring)), caps_(caps) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& input) {
    // Smallest leads first keeps early reducers short.
    std::vector<Polynomial> seeds;
    for (const auto& g : input)
      if (!g.is_zero()) seeds.push_back(g.to_ring(ring_).monic());
    std::sort(seeds.begin(), seeds.end(), [&](const Polynomial& a, const Polynomial& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (const auto& g : seeds) {
      if (unit_) break;
      unsigned sugar = g.total_degree();
      Polynomial h = detail::reduce(g, reducers(), false, &sugar);
      if (!h.is_zero()) insert(h.monic(), sugar);
    }
    std::size_t processed = 0;
    while (!unit_ && !pairs_.empty()) {
      if (++processed > caps_.max_pairs) throw ResourceError("S-pair budget exceeded");
      Pair p = pop_pair();
      unsigned sugar = p.sugar;
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j], p.lcm);
      Polynomial h = detail::reduce(s, reducers(), false, &sugar);
      if (h.is_zero()) continue;
      insert(h.monic(), sugar);
    }
    return finish();
  }

 private:
  std::vector<const Polynomial*> reducers() const {
    std::vector<const Polynomial*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) const {
    Polynomial a = f.times_term(lcm / f.leading_monomial(), ring_->field().one());
    return a.minus_multiple(ring_->field().one(), lcm / g.leading_monomial(), g);
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = ring_->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  // Gebauer-Möller update for a new element h.
  void insert(Polynomial h, unsigned sugar) {
    if (h.is_constant()) {
      unit_ = true;
      polys_.assign(1, h);
      return;
    }
    if (h.max_coefficient_bits() > caps_.max_coefficient_bits) throw ResourceError("coefficient size cap exceeded");
    std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    if (active_.size() + 1 > caps_.max_basis) throw ResourceError("basis size cap exceeded");
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<Pair> cand;
    for (std::size_t k : active_) {
      const Monomial& lk = polys_[k].leading_monomial();
      Monomial l = Monomial::lcm(lk, lh);
      unsigned s = std::max(sugars_[k] + l.degree() - lk.degree(), sugar + l.degree() - lh.degree());
      cand.push_back({k, hi, l, s});
    }
    // Chain criterion among new pairs: drop (k,h) if another new pair's lcm
    // properly divides it; for equal lcms keep one, preferring coprime ones.
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (cand[b].lcm != cand[a].lcm) {
          keep[a] = false;
        } else {
          bool a_coprime = polys_[cand[a].i].leading_monomial().coprime(lh);
          bool b_coprime = polys_[cand[b].i].leading_monomial().coprime(lh);
          if (b_coprime || (!a_coprime && b < a)) keep[a] = false;
        }
      }
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      bool redundant = lh.divides(p.lcm) &&
                       Monomial::lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
                       Monomial::lcm(polys_[p.j].leading_monomial(), lh) != p.lcm;
      if (!redundant) kept.push_back(p);
    }
    pairs_ = std::move(kept);
    // Product criterion: coprime leads need no pair.
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] && !polys_[cand[a].i].leading_monomial().coprime(lh)) pairs_.push_back(cand[a]);

    std::vector<std::size_t> still;
    for (std::size_t k : active_)
      if (!lh.divides(polys_[k].leading_monomial())) still.push_back(k);
    still.push_back(hi);
    active_ = std::move(still);
  }

  std::vector<Polynomial> finish() {
    if (unit_) return {Polynomial::constant(ring_, 1)};
    std::vector<Polynomial> minimal;
    for (std::size_t k : active_) minimal.push_back(polys_[k]);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(m < k ? &out[m] : &minimal[m]);
      out.push_back(detail::reduce(minimal[k], others, true, nullptr).monic());
    }
    return out;
  }

  RingPtr ring_;
  EngineCaps caps_;
  std::vector<Polynomial> polys_;
  std::vector<unsigned> sugars_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

namespace detail {

Polynomial reduce(const Polynomial& p, const std::vector<const Polynomial*>& reducers, bool full, unsigned* sugar) {
  if (p.is_zero()) return p;
  const Ring& ring = *p.ring();
  std::vector<std::uint32_t> masks;
  masks.reserve(reducers.size());
  for (const Polynomial* g : reducers) masks.push_back(g->leading_monomial().support());

  std::vector<Term> work = p.terms();
  std::vector<Term> scratch;
  std::vector<Term> remainder;
  std::size_t head = 0;
  while (head < work.size()) {
    const Monomial& lm = work[head].monomial;
    std::uint32_t sm = lm.support();
    const Polynomial* hit = nullptr;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if ((masks[k] & ~sm) != 0) continue;
      if (reducers[k]->leading_monomial().divides(lm)) {
        hit = reducers[k];
        break;
      }
    }
    if (!hit) {
      if (!full) break;
      remainder.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const std::vector<Term>& g = hit->terms();
    Monomial m = lm / g.front().monomial;
    Scalar c = work[head].coefficient / g.front().coefficient;
    if (sugar) *sugar = std::max(*sugar, m.degree() + hit->total_degree());
    scratch.clear();
    scratch.reserve(work.size() - head + g.size());
    std::size_t i = head + 1, j = 1;
    while (i < work.size() && j < g.size()) {
      Monomial gm = g[j].monomial * m;
      int cmp = ring.compare(work[i].monomial, gm);
      if (cmp > 0) {
        scratch.push_back(std::move(work[i++]));
      } else if (cmp < 0) {
        scratch.push_back({gm, -(c * g[j].coefficient)});
        ++j;
      } else {
        Scalar s = work[i].coefficient - c * g[j].coefficient;
        if (!s.is_zero()) scratch.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) scratch.push_back(std::move(work[i]));
    for (; j < g.size(); ++j) scratch.push_back({g[j].monomial * m, -(c * g[j].coefficient)});
    work.swap(scratch);
    head = 0;
  }
  for (std::size_t i = head; i < work.size(); ++i) remainder.push_back(std::move(work[i]));
  // Terms were produced in descending order, so no re-sort is needed.
  return Polynomial::from_sorted_terms(p.ring(), std::move(remainder));
}

}  // namespace detail

// ----------------------------------------------------------------- Engine

Engine::Engine(EngineCaps caps, std::uint64_t seed, std::shared_ptr<BasisCache> cache)
    : caps_(caps), seed_(seed), cache_(std::move(cache)) {}

GroebnerBasis Engine::groebner(const Ideal& ideal, const MonomialOrder& order) const {
  ++calls_;
  RingPtr ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
  GroebnerBasis gb;
  gb.ring = ring;
  gb.reduced = true;
  if (ideal.is_zero()) return gb;

  std::string key = BasisCache::make_key(ideal, order);
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->entries.find(key);
    if (it != memo_->entries.end()) {
      ++memo_hits_;
      memo_->order.splice(memo_->order.begin(), memo_->order, it->second.second);
      GroebnerBasis hit = it->second.first;
      // Rebase onto the caller's ring object when it is structurally equal.
      if (*hit.ring == *ring) {
        for (auto& g : hit.basis) g = g.to_ring(ring);
        hit.ring = ring;
      }
      return hit;
    }
  }
  bool loaded = false;
  if (cache_) {
    if (auto hit = cache_->load(key)) {
      try {
        for (const auto& text : *hit) gb.basis.push_back(parse_polynomial(ring, text));
        loaded = true;
      } catch (const std::exception&) {
        gb.basis.clear();  // corrupt entry; recompute and overwrite
      }
    }
  }
  if (!loaded) {
    gb.basis = Buchberger(ring, caps_).run(ideal.generators());
    if (cache_) {
      std::vector<std::string> printed;
      for (const auto& g : gb.basis) printed.push_back(print_polynomial(g));
      cache_->store(key, ideal, order, printed);
    }
  }
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    if (!memo_->entries.count(key)) {
      memo_->order.push_front(key);
      memo_->entries.emplace(key, std::make_pair(gb, memo_->order.begin()));
      constexpr std::size_t kMemoCapacity = 2048;
      while (memo_->entries.size() > kMemoCapacity) {
        memo_->entries.erase(memo_->order.back());
        memo_->order.pop_back();
      }
    }
  }
  return gb;
}

Polynomial Engine::normal_form(const Polynomial& p, const GroebnerBasis& gb) const {
  Polynomial q = p.to_ring(gb.ring);
  std::vector<const Polynomial*> reducers;
  for (const auto& g : gb.basis) reducers.push_back(&g);
  return detail::reduce(q, reducers, true, nullptr);
}

bool Engine::contains(const GroebnerBasis& gb, const Polynomial& p) const {
  if (p.is_zero()) return true;
  if (gb.is_unit()) return true;
  return normal_form(p, gb).is_zero();
}

bool Engine::contains(const Ideal& ideal, const Polynomial& p) const { return contains(groebner(ideal), p); }

bool Engine::is_subset(const Ideal& small, const Ideal& big) const {
  if (small.is_zero()) return true;
  GroebnerBasis gb = groebner(big);
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return contains(gb, g); });
}

bool Engine::ideal_equal(const Ideal& a, const Ideal& b) const { return is_subset(a, b) && is_subset(b, a); }

bool Engine::is_unit(const Ideal& ideal) const { return groebner(ideal).is_unit(); }

bool verify_buchberger_criterion(const GroebnerBasis& gb) {
  std::vector<const Polynomial*> reducers;
  for (const auto& g : gb.basis) reducers.push_back(&g);
  const Scalar one = gb.ring->field().one();
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
      const Polynomial& f = gb.basis[i];
      const Polynomial& g = gb.basis[j];
      Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
      Polynomial s = f.times_term(l / f.leading_monomial(), one / f.leading_coefficient())
                         .minus_multiple(one / g.leading_coefficient(), l / g.leading_monomial(), g);
      if (!detail::reduce(s, reducers, true, nullptr).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace conekit
