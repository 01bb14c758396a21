#include <algorithm>
#include <map>

#include "conekit/groebner.hpp"
#include "conekit/poly_io.hpp"

namespace conekit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// A block name absent from the ambient, for one auxiliary variable.
std::string fresh_block(const AmbientSpace& amb) {
  std::string name = "w";
  while (amb.has_block(name)) name += "w";
  return name;
}

struct AuxRing {
  RingPtr ring;
  std::string block;
  Polynomial w;
};

AuxRing with_aux(const RingPtr& base) {
  std::string block = fresh_block(base->ambient());
  AmbientSpace amb = base->ambient().with_blocks({Block{block, 1, false}});
  RingPtr ring = make_ring(amb, base->field(), MonomialOrder::eliminating(amb, {block}));
  return {ring, block, Polynomial::variable(ring, block + "0")};
}

std::string ideal_fingerprint(const Ideal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(canonical_string(g));
  std::sort(gens.begin(), gens.end());
  std::string s = ideal.ambient().describe();
  for (const auto& g : gens) s += "|" + g;
  return s;
}

// Monomial content shared by every term.
Monomial monomial_content(const Polynomial& g) {
  Monomial m = g.terms().front().monomial;
  for (const auto& t : g.terms()) m = Monomial::gcd(m, t.monomial);
  return m;
}

bool is_linear_form(const Polynomial& g) {
  return std::all_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return t.monomial.degree() == 1; });
}

}  // namespace

std::uint64_t Engine::derive_seed(const std::string& salt) const { return splitmix(seed_ ^ stable_hash(salt)); }

Ideal Engine::eliminate_in_place(const Ideal& ideal, const std::vector<std::string>& drop_blocks) const {
  if (drop_blocks.empty()) return ideal;
  MonomialOrder order = MonomialOrder::eliminating(ideal.ambient(), drop_blocks);
  GroebnerBasis gb = groebner(ideal, order);
  const auto& mask = order.eliminated_vars();
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    bool free = true;
    for (std::size_t v = 0; v < ideal.ambient().num_vars() && free; ++v)
      if (mask[v] && g.involves(v)) free = false;
    if (free) kept.push_back(g.to_ring(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal Engine::eliminate(const Ideal& ideal, const std::vector<std::string>& drop_blocks) const {
  Ideal in_place = eliminate_in_place(ideal, drop_blocks);
  RingPtr target = make_ring(ideal.ambient().without(drop_blocks), ideal.field());
  return in_place.to_ring(target);
}

Ideal Engine::saturate_by_variable(const Ideal& ideal, std::size_t var) const {
  if (!ideal.is_homogeneous()) return saturate_rabinowitsch(ideal, Polynomial::variable(ideal.ring(), var));
  // Bayer: with var last in grevlex, the saturation's basis is the basis
  // with every power of var divided out.
  RingPtr grevlex = ideal.ring()->with_order(MonomialOrder::grevlex());
  std::size_t last = ideal.ambient().num_vars() - 1;
  std::vector<Polynomial> swapped;
  for (const auto& g : ideal.generators()) swapped.push_back(g.to_ring(grevlex).swap_variables(var, last));
  GroebnerBasis gb = groebner(Ideal(grevlex, swapped), MonomialOrder::grevlex());
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    Polynomial h = g.divide_by_power(last, g.common_power(last));
    if (h.is_constant()) return Ideal::unit(ideal.ring());
    out.push_back(h.swap_variables(var, last).to_ring(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal Engine::saturate_by_linear_form(const Ideal& ideal, const Polynomial& form) const {
  // Change coordinates so the form becomes its pivot variable, saturate by
  // that variable, and change back.
  const RingPtr& ring = ideal.ring();
  Polynomial ell = form.to_ring(ring);
  // Pivot on the highest-index variable so it ends up cheap to move last.
  std::size_t pivot = 0;
  bool found = false;
  Scalar pivot_coeff = ring->field().zero();
  for (const auto& t : ell.terms()) {
    std::size_t v = 0;
    while (t.monomial[v] == 0) ++v;
    if (!found || v > pivot) {
      pivot = v;
      pivot_coeff = t.coefficient;
      found = true;
    }
  }
  Polynomial x = Polynomial::variable(ring, pivot);
  Polynomial rest = ell - x.scaled(pivot_coeff);
  Polynomial forward = (x - rest).scaled(pivot_coeff.inverse());
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators()) moved.push_back(g.substitute({{pivot, forward}}));
  Ideal sat = saturate_by_variable(Ideal(ring, moved), pivot);
  std::vector<Polynomial> back;
  for (const auto& g : sat.generators()) back.push_back(g.substitute({{pivot, ell}}));
  return Ideal(ring, std::move(back));
}

Ideal Engine::saturate_rabinowitsch(const Ideal& ideal, const Polynomial& g) const {
  AuxRing aux = with_aux(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.to_ring(aux.ring));
  gens.push_back(aux.w * g.to_ring(aux.ring) - Polynomial::constant(aux.ring, 1));
  Ideal big(aux.ring, std::move(gens));
  Ideal elim = eliminate_in_place(big, {aux.block});
  return elim.to_ring(ideal.ring());
}

Ideal Engine::saturate(const Ideal& ideal, const Polynomial& g0) const {
  if (g0.is_zero()) return Ideal::unit(ideal.ring());
  Polynomial g = g0.to_ring(ideal.ring());
  if (g.is_constant() || ideal.is_zero()) return ideal;
  Ideal cur = ideal;
  Monomial content = monomial_content(g);
  for (std::size_t v = 0; v < ideal.ambient().num_vars(); ++v)
    if (content[v] > 0) cur = saturate_by_variable(cur, v);
  Polynomial rest = g;
  if (!content.is_one()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({t.monomial / content, t.coefficient});
    rest = Polynomial::from_terms(g.ring(), std::move(terms));
  }
  if (rest.is_constant()) return cur;
  if (is_linear_form(rest) && cur.is_homogeneous()) return saturate_by_linear_form(cur, rest);
  return saturate_rabinowitsch(cur, rest);
}

Ideal Engine::saturate(const Ideal& ideal, const Ideal& by, bool exact) const {
  if (by.is_zero()) return ideal;
  std::vector<Polynomial> singles;
  if (exact || !by.is_multihomogeneous()) {
    singles = by.generators();
  } else {
    std::map<std::vector<int>, std::vector<Polynomial>> groups;
    for (const auto& g : by.generators()) groups[*g.multidegree()].push_back(g.to_ring(ideal.ring()));
    ScalarSampler sampler(ideal.field(), derive_seed("saturate|" + ideal_fingerprint(by)));
    for (auto& [deg, gens] : groups) {
      if (gens.size() == 1) {
        singles.push_back(gens[0]);
        continue;
      }
      Polynomial combo(ideal.ring());
      for (const auto& g : gens) {
        Scalar c = ideal.field().is_prime() ? sampler.next_nonzero() : ideal.field().from_int(sampler.next_int(1, 97));
        combo += g.scaled(c);
      }
      singles.push_back(combo);
    }
  }
  std::vector<Ideal> parts;
  for (const auto& g : singles) {
    if (g.to_ring(ideal.ring()).is_constant()) return ideal;
    // I : g^inf is the unit ideal for g in I.
    if (contains(ideal, g)) continue;
    parts.push_back(saturate(ideal, g));
  }
  if (parts.empty()) return Ideal::unit(ideal.ring());
  return intersect(parts);
}

Ideal Engine::saturate_irrelevant(const Ideal& ideal, const std::string& block) const {
  const AmbientSpace& amb = ideal.ambient();
  std::size_t b = amb.block_index(block);
  std::size_t size = amb.blocks()[b].size;
  std::size_t off = amb.block_offset(b);
  if (size == 1) return saturate_by_variable(ideal, off);
  ScalarSampler sampler(ideal.field(), derive_seed("irrelevant|" + block + "|" + ideal_fingerprint(ideal)));
  Polynomial form(ideal.ring());
  for (std::size_t i = 0; i < size; ++i) {
    Scalar c = ideal.field().is_prime() ? sampler.next_nonzero() : ideal.field().from_int(sampler.next_int(1, 97));
    form += Polynomial::variable(ideal.ring(), off + i).scaled(c);
  }
  if (ideal.is_homogeneous()) return saturate_by_linear_form(ideal, form);
  return saturate_rabinowitsch(ideal, form);
}

Ideal Engine::saturate_irrelevant(const Ideal& ideal) const {
  Ideal cur = ideal;
  for (const auto& blk : ideal.ambient().blocks())
    if (blk.projective) cur = saturate_irrelevant(cur, blk.name);
  return cur;
}

Ideal Engine::quotient(const Ideal& ideal, const Polynomial& g) const {
  // I : g = (I intersect (g)) / g.
  Polynomial gg = g.to_ring(ideal.ring());
  if (gg.is_zero()) return Ideal::unit(ideal.ring());
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {gg}));
  std::vector<Polynomial> out;
  RingPtr grevlex = ideal.ring()->with_order(MonomialOrder::grevlex());
  GroebnerBasis divisor{grevlex, {gg.to_ring(grevlex).monic()}, true};
  for (const auto& h : meet.generators()) {
    // Exact division by one polynomial: long division with a single reducer.
    Polynomial rem = h.to_ring(grevlex);
    Polynomial quo(grevlex);
    const Polynomial& d = divisor.basis[0];
    while (!rem.is_zero()) {
      Monomial m = rem.leading_monomial() / d.leading_monomial();
      Scalar c = rem.leading_coefficient();
      quo += Polynomial::monomial(grevlex, m, c);
      rem = rem.minus_multiple(c, m, d);
    }
    out.push_back(quo.scaled(gg.to_ring(grevlex).leading_coefficient().inverse()).to_ring(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal Engine::intersect(const Ideal& a, const Ideal& b0) const {
  Ideal b = b0.to_ring(a.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  AuxRing aux = with_aux(a.ring());
  Polynomial one = Polynomial::constant(aux.ring, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(aux.w * f.to_ring(aux.ring));
  for (const auto& f : b.generators()) gens.push_back((one - aux.w) * f.to_ring(aux.ring));
  Ideal elim = eliminate_in_place(Ideal(aux.ring, std::move(gens)), {aux.block});
  return elim.to_ring(a.ring());
}

Ideal Engine::intersect(const std::vector<Ideal>& ideals) const {
  if (ideals.empty()) throw std::invalid_argument("intersect: empty list");
  Ideal cur = ideals[0];
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    if (is_subset(cur, ideals[k])) continue;
    if (is_subset(ideals[k], cur)) {
      cur = ideals[k].to_ring(cur.ring());
      continue;
    }
    cur = intersect(cur, ideals[k]);
  }
  return cur;
}

bool Engine::radical_member(const Polynomial& p, const Ideal& ideal) const {
  if (p.is_zero()) return true;
  if (contains(ideal, p)) return true;
  AuxRing aux = with_aux(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.to_ring(aux.ring));
  gens.push_back(Polynomial::constant(aux.ring, 1) - aux.w * p.to_ring(aux.ring));
  return is_unit(Ideal(aux.ring, std::move(gens)));
}

bool Engine::radical_subset(const Ideal& small, const Ideal& big) const {
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return radical_member(g, big); });
}

bool Engine::radical_equal(const Ideal& a, const Ideal& b) const { return radical_subset(a, b) && radical_subset(b, a); }

}  // namespace conekit
