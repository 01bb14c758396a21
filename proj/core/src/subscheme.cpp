#include "conekit/subscheme.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "conekit/poly_io.hpp"
#include "univariate.hpp"

namespace conekit {

namespace {

std::string fingerprint(const Ideal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(canonical_string(g));
  std::sort(gens.begin(), gens.end());
  std::string s = ideal.ambient().describe();
  for (const auto& g : gens) s += "|" + g;
  return s;
}

Scalar random_coefficient(ScalarSampler& sampler) {
  if (sampler.field().is_prime()) return sampler.next_nonzero();
  return sampler.field().from_int(sampler.next_int(1, 97));
}

// Copy of p with the variables of block `from` renamed to block `to` of
// the target ring (same sizes).
Polynomial rename_block(const Polynomial& p, const std::string& from, const std::string& to, const RingPtr& target) {
  const AmbientSpace& src = p.ring()->ambient();
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < src.num_vars(); ++v) {
      if (!t.monomial[v]) continue;
      const Block& b = src.blocks()[src.block_of_var(v)];
      std::size_t idx = v - src.block_offset(src.block_of_var(v));
      std::string name = b.name == from ? to : b.name;
      m.set(target->ambient().var(name, idx), t.monomial[v]);
    }
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

std::string fresh_name(const AmbientSpace& amb, std::string base) {
  while (amb.has_block(base)) base += "j";
  return base;
}

bool all_linear(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    for (const auto& t : g.terms())
      if (t.monomial.degree() != 1) return false;
  return true;
}

}  // namespace

// -------------------------------------------------------------- Subscheme

Subscheme Subscheme::from_ideal(const Engine& engine, const Ideal& ideal) {
  return Subscheme(engine.saturate_irrelevant(ideal));
}

Subscheme Subscheme::trusted(Ideal ideal) { return Subscheme(std::move(ideal)); }

Subscheme Subscheme::intersect(const Engine& engine, const Subscheme& other) const {
  return from_ideal(engine, ideal_ + other.ideal_);
}

std::vector<Polynomial> point_equations(const RingPtr& ring, const std::string& block,
                                        const std::vector<Scalar>& coords) {
  const AmbientSpace& amb = ring->ambient();
  std::size_t b = amb.block_index(block);
  std::size_t off = amb.block_offset(b);
  std::size_t size = amb.blocks()[b].size;
  if (coords.size() != size) throw std::invalid_argument("point for block " + block + " has wrong length");
  std::size_t pivot = size;
  for (std::size_t i = 0; i < size; ++i)
    if (!coords[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == size) throw std::invalid_argument("point for block " + block + " is zero");
  std::vector<Polynomial> out;
  Polynomial xp = Polynomial::variable(ring, off + pivot);
  for (std::size_t i = 0; i < size; ++i) {
    if (i == pivot) continue;
    out.push_back(Polynomial::variable(ring, off + i).scaled(coords[pivot]) - xp.scaled(coords[i]));
  }
  return out;
}

Subscheme graph_closure(const Engine& engine, const RationalMapSpec& map) {
  if (map.forms.empty() || map.forms.size() != map.target.size)
    throw std::invalid_argument("graph_closure: need one form per target coordinate");
  const Field field = map.forms.front().field();
  AmbientSpace amb = map.source.with_blocks({map.target});
  RingPtr ring = make_ring(amb, field);
  std::vector<Polynomial> forms;
  for (const auto& f : map.forms) forms.push_back(f.to_ring(ring));
  if (std::all_of(forms.begin(), forms.end(), [](const Polynomial& f) { return f.is_zero(); }))
    throw std::invalid_argument("graph_closure: all forms vanish");
  std::optional<std::vector<int>> degree;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    auto d = f.multidegree();
    if (!d || (degree && *degree != *d)) throw std::invalid_argument("graph_closure: forms differ in multidegree");
    degree = d;
  }
  std::size_t off = amb.block_offset(amb.block_index(map.target.name));
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      Polynomial yi = Polynomial::variable(ring, off + i);
      Polynomial yj = Polynomial::variable(ring, off + j);
      minors.push_back(yi * forms[j] - yj * forms[i]);
    }
  Ideal ideal(ring, std::move(minors));
  const Polynomial* monomial_form = nullptr;
  for (const auto& f : forms)
    if (f.size() == 1 && (!monomial_form || f.total_degree() < monomial_form->total_degree())) monomial_form = &f;
  Ideal sat = monomial_form ? engine.saturate(ideal, *monomial_form) : engine.saturate(ideal, Ideal(ring, forms));
  return Subscheme::from_ideal(engine, sat);
}

Subscheme fiber(const Engine& engine, const Subscheme& s, const BlockPoint& at) {
  if (at.empty()) return s;
  std::vector<Polynomial> extra;
  for (const auto& [block, coords] : at) {
    auto eqs = point_equations(s.ring(), block, coords);
    extra.insert(extra.end(), eqs.begin(), eqs.end());
  }
  return Subscheme::from_ideal(engine, s.ideal().plus(extra));
}

Subscheme fiber_projected(const Engine& engine, const Subscheme& s, const BlockPoint& at) {
  if (at.empty()) return s;
  const AmbientSpace& amb = s.ambient();
  std::map<std::size_t, Polynomial> assignment;
  std::vector<std::string> dropped;
  for (const auto& [block, coords] : at) {
    std::size_t b = amb.block_index(block);
    if (coords.size() != amb.blocks()[b].size) throw std::invalid_argument("point for block " + block + " has wrong length");
    for (std::size_t i = 0; i < coords.size(); ++i)
      assignment.emplace(amb.block_offset(b) + i, Polynomial::constant(s.ring(), coords[i]));
    dropped.push_back(block);
  }
  RingPtr target = make_ring(amb.without(dropped), s.ring()->field());
  std::vector<Polynomial> gens;
  for (const auto& g : s.ideal().generators()) gens.push_back(g.substitute(assignment).to_ring(target));
  return Subscheme::from_ideal(engine, Ideal(target, std::move(gens)));
}

Subscheme project(const Engine& engine, const Subscheme& s, const std::vector<std::string>& drop_blocks) {
  return Subscheme::trusted(engine.eliminate(s.ideal(), drop_blocks));
}

ComponentCheck is_component(const Engine& engine, const Subscheme& s, const Subscheme& c) {
  return is_component(engine, s, c, c.ideal());
}

ComponentCheck is_component(const Engine& engine, const Subscheme& s, const Subscheme& c, const Ideal& cut) {
  ComponentCheck out;
  if (engine.is_unit(c.ideal())) return out;
  out.contained = engine.radical_subset(s.ideal(), c.ideal());
  if (!out.contained) return out;
  Ideal rest = engine.saturate(s.ideal(), cut);
  out.saturation_moves = !engine.ideal_equal(rest, s.ideal());
  if (!out.saturation_moves) return out;
  for (const auto& g : rest.generators())
    if (!engine.radical_member(g, c.ideal())) {
      out.maximal = true;
      break;
    }
  return out;
}

bool union_certify(const Engine& engine, const Subscheme& s, const std::vector<Subscheme>& parts) {
  if (parts.empty()) return engine.is_unit(s.ideal());
  for (const auto& p : parts)
    if (!engine.radical_subset(s.ideal(), p.ideal())) return false;
  std::vector<Ideal> ideals;
  for (const auto& p : parts) ideals.push_back(p.ideal());
  return engine.radical_subset(engine.intersect(ideals), s.ideal());
}

MultiplicityReport component_multiplicity(const Engine& engine, const Subscheme& s, const Subscheme& c,
                                          const std::vector<Subscheme>& others) {
  MultiplicityReport r;
  r.component = c;
  Ideal rest = s.ideal();
  if (!others.empty()) {
    std::vector<Ideal> ideals;
    for (const auto& o : others) ideals.push_back(o.ideal());
    rest = engine.saturate(s.ideal(), engine.intersect(ideals));
  }
  HilbertData hs = engine.hilbert(s.ideal());
  HilbertData hr = engine.hilbert(rest);
  HilbertData hc = engine.hilbert(c.ideal());
  r.dimension = hc.dimension;
  r.component_degree = hc.degree;
  r.total_degree = hs.dimension == hc.dimension ? hs.degree : 0;
  if (hr.dimension != hc.dimension || hc.degree == 0) {
    r.multiplicity = 0;
    r.integral = hr.dimension < hc.dimension;
  } else {
    r.multiplicity = mpq_class(hr.degree, hc.degree);
    r.multiplicity.canonicalize();
    r.integral = r.multiplicity.get_den() == 1;
  }
  mpq_class used = r.multiplicity * hc.degree;
  r.residual_degree = r.total_degree - used.get_num().get_si();
  return r;
}

Subscheme join(const Engine& engine, const Subscheme& a, const Subscheme& b) {
  const AmbientSpace& amb = a.ambient();
  if (amb.blocks().size() != 1 || !(amb == b.ambient())) throw std::invalid_argument("join: need one common block");
  const Block& x = amb.blocks()[0];
  if (all_linear(a.ideal()) && all_linear(b.ideal())) {
    // Span of two linear spaces: the linear forms vanishing on both.
    Ideal meet = engine.intersect(a.ideal(), b.ideal());
    std::vector<Polynomial> linear;
    for (const auto& g : engine.groebner(meet).basis)
      if (g.total_degree() == 1) linear.push_back(g.to_ring(a.ring()));
    return Subscheme::trusted(Ideal(a.ring(), std::move(linear)));
  }
  std::string pn = fresh_name(amb, "jp"), qn = fresh_name(amb, "jq");
  AmbientSpace big = amb.with_blocks({Block{pn, x.size, true}, Block{qn, x.size, true}});
  RingPtr ring = make_ring(big, a.ring()->field());
  auto var = [&](const std::string& blk, std::size_t i) { return Polynomial::variable(ring, big.var(blk, i)); };
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < x.size; ++i)
    for (std::size_t j = i + 1; j < x.size; ++j)
      for (std::size_t k = j + 1; k < x.size; ++k) {
        auto m2 = [&](const std::string& r1, const std::string& r2, std::size_t c1, std::size_t c2) {
          return var(r1, c1) * var(r2, c2) - var(r1, c2) * var(r2, c1);
        };
        gens.push_back(var(x.name, i) * m2(pn, qn, j, k) - var(x.name, j) * m2(pn, qn, i, k) +
                       var(x.name, k) * m2(pn, qn, i, j));
      }
  for (const auto& g : a.ideal().generators()) gens.push_back(rename_block(g, x.name, pn, ring));
  for (const auto& g : b.ideal().generators()) gens.push_back(rename_block(g, x.name, qn, ring));
  ScalarSampler sampler(ring->field(), engine.derive_seed("join|" + fingerprint(a.ideal()) + "#" + fingerprint(b.ideal())));
  Polynomial apart(ring);
  for (std::size_t i = 0; i < x.size; ++i)
    for (std::size_t j = i + 1; j < x.size; ++j)
      apart += (var(pn, i) * var(qn, j) - var(pn, j) * var(qn, i)).scaled(random_coefficient(sampler));
  Ideal incidence = engine.saturate(Ideal(ring, std::move(gens)), apart);
  Ideal image = engine.eliminate(incidence, {pn, qn});
  return Subscheme::from_ideal(engine, image.to_ring(a.ring()));
}

mpq_class cycle_degree(const Engine& engine, const Cycle& cycle) {
  mpq_class total = 0;
  for (const auto& [component, mult] : cycle.components) total += mult * component.degree(engine);
  return total;
}

bool point_lies_on(const Subscheme& s, const BlockPoint& point) {
  const AmbientSpace& amb = s.ambient();
  std::vector<Scalar> values(amb.num_vars(), s.ring()->field().zero());
  for (const auto& [block, coords] : point) {
    std::size_t b = amb.block_index(block);
    for (std::size_t i = 0; i < coords.size(); ++i) values[amb.block_offset(b) + i] = coords[i];
  }
  for (const auto& blk : amb.blocks())
    if (!point.count(blk.name)) return false;
  return std::all_of(s.ideal().generators().begin(), s.ideal().generators().end(),
                     [&](const Polynomial& g) { return g.evaluate(values).is_zero(); });
}

std::string describe_point(const BlockPoint& point) {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& [block, coords] : point) {
    os << (first_block ? "" : " ") << block << "=(";
    first_block = false;
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ":" : "") << coords[i].to_string();
    os << ")";
  }
  return os.str();
}

namespace {

// Solutions of a zero-dimensional lex basis over F_p by back substitution,
// first root first. Returns false if no F_p-rational solution exists.
bool solve_triangular(const std::vector<Polynomial>& basis, std::size_t nvars, std::uint64_t p,
                      std::vector<std::uint64_t>& values, std::size_t v, std::mt19937_64& rng) {
  if (v == 0) return true;
  std::size_t var = v - 1;
  detail::UPoly acc;
  bool constrained = false;
  for (const auto& g : basis) {
    bool relevant = true;
    for (std::size_t u = 0; u < var && relevant; ++u)
      if (g.involves(u)) relevant = false;
    if (!relevant) continue;
    detail::UPoly uni;
    for (const auto& t : g.terms()) {
      unsigned e = t.monomial[var];
      std::uint64_t c = t.coefficient.residue();
      for (std::size_t u = var + 1; u < nvars; ++u)
        for (unsigned k = 0; k < t.monomial[u]; ++k) c = static_cast<unsigned __int128>(c) * values[u] % p;
      if (uni.size() <= e) uni.resize(e + 1, 0);
      uni[e] = (uni[e] + c) % p;
    }
    while (!uni.empty() && uni.back() == 0) uni.pop_back();
    if (uni.empty()) continue;
    if (uni.size() == 1) return false;
    constrained = true;
    if (acc.empty()) {
      acc = uni;
    } else {
      // gcd via root intersection keeps this simple: filter roots below.
      auto ra = detail::roots_mod_p(acc, p, rng);
      auto rb = detail::roots_mod_p(uni, p, rng);
      std::vector<std::uint64_t> common;
      std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(common));
      if (common.empty()) return false;
      acc.assign(1, 1);
      for (auto r : common) {
        detail::UPoly next(acc.size() + 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
          next[i + 1] = (next[i + 1] + acc[i]) % p;
          next[i] = (next[i] + static_cast<unsigned __int128>(acc[i]) * (p - r) % p) % p;
        }
        acc = std::move(next);
      }
    }
  }
  if (!constrained) {
    values[var] = rng() % p;
    return solve_triangular(basis, nvars, p, values, v - 1, rng);
  }
  for (auto r : detail::roots_mod_p(acc, p, rng)) {
    values[var] = r;
    if (solve_triangular(basis, nvars, p, values, v - 1, rng)) return true;
  }
  return false;
}

}  // namespace

std::optional<BlockPoint> random_point(const Engine& engine, const Subscheme& s, const std::string& salt, int trials) {
  const Field& field = s.ring()->field();
  if (!field.is_prime()) throw std::invalid_argument("random_point needs a prime field");
  HilbertData h = s.hilbert(engine);
  if (h.dimension < 0) return std::nullopt;
  const AmbientSpace& amb = s.ambient();
  const std::uint64_t p = field.characteristic();
  std::mt19937_64 rng(engine.derive_seed("point|" + salt + "|" + fingerprint(s.ideal())));
  RingPtr lex = s.ring()->with_order(MonomialOrder::lex());
  std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
  auto scalar = [&](std::uint64_t v) { return field.from_int(static_cast<long>(v)); };

  for (int trial = 0; trial < trials; ++trial) {
    // Affine chart ell_B = 1 per block, solved for the block's first
    // variable, which is then pinned to zero in the sliced system.
    std::map<std::size_t, Polynomial> chart;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> forms;
    std::vector<bool> pivot(amb.num_vars(), false);
    for (std::size_t b = 0; b < amb.blocks().size(); ++b) {
      std::size_t off = amb.block_offset(b), size = amb.blocks()[b].size;
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < size; ++i) c.push_back(scalar(coeff(rng)));
      Polynomial rest = Polynomial::constant(lex, 1);
      for (std::size_t i = 1; i < size; ++i) rest -= Polynomial::variable(lex, off + i).scaled(c[i]);
      chart.emplace(off, rest.scaled(c[0].inverse()));
      pivot[off] = true;
      forms.push_back({b, c});
    }
    std::vector<Polynomial> gens;
    for (const auto& g : s.ideal().generators()) gens.push_back(g.to_ring(lex).substitute(chart));
    for (std::size_t v = 0; v < amb.num_vars(); ++v)
      if (pivot[v]) gens.push_back(Polynomial::variable(lex, v));
    for (int k = 0; k < h.dimension; ++k) {
      Polynomial slice = Polynomial::constant(lex, scalar(coeff(rng)));
      for (std::size_t v = 0; v < amb.num_vars(); ++v)
        if (!pivot[v]) slice += Polynomial::variable(lex, v).scaled(scalar(coeff(rng)));
      gens.push_back(slice);
    }
    GroebnerBasis gb;
    try {
      gb = engine.groebner(Ideal(lex, gens), MonomialOrder::lex());
    } catch (const ResourceError&) {
      continue;
    }
    if (gb.is_unit()) continue;
    std::vector<std::uint64_t> values(amb.num_vars(), 0);
    if (!solve_triangular(gb.basis, amb.num_vars(), p, values, amb.num_vars(), rng)) continue;
    BlockPoint point;
    for (std::size_t b = 0; b < amb.blocks().size(); ++b) {
      std::size_t off = amb.block_offset(b), size = amb.blocks()[b].size;
      std::vector<Scalar> coords;
      for (std::size_t i = 0; i < size; ++i) coords.push_back(scalar(values[off + i]));
      const auto& c = forms[b].second;
      Scalar acc = field.one();
      for (std::size_t i = 1; i < size; ++i) acc -= c[i] * coords[i];
      coords[0] = acc / c[0];
      point[amb.blocks()[b].name] = std::move(coords);
    }
    if (point_lies_on(s, point)) return point;
  }
  return std::nullopt;
}

}  // namespace conekit
