#include <algorithm>
#include <map>
#include <stdexcept>

#include <gmpxx.h>

#include "conekit/groebner.hpp"

namespace conekit {

namespace {

using Exps = std::vector<int>;
// Laurent-free polynomial in the block variables s_B.
using BlockPoly = std::map<Exps, mpz_class>;

void add_into(BlockPoly& acc, const BlockPoly& p, const Exps& shift, int sign) {
  for (const auto& [e, c] : p) {
    Exps k = e;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += shift[i];
    mpz_class& slot = acc[k];
    slot += sign * c;
    if (slot == 0) acc.erase(k);
  }
}

BlockPoly multiply(const BlockPoly& a, const BlockPoly& b) {
  BlockPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps k = ea;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += eb[i];
      mpz_class& slot = out[k];
      slot += ca * cb;
      if (slot == 0) out.erase(k);
    }
  return out;
}

// Multigraded Hilbert numerator of S / M for a monomial ideal M, by
// Bigatti-style pivoting on pure powers.
class Numerator {
 public:
  Numerator(const AmbientSpace& amb, std::size_t nvars) : nvars_(nvars), nblocks_(amb.blocks().size()) {
    for (std::size_t v = 0; v < nvars; ++v) owner_.push_back(amb.block_of_var(v));
  }

  BlockPoly operator()(std::vector<Monomial> gens) const {
    minimalize(gens);
    if (gens.empty()) return one();
    if (pairwise_coprime(gens)) {
      BlockPoly acc = one();
      for (const auto& g : gens) {
        BlockPoly factor = one();
        factor[degree_of(g)] -= 1;
        acc = multiply(acc, factor);
      }
      return acc;
    }
    // Variable in the most generators; exponent is the least one among
    // generators containing it that are not pure powers of it.
    std::vector<int> count(nvars_, 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < nvars_; ++v)
        if (g[v]) ++count[v];
    std::size_t x = std::max_element(count.begin(), count.end()) - count.begin();
    unsigned e = 0;
    for (const auto& g : gens) {
      if (!g[x] || g.degree() == g[x]) continue;
      if (!e || g[x] < e) e = g[x];
    }
    Monomial p = Monomial::variable(x, e);

    std::vector<Monomial> sum = gens;
    sum.push_back(p);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, p));
    BlockPoly out = (*this)(std::move(sum));
    add_into(out, (*this)(std::move(colon)), degree_of(p), 1);
    return out;
  }

  BlockPoly one() const { return BlockPoly{{Exps(nblocks_, 0), mpz_class(1)}}; }

  Exps degree_of(const Monomial& m) const {
    Exps d(nblocks_, 0);
    for (std::size_t v = 0; v < nvars_; ++v) d[owner_[v]] += m[v];
    return d;
  }

 private:
  static void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
      bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
  }

  static bool pairwise_coprime(const std::vector<Monomial>& gens) {
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
      if (seen & g.support()) return false;
      seen |= g.support();
    }
    return true;
  }

  std::size_t nvars_;
  std::size_t nblocks_;
  std::vector<std::size_t> owner_;
};

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

HilbertData Engine::hilbert(const Ideal& ideal) const {
  for (const auto& b : ideal.ambient().blocks())
    if (!b.projective) throw std::invalid_argument("hilbert: affine block " + b.name);
  return hilbert(groebner(ideal));
}

HilbertData Engine::hilbert(const GroebnerBasis& gb) const {
  const AmbientSpace& amb = gb.ring->ambient();
  std::size_t nb = amb.blocks().size();
  HilbertData out;
  if (gb.is_unit()) return out;

  Numerator numerator(amb, amb.num_vars());
  std::vector<Monomial> leads;
  for (const auto& g : gb.basis) leads.push_back(g.leading_monomial());
  BlockPoly k = numerator(std::move(leads));

  // Rewrite K in u_B = 1 - s_B: s^beta = prod_B sum_j C(beta_B, j) (-u_B)^j.
  // Terms with u_B^{n_B} vanish in the Chow ring of the product.
  std::vector<int> sizes;
  for (const auto& b : amb.blocks()) sizes.push_back(static_cast<int>(b.size));
  BlockPoly in_u;
  for (const auto& [beta, c] : k) {
    BlockPoly term{{Exps(nb, 0), c}};
    for (std::size_t b = 0; b < nb; ++b) {
      BlockPoly factor;
      for (int j = 0; j <= beta[b] && j < sizes[b]; ++j) {
        Exps e(nb, 0);
        e[b] = j;
        mpz_class coeff = binomial(beta[b], j);
        if (j % 2) coeff = -coeff;
        factor[e] = coeff;
      }
      term = multiply(term, factor);
    }
    for (const auto& [e, cc] : term) {
      mpz_class& slot = in_u[e];
      slot += cc;
      if (slot == 0) in_u.erase(e);
    }
  }
  if (in_u.empty()) return out;

  int codim = -1;
  for (const auto& [e, c] : in_u) {
    int d = 0;
    for (int x : e) d += x;
    if (codim < 0 || d < codim) codim = d;
  }
  int ambient_dim = amb.projective_dimension();
  out.dimension = ambient_dim - codim;
  mpz_class degree = 0;
  for (const auto& [e, c] : in_u) {
    int d = 0;
    for (int x : e) d += x;
    if (d != codim) continue;
    out.multidegree.push_back({e, c.get_si()});
    // Coefficient of prod H_B^{n_B - 1 - e_B} in (sum H_B)^dim.
    mpz_class multinomial = 1;
    long remaining = out.dimension;
    for (std::size_t b = 0; b < nb; ++b) {
      long part = sizes[b] - 1 - e[b];
      multinomial *= binomial(remaining, part);
      remaining -= part;
    }
    if (remaining == 0) degree += c * multinomial;
  }
  out.degree = degree.get_si();
  return out;
}

long Engine::zero_dim_count(const Ideal& ideal) const {
  GroebnerBasis gb = groebner(ideal);
  if (gb.is_unit()) return 0;
  std::size_t nv = ideal.ambient().num_vars();
  std::vector<unsigned> bound(nv, 0);
  std::vector<Monomial> leads;
  for (const auto& g : gb.basis) {
    const Monomial& m = g.leading_monomial();
    leads.push_back(m);
    for (std::size_t v = 0; v < nv; ++v)
      if (m[v] == m.degree() && (!bound[v] || m[v] < bound[v])) bound[v] = m[v];
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!bound[v]) throw std::domain_error("zero_dim_count: ideal is not zero-dimensional");
  long count = 0;
  Monomial cur;
  // Depth-first walk over the box; a monomial in the ideal prunes its
  // whole upward cone within the current coordinate.
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == nv) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      cur.set(v, e);
      bool in_ideal = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.divides(cur); });
      if (in_ideal) break;
      self(self, v + 1);
    }
    cur.set(v, 0);
  };
  walk(walk, 0);
  return count;
}

}  // namespace conekit
