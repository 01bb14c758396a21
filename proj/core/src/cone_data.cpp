#include "conekit/cone_data.hpp"

#include <map>
#include <stdexcept>

#include "conekit/poly_io.hpp"

namespace conekit {

namespace {

struct PresetDef {
  const char* name;
  int n;
  int h;
  const char* f;
};

const std::vector<PresetDef>& preset_table() {
  static const std::vector<PresetDef> table = {
      {"quadric-s2-h1", 2, 1, "x0*x3 - x1*x2"},
      {"cubic-3f-h1", 3, 1, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"},
      {"cubic-3f-h2", 3, 2, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"},
  };
  return table;
}

// Pairwise proportionality of nonzero polynomials in the same ring.
bool all_proportional(const std::vector<Polynomial>& polys) {
  const Polynomial* first = nullptr;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!first) {
      first = &p;
      continue;
    }
    if (p.monic() != first->monic()) return false;
  }
  return true;
}

}  // namespace

RingPtr ConeData::x_ring() const {
  return make_ring(AmbientSpace::projective("x", static_cast<std::size_t>(n + 2)), field);
}

Polynomial ConeData::f() const { return parse_polynomial(x_ring(), f_text); }

ConeData make_cone_data(std::string name, int n, int h, std::string f_text, Field field,
                        std::uint64_t genericity_seed) {
  if (n < 2) throw std::invalid_argument("cone data: n must be at least 2");
  if (h < 1 || h > n) throw std::invalid_argument("cone data: h must lie in [1, n]");
  ConeData cd{std::move(name), n, h, std::move(f_text), field, genericity_seed};
  Polynomial f = cd.f();
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("cone data: f must be a nonzero form");
  unsigned d = f.total_degree();
  if (d < 2) throw std::invalid_argument("cone data: f must have degree at least 2");
  if (field.is_prime() && d % field.characteristic() == 0)
    throw std::invalid_argument("cone data: characteristic " + std::to_string(field.characteristic()) +
                                " divides deg f = " + std::to_string(d));
  return cd;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : preset_table()) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

bool is_preset(const std::string& name) {
  for (const auto& p : preset_table())
    if (name == p.name) return true;
  return false;
}

ConeData preset(const std::string& name, Field field, std::uint64_t genericity_seed) {
  for (const auto& p : preset_table())
    if (name == p.name) return make_cone_data(p.name, p.n, p.h, p.f, field, genericity_seed);
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::size_t> section_coordinates(const ConeData& cd, Section section) {
  std::vector<std::size_t> out;
  switch (section) {
    case Section::whole:
      break;
    case Section::fixed_part:
      for (int i = cd.a(); i <= cd.n + 1; ++i) out.push_back(static_cast<std::size_t>(i));
      break;
    case Section::complement:
      for (int i = 1; i < cd.a(); ++i) out.push_back(static_cast<std::size_t>(i));
      break;
  }
  return out;
}

Ideal section_ideal(const ConeData& cd, Section section) {
  RingPtr ring = cd.x_ring();
  std::vector<Polynomial> gens{cd.f()};
  for (std::size_t v : section_coordinates(cd, section)) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

SmoothnessReport check_smoothness(const Engine& engine, const ConeData& cd, Section section) {
  SmoothnessReport out;
  out.section = section;
  std::vector<std::size_t> cut = section_coordinates(cd, section);
  out.expected_dimension = cd.n - static_cast<int>(cut.size());
  Ideal base = section_ideal(cd, section);
  out.dimension = engine.hilbert(base).dimension;

  std::vector<bool> is_cut(static_cast<std::size_t>(cd.n + 2), false);
  for (std::size_t v : cut) is_cut[v] = true;
  Polynomial f = cd.f();
  std::vector<Polynomial> jac;
  for (std::size_t v = 0; v < is_cut.size(); ++v)
    if (!is_cut[v]) jac.push_back(f.derivative(v));
  out.singular_dimension = engine.hilbert(base.plus(jac)).dimension;
  return out;
}

Expansion expansion_g(const ConeData& cd) {
  const int n = cd.n;
  const std::size_t a = static_cast<std::size_t>(cd.a());
  const std::size_t nx = static_cast<std::size_t>(n + 2);
  RingPtr aff = make_ring(AmbientSpace({{"t", 1, false}, {"z", 1, false}, {"x", nx, true}}), cd.field);
  Polynomial t = Polynomial::variable(aff, "t0");
  Polynomial z = Polynomial::variable(aff, "z0");
  auto x = [&](std::size_t i) { return Polynomial::variable(aff, 2 + i); };

  // z * x and z * (b0 + t b1), written without denominators.
  std::vector<Polynomial> scaled, moved;
  for (std::size_t i = 0; i < nx; ++i) scaled.push_back(z * x(i));
  moved.push_back(z * x(0) + x(a) - t * x(a));
  for (std::size_t i = 1; i < nx; ++i) moved.push_back(i < a ? z * x(i) : t * z * x(i));
  Polynomial f = cd.f();
  Polynomial diff = compose(f, aff, scaled) - compose(f, aff, moved);

  Expansion out;
  const std::size_t tv = 0;
  const std::size_t zv = 1;
  Polynomial g1 = taylor_shift_coefficient(diff, tv, 1);
  for (unsigned r = 1; r <= cd.degree(); ++r) {
    if (!taylor_shift_coefficient(diff, tv, r).is_zero()) {
      out.order = r;
      break;
    }
  }

  RingPtr hom = make_ring(AmbientSpace({{"z", 2, true}, {"x", nx, true}}), cd.field);
  out.g1 = Polynomial(hom);
  out.nonzero = !g1.is_zero();
  if (!out.nonzero) return out;
  g1 = g1.divide_by_power(zv, g1.common_power(zv));
  out.z_degree = g1.degree_in(zv);

  std::vector<Term> terms;
  for (const auto& term : g1.terms()) {
    Monomial m;
    unsigned k = term.monomial[zv];
    m.set(0, out.z_degree - k);
    m.set(1, k);
    for (std::size_t i = 0; i < nx; ++i) m.set(2 + i, term.monomial[2 + i]);
    terms.push_back({m, term.coefficient});
  }
  out.g1 = Polynomial::from_terms(hom, std::move(terms));

  std::vector<Polynomial> slices;
  for (unsigned k = 0; k <= out.z_degree; ++k) slices.push_back(g1.coefficient_of(zv, k));
  out.z_dependent = !all_proportional(slices);
  return out;
}

Polynomial directional_oracle(const ConeData& cd) {
  const std::size_t a = static_cast<std::size_t>(cd.a());
  const std::size_t nx = static_cast<std::size_t>(cd.n + 2);
  RingPtr hom = make_ring(AmbientSpace({{"z", 2, true}, {"x", nx, true}}), cd.field);
  std::vector<Polynomial> embed;
  for (std::size_t i = 0; i < nx; ++i) embed.push_back(Polynomial::variable(hom, 2 + i));
  Polynomial f = compose(cd.f(), hom, embed);
  Polynomial z0 = Polynomial::variable(hom, "z0");
  Polynomial z1 = Polynomial::variable(hom, "z1");
  Polynomial along(hom);
  for (std::size_t i = a; i < nx; ++i) along += embed[i] * f.derivative(2 + i);
  Polynomial across = embed[a] * f.derivative(2);
  // -(b1 . grad f) * z with b1 = (x_a / z)(z e_a - e0) + sum_{i>a} x_i e_i.
  return -(z1 * along - z0 * across);
}

GenericityReport check_genericity(const Engine& engine, const ConeData& cd) {
  GenericityReport out;
  out.hypersurface = check_smoothness(engine, cd, Section::whole);
  out.fixed_part = check_smoothness(engine, cd, Section::fixed_part);
  out.complement = check_smoothness(engine, cd, Section::complement);
  out.expansion = expansion_g(cd);
  return out;
}

std::vector<std::vector<Scalar>> build_gtz(const ConeData& cd, const Scalar& t, const Scalar& z) {
  if (t.is_zero()) throw std::invalid_argument("build_gtz: t must be nonzero");
  if (z.is_zero()) throw std::invalid_argument("build_gtz: z must be a steady point (nonzero)");
  const std::size_t nx = static_cast<std::size_t>(cd.n + 2);
  const std::size_t a = static_cast<std::size_t>(cd.a());
  std::vector<std::vector<Scalar>> m(nx, std::vector<Scalar>(nx, cd.field.zero()));
  for (std::size_t j = 0; j < nx; ++j) {
    if (j < a) {
      m[j][j] = cd.field.one();
    } else if (j == a) {
      m[a][a] = t * z;
      m[0][a] = -t;
    } else {
      m[j][j] = t;
    }
  }
  return m;
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  Scalar det = m[0][0].field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return m[0][0].field().zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::string to_string(DeltaSpec::Kind kind) {
  switch (kind) {
    case DeltaSpec::Kind::linear_section:
      return "linear-section-cycle";
    case DeltaSpec::Kind::point_set:
      return "point-set";
    case DeltaSpec::Kind::custom:
      return "custom-ideal";
  }
  return "custom-ideal";
}

namespace {

DeltaSpec finish_delta(const Engine& engine, const ConeData& cd, DeltaSpec d) {
  d.dimension = engine.hilbert(d.ideal).dimension;
  d.codim_in_x = cd.n - d.dimension;
  return d;
}

}  // namespace

DeltaSpec delta_points(const Engine& engine, const ConeData& cd, const std::vector<std::vector<long>>& points,
                       std::string label) {
  if (points.empty()) throw std::invalid_argument("delta: no points given");
  RingPtr ring = cd.x_ring();
  std::vector<Ideal> parts;
  for (const auto& p : points) {
    if (p.size() != static_cast<std::size_t>(cd.n + 2))
      throw std::invalid_argument("delta: point has " + std::to_string(p.size()) + " coordinates, expected " +
                                  std::to_string(cd.n + 2));
    std::vector<Scalar> coords;
    for (long c : p) coords.push_back(cd.field.from_int(c));
    parts.emplace_back(ring, point_equations(ring, "x", coords));
  }
  DeltaSpec d;
  d.kind = DeltaSpec::Kind::point_set;
  d.label = std::move(label);
  d.ideal = parts.size() == 1 ? parts[0] : engine.intersect(parts);
  return finish_delta(engine, cd, std::move(d));
}

DeltaSpec delta_custom(const Engine& engine, const ConeData& cd, const std::vector<std::string>& generators,
                       std::string label) {
  DeltaSpec d;
  d.kind = DeltaSpec::Kind::custom;
  d.label = std::move(label);
  d.ideal = Subscheme::from_ideal(engine, Ideal::parse(cd.x_ring(), generators)).ideal();
  if (!d.ideal.is_homogeneous()) throw std::invalid_argument("delta: generators must be homogeneous");
  return finish_delta(engine, cd, std::move(d));
}

DeltaSpec delta_linear_section(const Engine& engine, const ConeData& cd, Section on, int codim,
                               const std::string& salt) {
  RingPtr ring = cd.x_ring();
  ScalarSampler sampler(cd.field, engine.derive_seed("delta-section:" + salt));
  Ideal ideal = section_ideal(cd, on);
  std::vector<Polynomial> forms;
  for (int k = 0; k < codim; ++k) {
    Polynomial form(ring);
    for (std::size_t v = 0; v < ring->num_vars(); ++v) {
      Scalar c = cd.field.is_prime() ? sampler.next() : cd.field.from_int(sampler.next_int(-9, 9));
      form += Polynomial::variable(ring, v).scaled(c);
    }
    forms.push_back(form);
  }
  DeltaSpec d;
  d.kind = DeltaSpec::Kind::linear_section;
  d.label = "random " + std::to_string(codim) + "-fold linear section (" + salt + ")";
  d.ideal = Subscheme::from_ideal(engine, ideal.plus(forms)).ideal();
  return finish_delta(engine, cd, std::move(d));
}

std::optional<DeltaSpec> delta_random_point(const Engine& engine, const ConeData& cd, Section on,
                                            const std::string& salt) {
  if (!cd.field.is_prime()) return std::nullopt;
  Subscheme locus = Subscheme::from_ideal(engine, section_ideal(cd, on));
  auto pt = random_point(engine, locus, "delta-point:" + salt);
  if (!pt) return std::nullopt;
  RingPtr ring = cd.x_ring();
  DeltaSpec d;
  d.kind = DeltaSpec::Kind::point_set;
  d.label = "random point " + describe_point(*pt);
  d.ideal = Ideal(ring, point_equations(ring, "x", pt->at("x")));
  return finish_delta(engine, cd, std::move(d));
}

bool delta_on(const Engine& engine, const ConeData& cd, const DeltaSpec& delta, Section section) {
  if (delta.dimension < 0) return false;
  return engine.radical_subset(section_ideal(cd, section), delta.ideal);
}

}  // namespace conekit
