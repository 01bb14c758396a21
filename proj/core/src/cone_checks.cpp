#include "conekit/cone_checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "conekit/poly_io.hpp"

namespace conekit {

namespace {

/// Generators are listed up to this many; the rest are counted.
constexpr std::size_t kMaxPrintedGenerators = 12;

std::string print_ideal(const Ideal& ideal) {
  std::ostringstream os;
  os << "(";
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size() && i < kMaxPrintedGenerators; ++i)
    os << (i ? ", " : "") << print_polynomial(gens[i]);
  if (gens.size() > kMaxPrintedGenerators) os << ", ... " << gens.size() - kMaxPrintedGenerators << " more";
  os << ")";
  return os.str();
}

std::string dim_deg(const Engine& engine, const Subscheme& s) {
  HilbertData h = s.hilbert(engine);
  return "dim " + std::to_string(h.dimension) + ", deg " + std::to_string(h.degree);
}

Polynomial block_var(const RingPtr& ring, const std::string& block, int i) {
  return Polynomial::variable(ring, ring->ambient().var(block, static_cast<std::size_t>(i)));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CheckOutcome verdict(const std::string& id, bool ok) {
  CheckOutcome out;
  out.id = id;
  out.status = ok ? Status::pass : Status::fail;
  return out;
}

CheckOutcome not_applicable(const std::string& id, std::string why) {
  CheckOutcome out;
  out.id = id;
  out.status = Status::not_applicable;
  out.add("reason", std::move(why));
  return out;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
    case Status::not_applicable: return "NOT-APPLICABLE";
    case Status::rejected_genericity: return "REJECTED-GENERICITY";
  }
  return "?";
}

std::optional<Status> parse_status(const std::string& text) {
  for (Status s : {Status::pass, Status::fail, Status::inconclusive, Status::not_applicable,
                   Status::rejected_genericity})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

std::string to_string(DeltaRequest::Kind kind) {
  switch (kind) {
    case DeltaRequest::Kind::points: return "points";
    case DeltaRequest::Kind::ideal: return "ideal";
    case DeltaRequest::Kind::linear_section: return "linear-section";
    case DeltaRequest::Kind::random_point: return "random-point";
  }
  return "?";
}

std::optional<DeltaSpec> realize(const Engine& engine, const ConeData& cd, const DeltaRequest& request) {
  switch (request.kind) {
    case DeltaRequest::Kind::points: return delta_points(engine, cd, request.points, request.label);
    case DeltaRequest::Kind::ideal: return delta_custom(engine, cd, request.generators, request.label);
    case DeltaRequest::Kind::linear_section: {
      DeltaSpec d = delta_linear_section(engine, cd, request.on, request.codim, request.label);
      d.label = request.label;
      return d;
    }
    case DeltaRequest::Kind::random_point: {
      auto d = delta_random_point(engine, cd, request.on, request.label);
      if (d) d->label = request.label;
      return d;
    }
  }
  return std::nullopt;
}

std::vector<DeltaRequest> default_deltas(const ConeData& cd) {
  std::vector<DeltaRequest> out;
  auto pts = [](std::string label, std::vector<long> p) {
    DeltaRequest r;
    r.kind = DeltaRequest::Kind::points;
    r.label = std::move(label);
    r.points = {std::move(p)};
    return r;
  };
  auto random = [](std::string label, Section on) {
    DeltaRequest r;
    r.kind = DeltaRequest::Kind::random_point;
    r.label = std::move(label);
    r.on = on;
    return r;
  };
  auto ideal = [](std::string label, std::vector<std::string> gens) {
    DeltaRequest r;
    r.kind = DeltaRequest::Kind::ideal;
    r.label = std::move(label);
    r.generators = std::move(gens);
    return r;
  };
  const bool prime = cd.field.is_prime();
  if (cd.name == "quadric-s2-h1") {
    out.push_back(prime ? random("point-on-X", Section::whole) : pts("point-on-X", {2, 3, 4, 6}));
    out.push_back(prime ? random("point-on-V", Section::fixed_part) : pts("point-on-V", {1, 0, 3, 0}));
    out.push_back(ideal("line-on-X", {"x0", "x1"}));
  } else if (cd.name == "cubic-3f-h1" || cd.name == "cubic-3f-h2") {
    out.push_back(prime ? random("point-on-X", Section::whole) : pts("point-on-X", {1, 0, -1, 1, -1}));
    out.push_back(prime ? random("point-on-V", Section::fixed_part) : pts("point-on-V", {1, -1, 0, 0, 0}));
    // Lies in V^1 when h = 1.
    out.push_back(ideal("line-on-X", {"x0 + x1", "x2 + x3", "x4"}));
  } else if (prime) {
    out.push_back(random("point-on-X", Section::whole));
    out.push_back(random("point-on-V", Section::fixed_part));
  }
  return out;
}

CheckOutcome combine(const std::string& id, const std::vector<std::pair<std::string, CheckOutcome>>& parts) {
  CheckOutcome out;
  out.id = id;
  bool any_fail = false, any_inconclusive = false, any_pass = false;
  for (const auto& [label, part] : parts) {
    any_fail |= part.status == Status::fail;
    any_inconclusive |= part.status == Status::inconclusive;
    any_pass |= part.status == Status::pass;
    out.randomized |= part.randomized;
    out.add(label + ".status", to_string(part.status));
    for (const auto& [k, v] : part.witnesses) out.add(label + "." + k, v);
  }
  if (any_fail)
    out.status = Status::fail;
  else if (any_inconclusive)
    out.status = Status::inconclusive;
  else if (any_pass)
    out.status = Status::pass;
  else
    out.status = Status::not_applicable;
  if (parts.empty()) out.add("reason", "no delta supplied");
  return out;
}

CheckSuite::CheckSuite(const Engine& engine, ConeData cd, std::vector<DeltaSpec> deltas)
    : engine_(engine), cd_(cd), deltas_(std::move(deltas)), builder_(engine, std::move(cd)) {}

const GenericityReport& CheckSuite::genericity() {
  if (!genericity_) genericity_ = check_genericity(engine_, cd_);
  return *genericity_;
}

CheckOutcome CheckSuite::run(const std::string& id) {
  if (!find_check_by_id(id)) throw std::invalid_argument("unknown check id: " + id);
  const GenericityReport& gen = genericity();
  if (!gen.accepted()) {
    CheckOutcome out;
    out.id = id;
    out.status = Status::rejected_genericity;
    out.add("hypersurface_smooth", yes_no(gen.hypersurface.smooth()));
    out.add("expansion_order", std::to_string(gen.expansion.order));
    out.add("expansion_nonzero", yes_no(gen.expansion.nonzero));
    out.add("expansion_z_dependent", yes_no(gen.expansion.z_dependent));
    return out;
  }
  try {
    if (id == "family_graph") return family_graph();
    if (id == "diagonal_component") return diagonal_component();
    if (id == "first_order_expansion") return first_order_expansion();
    if (id == "covering_degree") return covering_degree();
    if (id == "correspondence_image") return correspondence_image();
    if (id == "special_member") return special_member();
    if (id == "projection_section") return projection_section();
    if (id == "join_support") return join_support();
    if (id == "degree_shadow") return degree_shadow();
  } catch (const ResourceError& e) {
    CheckOutcome out;
    out.id = id;
    out.status = Status::inconclusive;
    out.add("resource_cap", e.what());
    return out;
  }
  throw std::logic_error("check id without implementation: " + id);
}

// ------------------------------------------------------------ scheme checks

CheckOutcome CheckSuite::family_graph() {
  const int n = cd_.n;
  const Subscheme& graph = builder_.omega_graph();
  bool equal = engine_.ideal_equal(builder_.omega().ideal(), graph.ideal());
  int dim = graph.dimension(engine_);

  Subscheme unsteady = fiber_projected(engine_, graph, {{"t", p1_point(cd_.field, 1, 1)}, {"z", p1_point(cd_.field, 1, 0)}});
  Subscheme e0 = builder_.e(0);
  bool e0_equal = engine_.ideal_equal(unsteady.ideal(), e0.ideal().to_ring(unsteady.ring()));

  // Steady (t, z) with t outside {0, 1, infinity}, then a random x.
  ScalarSampler sampler(cd_.field, engine_.derive_seed("family_graph|" + cd_.name));
  Scalar t = sampler.next_nonzero();
  while (t == cd_.field.one()) t = sampler.next_nonzero();
  Scalar z = sampler.next_nonzero();
  BlockPoint steady_at{{"t", {cd_.field.one(), t}}, {"z", {cd_.field.one(), z}}};
  Subscheme steady = fiber_projected(engine_, graph, steady_at);
  int steady_dim = steady.dimension(engine_);
  std::vector<Scalar> x;
  for (int i = 0; i < n + 2; ++i) x.push_back(sampler.next_nonzero());
  Subscheme over_x = fiber_projected(engine_, steady, {{"x", x}});
  HilbertData hx = over_x.hilbert(engine_);

  bool ok = equal && dim == n + 3 && e0_equal && steady_dim == n + 1 && hx.dimension == 0 && hx.degree == 1;
  CheckOutcome out = verdict("family_graph", ok);
  out.randomized = true;
  out.add("explicit_equals_graph", yes_no(equal));
  out.add("dimension", std::to_string(dim) + " (expected " + std::to_string(n + 3) + ")");
  out.add("unsteady_fiber_equals_E0", yes_no(e0_equal));
  out.add("steady_fiber", "dim " + std::to_string(steady_dim) + " (expected " + std::to_string(n + 1) + ")");
  out.add("steady_x_fiber", "dim " + std::to_string(hx.dimension) + ", length " + std::to_string(hx.degree) +
                                " (expected a single point)");
  if (!equal) out.add("explicit_ideal", print_ideal(builder_.omega().ideal()));
  if (!e0_equal) out.add("unsteady_fiber_ideal", print_ideal(unsteady.ideal()));
  return out;
}

CheckOutcome CheckSuite::diagonal_component() {
  Subscheme one = builder_.sigma_fiber(p1_point(cd_.field, 1, 1));
  Subscheme diag = builder_.diagonal_in_fiber(one.ring());
  Ideal cut = builder_.diagonal_equations(one.ring());
  ComponentCheck cc = is_component(engine_, one, diag, cut);

  CheckOutcome out = verdict("diagonal_component", cc.is_component());
  out.add("contained", yes_no(cc.contained));
  out.add("maximal", yes_no(cc.maximal));
  out.add("fiber", dim_deg(engine_, one));
  out.add("component", dim_deg(engine_, diag));
  if (cc.is_component()) {
    // The constant a: exact when the rest of the fiber has lower dimension.
    Subscheme rest = Subscheme::trusted(engine_.saturate(one.ideal(), cut));
    HilbertData hr = rest.hilbert(engine_), hs = one.hilbert(engine_), hd = diag.hilbert(engine_);
    out.add("rest", "dim " + std::to_string(hr.dimension) + ", deg " + std::to_string(hr.degree));
    if (hr.dimension < hd.dimension && hd.degree > 0 && hs.degree % hd.degree == 0)
      out.add("constant_a", std::to_string(hs.degree / hd.degree));
    else if (hr.dimension == hd.dimension && hd.degree > 0 && (hs.degree - hr.degree) % hd.degree == 0)
      out.add("constant_a", std::to_string((hs.degree - hr.degree) / hd.degree));
    else
      out.add("constant_a", "undetermined");
  } else {
    out.add("fiber_ideal", print_ideal(one.ideal()));
  }
  return out;
}

CheckOutcome CheckSuite::first_order_expansion() {
  const Expansion& e = genericity().expansion;
  Polynomial oracle = directional_oracle(cd_);
  bool matches = e.nonzero && e.g1.monic() == oracle.monic();
  CheckOutcome out = verdict("first_order_expansion", e.generic() && matches);
  out.add("order", std::to_string(e.order));
  out.add("z_degree", std::to_string(e.z_degree));
  out.add("z_dependent", yes_no(e.z_dependent));
  out.add("g1", print_polynomial(e.g1));
  out.add("matches_directional_derivative", yes_no(matches));
  return out;
}

CheckOutcome CheckSuite::covering_degree() {
  CheckOutcome out;
  out.id = "covering_degree";
  out.randomized = true;
  const Expansion& e = genericity().expansion;
  const long expected = cd_.degree();
  if (!cd_.field.is_prime()) {
    out.status = Status::inconclusive;
    out.add("sampling", "random points of X need a prime field");
    return out;
  }
  RingPtr xr = cd_.x_ring();
  Subscheme x_scheme = Subscheme::trusted(Ideal(xr, {cd_.f()}));
  RingPtr zr = make_ring(AmbientSpace({{"z", 2, true}}), cd_.field);
  const AmbientSpace& amb = e.g1.ring()->ambient();

  std::vector<long> counts;
  for (int attempt = 0; attempt < 4 * kCoveringSamples && static_cast<int>(counts.size()) < kCoveringSamples;
       ++attempt) {
    auto pt = random_point(engine_, x_scheme, "covering|" + std::to_string(attempt));
    if (!pt) continue;
    const auto& coords = pt->at("x");
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < amb.num_vars(); ++v) {
      if (v < 2)
        images.push_back(Polynomial::variable(zr, v));
      else
        images.push_back(Polynomial::constant(zr, coords[v - 2]));
    }
    Polynomial fiber = compose(e.g1, zr, images);
    // Points where g1 vanishes for every z are the branch locus; skip.
    if (fiber.is_zero()) continue;
    HilbertData h = engine_.hilbert(Ideal(zr, {fiber}));
    counts.push_back(h.dimension == 0 ? h.degree : -1);
  }
  std::string list;
  for (long c : counts) list += (list.empty() ? "" : ", ") + std::to_string(c);
  out.add("fiber_lengths", "[" + list + "]");
  out.add("expected", std::to_string(expected));
  out.add("g1_z_degree", std::to_string(e.z_degree));
  if (static_cast<int>(counts.size()) < kCoveringSamples) {
    out.status = Status::inconclusive;
    out.add("sampling", "fewer than " + std::to_string(kCoveringSamples) + " usable points");
    return out;
  }
  bool ok = std::all_of(counts.begin(), counts.end(), [&](long c) { return c == expected; });
  out.status = ok ? Status::pass : Status::fail;
  return out;
}

// --------------------------------------------------------- delta checks

namespace {

/// Degree-1 elements of the reduced basis: a basis of the linear part of
/// a saturated ideal.
std::vector<Polynomial> linear_part(const Engine& engine, const Ideal& ideal) {
  std::vector<Polynomial> out;
  for (const auto& g : engine.groebner(ideal).basis)
    if (g.total_degree() == 1 && g.is_homogeneous()) out.push_back(g);
  return out;
}

/// Dense form of degree d with random coefficients.
Polynomial random_form(const RingPtr& ring, unsigned d, ScalarSampler& sampler) {
  const std::size_t nv = ring->num_vars();
  std::vector<Term> terms;
  std::vector<unsigned> e(nv, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == nv) {
      e[v] = left;
      Monomial m;
      for (std::size_t i = 0; i < nv; ++i) m.set(i, e[i]);
      terms.push_back(Term{m, sampler.next()});
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

CheckOutcome CheckSuite::correspondence_image() {
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (const auto& d : deltas_) parts.emplace_back(d.label, correspondence_for(d));
  return combine("correspondence_image", parts);
}

CheckOutcome CheckSuite::correspondence_for(const DeltaSpec& delta) {
  const std::string id = "correspondence_image";
  if (!delta_on(engine_, cd_, delta, Section::whole)) return not_applicable(id, "delta is not on X");
  const int n = cd_.n, r = delta.codim_in_x;
  RingPtr pair = builder_.pair_ring();
  Ideal over = builder_.e(0).ideal() + move_to_block(delta.ideal, pair, "x");
  Subscheme image = project(engine_, Subscheme::from_ideal(engine_, over), {"x"});
  Polynomial fy = move_to_block(cd_.f(), image.ring(), "y");
  Subscheme support = Subscheme::from_ideal(engine_, image.ideal().plus({fy}));
  std::vector<Polynomial> linear = linear_part(engine_, image.ideal());
  std::vector<Polynomial> section_gens = linear;
  section_gens.push_back(fy);
  Subscheme section = Subscheme::from_ideal(engine_, Ideal(image.ring(), section_gens));
  int section_dim = section.dimension(engine_);

  CheckOutcome out;
  out.id = id;
  out.add("codim_in_X", std::to_string(r));
  out.add("image_in_P", dim_deg(engine_, image));
  out.add("support_on_X", dim_deg(engine_, support));
  out.add("linear_forms", print_ideal(Ideal(image.ring(), linear)));
  out.add("linear_section", "dim " + std::to_string(section_dim) + " (expected " + std::to_string(n - r) + ")");
  HilbertData hi = image.hilbert(engine_), hs = support.hilbert(engine_);
  if (hs.dimension > n - r) {
    // e.g. a line through e0 lying on X: the class is still defined, but
    // a support shadow cannot see it.
    out.status = Status::inconclusive;
    out.add("excess", "the image meets X in dimension " + std::to_string(hs.dimension) + " > " +
                          std::to_string(n - r));
    out.add("support_ideal", print_ideal(support.ideal()));
    return out;
  }
  if (section_dim == n - r) {
    out.status = Status::pass;
    out.add("shadow", "support inside a linear section of X of codimension " + std::to_string(r));
    return out;
  }
  // Nonlinear image: fall back to the class shadow, a proper intersection
  // of the image with X whose degree is deg(image) * deg(X).
  bool proper = hi.dimension == n + 1 - r && hs.dimension == n - r &&
                hs.degree == hi.degree * static_cast<long>(cd_.degree());
  out.status = proper ? Status::pass : Status::fail;
  out.add("shadow", "proper intersection of the image with X, degree multiple of deg(X)");
  if (!proper) out.add("support_ideal", print_ideal(support.ideal()));
  return out;
}

CheckOutcome CheckSuite::special_member() {
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (const auto& d : deltas_) parts.emplace_back(d.label, special_member_for(d));
  return combine("special_member", parts);
}

CheckOutcome CheckSuite::special_member_for(const DeltaSpec& delta) {
  const std::string id = "special_member";
  if (!delta_on(engine_, cd_, delta, Section::whole)) return not_applicable(id, "delta is not on X");
  const int bound = cd_.n - cd_.h;
  if (delta.dimension >= bound)
    return not_applicable(id, "dim(delta) = " + std::to_string(delta.dimension) + " is not below n-h = " +
                                  std::to_string(bound));
  Subscheme family = builder_.cone_family(delta);
  FamilyEnd end0 = builder_.family_end(family, p1_point(cd_.field, 1, 0));
  FamilyEnd end1 = builder_.family_end(family, p1_point(cd_.field, 1, 1));

  const RingPtr& yr = end0.support.ring();
  std::vector<std::string> outside;
  for (int i = cd_.a(); i <= cd_.n + 1; ++i) {
    Polynomial y = block_var(yr, "y", i);
    if (!engine_.radical_member(y, end0.support.ideal())) outside.push_back(print_polynomial(y));
  }
  bool ok = end0.dominant() && outside.empty();
  CheckOutcome out = verdict(id, ok);
  out.add("dominant", yes_no(end0.dominant()));
  if (!end0.dominant()) out.add("t_residual", print_ideal(end0.t_residual));
  out.add("member_t0", dim_deg(engine_, end0.support));
  out.add("member_t0_ideal", print_ideal(end0.support.ideal()));
  if (!outside.empty()) {
    std::string list;
    for (const auto& s : outside) list += (list.empty() ? "" : ", ") + s;
    out.add("cutting_forms_outside_radical", list);
  }
  out.add("member_t1", dim_deg(engine_, end1.support));
  if (delta.dimension > 0) {
    Ideal dy = move_to_block(delta.ideal, end1.support.ring(), "y");
    out.add("member_t1_contains_delta", yes_no(engine_.radical_subset(end1.support.ideal(), dy)));
  } else {
    out.add("member_t1_contains_delta", "not asserted for points");
  }
  return out;
}

CheckOutcome CheckSuite::projection_section() {
  const Subscheme& gamma = builder_.gamma();
  Subscheme g1 = builder_.gamma1(), g2 = builder_.gamma2();
  const int expected = cd_.a();
  bool unioned = union_certify(engine_, gamma, {g1, g2});
  int d1 = g1.dimension(engine_), d2 = g2.dimension(engine_);
  MultiplicityReport m1 = component_multiplicity(engine_, gamma, g1, {g2});
  MultiplicityReport m2 = component_multiplicity(engine_, gamma, g2, {g1});
  bool dominant1 = project(engine_, g1, {"x", "y"}).ideal().is_zero();
  Polynomial z1 = Polynomial::variable(g2.ring(), "z1");
  bool over_zero2 = engine_.radical_member(z1, g2.ideal());
  bool dominant2 = engine_.radical_member(z1, g1.ideal());

  bool ok = unioned && d1 == expected && d2 == expected && m1.multiplicity == 1 && m2.multiplicity == 1 &&
            dominant1 && over_zero2 && !dominant2;
  CheckOutcome out = verdict("projection_section", ok);
  out.add("union_equals_gamma", yes_no(unioned));
  out.add("first_component", "dim " + std::to_string(d1) + ", multiplicity " + m1.multiplicity.get_str());
  out.add("second_component", "dim " + std::to_string(d2) + ", multiplicity " + m2.multiplicity.get_str());
  out.add("expected_dimension", std::to_string(expected));
  out.add("first_dominates_upsilon", yes_no(dominant1));
  out.add("second_over_z_zero", yes_no(over_zero2));
  if (!unioned) out.add("gamma_ideal", print_ideal(gamma.ideal()));
  return out;
}

CheckOutcome CheckSuite::join_support() {
  if (cd_.h != 1) return not_applicable("join_support", "stated for h = 1");
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (const auto& d : deltas_) parts.emplace_back(d.label, join_for(d));
  return combine("join_support", parts);
}

CheckOutcome CheckSuite::join_for(const DeltaSpec& delta) {
  const std::string id = "join_support";
  if (!delta_on(engine_, cd_, delta, Section::fixed_part)) return not_applicable(id, "delta is not in V^1");
  Subscheme con = builder_.con_h(delta);
  RingPtr xr = cd_.x_ring();
  Subscheme joined = join(engine_, Subscheme::from_ideal(engine_, delta.ideal), builder_.upsilon_line());
  Subscheme cut = Subscheme::from_ideal(engine_, joined.ideal().plus({cd_.f()}));
  bool equal = engine_.radical_equal(con.ideal(), cut.ideal().to_ring(con.ring()));
  CheckOutcome out = verdict(id, equal);
  out.add("cone_image", dim_deg(engine_, con));
  out.add("join_cut_by_X", dim_deg(engine_, cut));
  if (!equal) {
    out.add("cone_image_ideal", print_ideal(con.ideal()));
    out.add("join_cut_ideal", print_ideal(cut.ideal()));
  }
  return out;
}

CheckOutcome CheckSuite::degree_shadow() {
  std::vector<std::pair<std::string, CheckOutcome>> parts;
  for (const auto& d : deltas_) parts.emplace_back(d.label, degree_shadow_for(d));
  return combine("degree_shadow", parts);
}

CheckOutcome CheckSuite::degree_shadow_for(const DeltaSpec& delta) {
  const std::string id = "degree_shadow";
  if (!delta_on(engine_, cd_, delta, Section::fixed_part)) return not_applicable(id, "delta is not in V^h");
  const int n = cd_.n, a = cd_.a();
  const long deg_x = cd_.degree();
  CheckOutcome out;
  out.id = id;

  Subscheme over = builder_.ih_over(delta);
  Subscheme con = project(engine_, over, {"z", "y"});
  HilbertData ho = over.hilbert(engine_), hc = con.hilbert(engine_);
  out.add("cone_image", dim_deg(engine_, con));

  // Push-forward degree k: the class of I_h over delta against D generic
  // x-hyperplanes counts k * deg(con) points.
  long k = 0;
  if (ho.dimension == hc.dimension) {
    std::vector<int> want{1, n + 1 - hc.dimension, a - 1};
    for (const auto& [e, c] : ho.multidegree)
      if (e == want) k = c;
    if (hc.degree <= 0 || k % hc.degree != 0) {
      out.status = Status::inconclusive;
      out.add("pushforward", "class coefficient " + std::to_string(k) + " not divisible by deg(con)");
      return out;
    }
    k /= hc.degree;
  }
  out.add("pushforward_degree", std::to_string(k));
  if (k == 0) {
    out.status = Status::inconclusive;
    out.add("pushforward", "positive-dimensional fibres over the image; the cycle pushes forward to zero");
    return out;
  }

  RingPtr cr = con.ring();
  std::vector<Polynomial> cutting;
  for (int i = a; i <= n + 1; ++i) cutting.push_back(block_var(cr, "x", i));
  Subscheme meet = Subscheme::from_ideal(engine_, con.ideal().plus(cutting));
  HilbertData hm = meet.hilbert(engine_);
  const int dim_v = n - cd_.h;
  const int expected_dim = hc.dimension + dim_v - n;
  out.add("intersection", "dim " + std::to_string(hm.dimension) + ", deg " + std::to_string(hm.degree));
  out.add("expected_dimension", std::to_string(expected_dim));
  if (hm.dimension > expected_dim) {
    out.status = Status::inconclusive;
    out.add("excess", "V^h meets the cone image in dimension " + std::to_string(hm.dimension) + " > " +
                          std::to_string(expected_dim) + "; the degree shadow needs a proper intersection");
    out.add("intersection_ideal", print_ideal(meet.ideal()));
    return out;
  }

  Ideal delta_c = delta.ideal.to_ring(cr);
  Subscheme rest = Subscheme::trusted(engine_.saturate(meet.ideal(), delta_c));
  HilbertData hr = rest.hilbert(engine_), hd = engine_.hilbert(delta_c);
  long delta_part = hd.dimension == hm.dimension ? (hr.dimension == hm.dimension ? hm.degree - hr.degree : hm.degree)
                                                 : 0;
  if (hd.degree <= 0 || delta_part % hd.degree != 0) {
    out.status = Status::inconclusive;
    out.add("delta_part_degree", std::to_string(delta_part) + " not divisible by deg(delta)");
    return out;
  }
  long m = k * (delta_part / hd.degree);
  out.add("delta_multiplicity", std::to_string(m) + " (expected " + std::to_string(deg_x) + ")");
  out.add("residual", "dim " + std::to_string(hr.dimension) + ", deg " + std::to_string(hr.degree));

  bool residual_ok = true;
  if (hr.dimension >= 0) {
    std::vector<Polynomial> planes;
    for (const auto& l : linear_part(engine_, rest.ideal())) {
      bool moving_only = true;
      for (std::size_t v = 0; v < static_cast<std::size_t>(a); ++v) moving_only &= !l.involves(v);
      if (!moving_only) planes.push_back(l);
    }
    residual_ok = !planes.empty();
    out.add("residual_plane_forms", print_ideal(Ideal(cr, planes)));
    if (!residual_ok) out.add("residual_ideal", print_ideal(rest.ideal()));
  }
  long sum = k * (delta_part + (hr.dimension == hm.dimension ? hr.degree : 0));
  out.add("degree_sum", std::to_string(k * hm.degree) + " = " + std::to_string(sum));

  if (m != deg_x)
    out.status = Status::fail;
  else if (!residual_ok)
    out.status = Status::inconclusive;
  else
    out.status = Status::pass;
  return out;
}

// ------------------------------------------------------------ engine suite

SoundnessResult engine_soundness(const Engine& engine, int trials_per_shape) {
  SoundnessResult res;
  const Field field = Field::prime(kDefaultPrime);
  struct Shape {
    std::size_t vars;
    std::vector<unsigned> degrees;
  };
  const std::vector<Shape> shapes{{4, {2, 3}},    {4, {1, 2, 3}}, {4, {2, 2, 2}},
                                  {5, {2, 3}},    {5, {1, 2, 2}}, {5, {2, 2, 3}}};
  auto fail = [&](const std::string& what) {
    res.ok = false;
    res.failures.push_back(what);
  };
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const Shape& shape = shapes[s];
    RingPtr ring = make_ring(AmbientSpace({{"x", shape.vars, true}}), field);
    for (int trial = 0; trial < trials_per_shape; ++trial) {
      ++res.cases;
      std::string tag = "P" + std::to_string(shape.vars - 1) + " shape " + std::to_string(s) + " trial " +
                        std::to_string(trial);
      ScalarSampler sampler(field, engine.derive_seed("soundness|" + tag));
      std::vector<Polynomial> gens;
      long bezout = 1;
      for (unsigned d : shape.degrees) {
        Polynomial g = random_form(ring, d, sampler);
        gens.push_back(g);
        bezout *= d;
      }
      Ideal ideal(ring, gens);
      GroebnerBasis gb = engine.groebner(ideal);
      // Buchberger criterion: every S-polynomial reduces to zero.
      for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
          const Polynomial& f = gb.basis[i];
          const Polynomial& g = gb.basis[j];
          Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
          Polynomial sp = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
                          g.times_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
          if (!engine.normal_form(sp, gb).is_zero()) fail(tag + ": S-polynomial does not reduce to zero");
        }
      for (const auto& g : gens)
        if (!engine.contains(gb, g)) fail(tag + ": generator not in its own ideal");
      Ideal from_basis(ring, gb.basis);
      if (!engine.ideal_equal(ideal, from_basis)) fail(tag + ": basis and generators differ");
      Polynomial outside = random_form(ring, 1, sampler);
      if (engine.contains(gb, outside)) fail(tag + ": random linear form in a proper complete intersection");
      Ideal sat = engine.saturate(ideal, outside);
      if (!engine.ideal_equal(engine.saturate(sat, outside), sat)) fail(tag + ": saturation not idempotent");
      if (!engine.ideal_equal(sat, ideal)) fail(tag + ": complete intersection not saturated");
      HilbertData h = engine.hilbert(gb);
      const int dim = static_cast<int>(shape.vars) - 1 - static_cast<int>(shape.degrees.size());
      if (h.dimension != dim || h.degree != bezout)
        fail(tag + ": dim " + std::to_string(h.dimension) + " deg " + std::to_string(h.degree) + ", expected dim " +
             std::to_string(dim) + " deg " + std::to_string(bezout));
    }
  }
  return res;
}

}  // namespace conekit
