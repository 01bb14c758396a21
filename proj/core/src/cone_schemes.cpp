#include "conekit/cone_schemes.hpp"

#include <stdexcept>

namespace conekit {

std::vector<Scalar> p1_point(const Field& field, long v0, long v1) { return {field.from_int(v0), field.from_int(v1)}; }

Polynomial move_to_block(const Polynomial& p, const RingPtr& target, const std::string& block, std::size_t keep) {
  const AmbientSpace& amb = target->ambient();
  const Block& b = amb.block(block);
  std::size_t off = amb.block_offset(amb.block_index(block));
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.ring()->num_vars(); ++i) {
    if (i < keep && i < b.size)
      images.push_back(Polynomial::variable(target, off + i));
    else
      images.push_back(Polynomial(target));
  }
  return compose(p, target, images);
}

Ideal move_to_block(const Ideal& ideal, const RingPtr& target, const std::string& block, std::size_t keep) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(move_to_block(g, target, block, keep));
  return Ideal(target, std::move(gens));
}

std::vector<Polynomial> block_minors(const RingPtr& ring, const std::string& u, const std::string& v,
                                     std::size_t lo, std::size_t hi) {
  const AmbientSpace& amb = ring->ambient();
  std::vector<Polynomial> out;
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i + 1; j < hi; ++j) {
      Polynomial ui = Polynomial::variable(ring, amb.var(u, i));
      Polynomial uj = Polynomial::variable(ring, amb.var(u, j));
      Polynomial vi = Polynomial::variable(ring, amb.var(v, i));
      Polynomial vj = Polynomial::variable(ring, amb.var(v, j));
      out.push_back(ui * vj - uj * vi);
    }
  return out;
}

ConeBuilder::ConeBuilder(const Engine& engine, ConeData cd) : engine_(engine), cd_(std::move(cd)) {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  const auto a = static_cast<std::size_t>(cd_.a());
  master_ = make_ring(AmbientSpace::master(cd_.n), cd_.field);
  pair_ = make_ring(AmbientSpace({{"x", m, true}, {"y", m, true}}), cd_.field);
  proj_ = make_ring(AmbientSpace({{"z", 2, true}, {"x", m, true}, {"y", a, true}}), cd_.field);
}

RationalMapSpec ConeBuilder::kappa() const {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  const auto a = static_cast<std::size_t>(cd_.a());
  AmbientSpace source({{"t", 2, true}, {"z", 2, true}, {"x", m, true}});
  RingPtr ring = make_ring(source, cd_.field);
  Polynomial t0 = var(ring, "t0"), t1 = var(ring, "t1"), z0 = var(ring, "z0"), z1 = var(ring, "z1");
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, source.var("x", i)); };
  std::vector<Polynomial> forms;
  forms.push_back(t0 * z1 * x(0) + (t0 - t1) * z0 * x(a));
  for (std::size_t i = 1; i < m; ++i) forms.push_back((i < a ? t0 : t1) * z1 * x(i));
  return RationalMapSpec{source, Block{"y", m, true}, std::move(forms)};
}

Ideal ConeBuilder::omega_equations() const {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  const auto a = static_cast<std::size_t>(cd_.a());
  const RingPtr& r = master_;
  const AmbientSpace& amb = r->ambient();
  Polynomial t0 = var(r, "t0"), t1 = var(r, "t1"), z0 = var(r, "z0"), z1 = var(r, "z1");
  auto x = [&](std::size_t i) { return Polynomial::variable(r, amb.var("x", i)); };
  auto y = [&](std::size_t i) { return Polynomial::variable(r, amb.var("y", i)); };
  Polynomial pix = z1 * x(0) + z0 * x(a);
  Polynomial piy = z1 * y(0) + z0 * y(a);

  std::vector<Polynomial> gens = block_minors(r, "x", "y", 1, a);
  auto moving = block_minors(r, "x", "y", a, m);
  gens.insert(gens.end(), moving.begin(), moving.end());
  for (std::size_t j = 1; j < a; ++j)
    for (std::size_t i = a; i < m; ++i) gens.push_back(t1 * x(i) * y(j) - t0 * y(i) * x(j));
  for (std::size_t j = 1; j < a; ++j) gens.push_back(pix * y(j) - piy * x(j));
  for (std::size_t j = a; j < m; ++j) gens.push_back(t1 * x(j) * piy - t0 * y(j) * pix);
  return Ideal(r, std::move(gens));
}

const Subscheme& ConeBuilder::omega() {
  if (!omega_) omega_ = Subscheme::from_ideal(engine_, omega_equations());
  return *omega_;
}

const Subscheme& ConeBuilder::omega_graph() {
  if (!omega_graph_) omega_graph_ = graph_closure(engine_, kappa());
  return *omega_graph_;
}

Subscheme ConeBuilder::e(int r) const {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  const auto a = static_cast<std::size_t>(cd_.a());
  if (r == 0) return Subscheme::trusted(Ideal(pair_, block_minors(pair_, "x", "y", 1, m)));
  if (r != cd_.h) throw std::invalid_argument("E_r is built for r = 0 or r = h only");
  std::vector<Polynomial> gens = block_minors(pair_, "x", "y", 1, a);
  const AmbientSpace& amb = pair_->ambient();
  for (std::size_t i = a; i < m; ++i) {
    gens.push_back(Polynomial::variable(pair_, amb.var("x", i)));
    gens.push_back(Polynomial::variable(pair_, amb.var("y", i)));
  }
  return Subscheme::trusted(Ideal(pair_, std::move(gens)));
}

Ideal ConeBuilder::sigma_equations() {
  Polynomial f = cd_.f();
  return omega_graph().ideal().plus({move_to_block(f, master_, "x"), move_to_block(f, master_, "y")});
}

const Subscheme& ConeBuilder::sigma() {
  if (!sigma_) sigma_ = Subscheme::from_ideal(engine_, sigma_equations());
  return *sigma_;
}

Subscheme ConeBuilder::sigma_fiber(const std::vector<Scalar>& t) {
  return fiber_projected(engine_, Subscheme::trusted(sigma_equations()), {{"t", t}});
}

Ideal ConeBuilder::diagonal_component() const {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  std::vector<Polynomial> gens{var(master_, "t1") - var(master_, "t0"), move_to_block(cd_.f(), master_, "x")};
  auto minors = block_minors(master_, "x", "y", 0, m);
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal(master_, std::move(gens));
}

const Subscheme& ConeBuilder::theta() {
  if (!theta_) {
    const auto m = static_cast<std::size_t>(cd_.n + 2);
    std::vector<Polynomial> gens{var(master_, "t1") - var(master_, "t0")};
    auto minors = block_minors(master_, "x", "y", 0, m);
    gens.insert(gens.end(), minors.begin(), minors.end());
    theta_ = Subscheme::trusted(engine_.saturate(sigma().ideal(), Ideal(master_, std::move(gens))));
  }
  return *theta_;
}

Ideal ConeBuilder::diagonal_equations(const RingPtr& ring) const {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  std::vector<Polynomial> gens{move_to_block(cd_.f(), ring, "x")};
  auto minors = block_minors(ring, "x", "y", 0, m);
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal(ring, std::move(gens));
}

Subscheme ConeBuilder::diagonal_in_fiber(const RingPtr& ring) const {
  return Subscheme::from_ideal(engine_, diagonal_equations(ring));
}

RationalMapSpec ConeBuilder::projection() const {
  const auto m = static_cast<std::size_t>(cd_.n + 2);
  const auto a = static_cast<std::size_t>(cd_.a());
  AmbientSpace source({{"z", 2, true}, {"x", m, true}});
  RingPtr ring = make_ring(source, cd_.field);
  Polynomial z0 = var(ring, "z0"), z1 = var(ring, "z1");
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, source.var("x", i)); };
  std::vector<Polynomial> forms{z1 * x(0) + z0 * x(a)};
  for (std::size_t i = 1; i < a; ++i) forms.push_back(z1 * x(i));
  return RationalMapSpec{source, Block{"y", a, true}, std::move(forms)};
}

const Subscheme& ConeBuilder::g() {
  if (!g_) g_ = graph_closure(engine_, projection());
  return *g_;
}

namespace {

std::vector<Polynomial> moving_coordinates(const RingPtr& ring, int a, int n) {
  std::vector<Polynomial> out;
  for (int i = a; i <= n + 1; ++i)
    out.push_back(Polynomial::variable(ring, ring->ambient().var("x", static_cast<std::size_t>(i))));
  return out;
}

}  // namespace

const Subscheme& ConeBuilder::gamma() {
  if (!gamma_) gamma_ = Subscheme::from_ideal(engine_, g().ideal().plus(moving_coordinates(proj_, cd_.a(), cd_.n)));
  return *gamma_;
}

Subscheme ConeBuilder::gamma1() const {
  std::vector<Polynomial> gens = moving_coordinates(proj_, cd_.a(), cd_.n);
  auto minors = block_minors(proj_, "x", "y", 0, static_cast<std::size_t>(cd_.a()));
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Subscheme::from_ideal(engine_, Ideal(proj_, std::move(gens)));
}

Subscheme ConeBuilder::gamma2() const {
  std::vector<Polynomial> gens = moving_coordinates(proj_, cd_.a(), cd_.n);
  gens.push_back(var(proj_, "z1"));
  auto minors = block_minors(proj_, "x", "y", 1, static_cast<std::size_t>(cd_.a()));
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Subscheme::from_ideal(engine_, Ideal(proj_, std::move(gens)));
}

const Subscheme& ConeBuilder::ih() {
  if (!ih_) {
    Polynomial f = cd_.f();
    Ideal ideal = g().ideal().plus(
        {move_to_block(f, proj_, "x"), move_to_block(f, proj_, "y", static_cast<std::size_t>(cd_.a()))});
    ih_ = Subscheme::from_ideal(engine_, ideal);
  }
  return *ih_;
}

FamilyEnd ConeBuilder::cone_family_end(const DeltaSpec& delta, const std::vector<Scalar>& t) {
  return family_end(cone_family(delta), t);
}

Subscheme ConeBuilder::cone_family(const DeltaSpec& delta) {
  Ideal dominant = sigma_equations() + move_to_block(delta.ideal, master_, "x");
  for (const Polynomial& g : {var(master_, "t0"), var(master_, "t1"), var(master_, "t1") - var(master_, "t0")})
    dominant = engine_.saturate(dominant, g);
  return Subscheme::from_ideal(engine_, dominant);
}

FamilyEnd ConeBuilder::family_end(const Subscheme& family, const std::vector<Scalar>& t) const {
  FamilyEnd out;
  out.t_residual = project(engine_, family, {"z", "x", "y"}).ideal();
  Subscheme at = fiber_projected(engine_, family, {{"t", t}});
  out.support = project(engine_, at, {"z", "x"});
  return out;
}

Subscheme ConeBuilder::ih_over(const DeltaSpec& delta) {
  // Same scheme as I_h cut by delta, but delta is imposed before any
  // saturation; f(y) is implied because delta lies in V^h.
  const auto a = static_cast<std::size_t>(cd_.a());
  Ideal over = g().ideal().plus({move_to_block(cd_.f(), proj_, "x"), move_to_block(cd_.f(), proj_, "y", a)}) +
               move_to_block(delta.ideal, proj_, "y", a);
  return Subscheme::from_ideal(engine_, over);
}

Subscheme ConeBuilder::con_h(const DeltaSpec& delta) { return project(engine_, ih_over(delta), {"z", "y"}); }

Subscheme ConeBuilder::upsilon_line() const {
  RingPtr ring = cd_.x_ring();
  std::vector<Polynomial> gens;
  for (int i = 1; i <= cd_.n + 1; ++i)
    if (i != cd_.a()) gens.push_back(Polynomial::variable(ring, static_cast<std::size_t>(i)));
  return Subscheme::trusted(Ideal(ring, std::move(gens)));
}

}  // namespace conekit
