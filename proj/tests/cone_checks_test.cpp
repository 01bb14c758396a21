#include <gtest/gtest.h>

#include <map>
#include <set>

#include "conekit/cone_checks.hpp"
#include "test_support.hpp"

using namespace conekit;
using conekit::testing::P;

namespace {

const Field kFp = Field::prime(kDefaultPrime);

std::string witness(const CheckOutcome& o, const std::string& key) {
  for (const auto& [k, v] : o.witnesses)
    if (k == key) return v;
  return "<missing " + key + ">";
}

std::vector<DeltaSpec> realize_all(const Engine& engine, const ConeData& cd, const std::vector<DeltaRequest>& reqs) {
  std::vector<DeltaSpec> out;
  for (const auto& r : reqs)
    if (auto d = realize(engine, cd, r)) out.push_back(*d);
  return out;
}

DeltaRequest points(std::string label, std::vector<long> p) {
  DeltaRequest r;
  r.kind = DeltaRequest::Kind::points;
  r.label = std::move(label);
  r.points = {std::move(p)};
  return r;
}

DeltaRequest ideal(std::string label, std::vector<std::string> gens) {
  DeltaRequest r;
  r.kind = DeltaRequest::Kind::ideal;
  r.label = std::move(label);
  r.generators = std::move(gens);
  return r;
}

}  // namespace

TEST(CheckCatalog, NamesAndIdsAreUniqueAndDispatch) {
  const auto& cat = check_catalog();
  ASSERT_EQ(cat.size(), 9u);
  std::set<std::string> ids, names;
  for (const auto& c : cat) {
    ids.insert(c.id);
    names.insert(c.name);
    EXPECT_FALSE(c.anchor.empty());
    EXPECT_FALSE(c.quotes.empty());
    EXPECT_EQ(find_check_by_name(c.name), &c);
  }
  EXPECT_EQ(ids.size(), 9u);
  EXPECT_EQ(names.size(), 9u);
  EXPECT_EQ(find_check_by_name("nope"), nullptr);

  Engine engine;
  CheckSuite suite(engine, preset("quadric-s2-h1", kFp), {});
  for (const auto& c : cat) EXPECT_NO_THROW(suite.run(c.id)) << c.id;
  EXPECT_THROW(suite.run("nope"), std::invalid_argument);
}

TEST(CheckCatalog, ExplainCarriesAnchorAndEveryQuote) {
  for (const auto& c : check_catalog()) {
    std::string text = explain_text(c);
    EXPECT_NE(text.find(c.anchor), std::string::npos) << c.name;
    for (const auto& q : c.quotes) EXPECT_NE(text.find(q), std::string::npos) << c.name;
    EXPECT_NE(text.find(c.hypothesis), std::string::npos) << c.name;
    EXPECT_NE(text.find(c.shadow), std::string::npos) << c.name;
  }
}

TEST(Status, RoundTripAndCombine) {
  for (Status s : {Status::pass, Status::fail, Status::inconclusive, Status::not_applicable,
                   Status::rejected_genericity})
    EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_FALSE(parse_status("pass").has_value());

  auto make = [](Status s) {
    CheckOutcome o;
    o.status = s;
    return o;
  };
  EXPECT_EQ(combine("c", {}).status, Status::not_applicable);
  EXPECT_EQ(combine("c", {{"a", make(Status::not_applicable)}, {"b", make(Status::pass)}}).status, Status::pass);
  EXPECT_EQ(combine("c", {{"a", make(Status::inconclusive)}, {"b", make(Status::pass)}}).status,
            Status::inconclusive);
  CheckOutcome both = combine("c", {{"a", make(Status::fail)}, {"b", make(Status::inconclusive)}});
  EXPECT_EQ(both.status, Status::fail);
  EXPECT_EQ(witness(both, "a.status"), "FAIL");
}

TEST(Checks, FamilyGraphAndProjectionSectionOnAllPresets) {
  for (const auto& name : preset_names()) {
    Engine engine;
    CheckSuite suite(engine, preset(name, kFp), {});
    EXPECT_EQ(suite.run("family_graph").status, Status::pass) << name;
    EXPECT_EQ(suite.run("projection_section").status, Status::pass) << name;
    EXPECT_EQ(suite.run("first_order_expansion").status, Status::pass) << name;
  }
}

TEST(Checks, DiagonalComponentReportsConstant) {
  for (const char* name : {"quadric-s2-h1", "cubic-3f-h1"}) {
    Engine engine;
    CheckSuite suite(engine, preset(name, kFp), {});
    CheckOutcome o = suite.run("diagonal_component");
    EXPECT_EQ(o.status, Status::pass) << name;
    EXPECT_EQ(witness(o, "constant_a"), "1") << name;
  }
}

TEST(Checks, DegenerateConeIsRejected) {
  Engine engine;
  // f free of the moving coordinate x3.
  CheckSuite suite(engine, make_cone_data("degenerate", 2, 1, "x0*x1 - x2^2", kFp), {});
  for (const auto& c : check_catalog()) {
    CheckOutcome o = suite.run(c.id);
    EXPECT_EQ(o.status, Status::rejected_genericity) << c.id;
    EXPECT_EQ(witness(o, "expansion_z_dependent"), "no");
  }
}

TEST(Checks, CoveringDegreeMatchesZDegreeOfDirectionalForm) {
  for (const char* name : {"quadric-s2-h1", "cubic-3f-h1"}) {
    Engine engine;
    ConeData cd = preset(name, kFp);
    CheckSuite suite(engine, cd, {});
    CheckOutcome o = suite.run("covering_degree");
    // Oracle: the fiber over a general point has length deg_z of the
    // directional derivative form, which is 1.
    Polynomial oracle = directional_oracle(cd);
    unsigned zdeg = std::max(oracle.degree_in(0), oracle.degree_in(1));
    EXPECT_EQ(zdeg, 1u);
    EXPECT_EQ(witness(o, "fiber_lengths"), "[1, 1, 1]") << name;
    EXPECT_EQ(o.status, Status::fail) << name;
    EXPECT_TRUE(o.randomized);
  }
  Engine engine;
  CheckSuite rational(engine, preset("quadric-s2-h1", Field::rationals()), {});
  EXPECT_EQ(rational.run("covering_degree").status, Status::inconclusive);
}

TEST(Checks, CorrespondenceImageOfPointIsLineSection) {
  Engine engine;
  ConeData cd = preset("cubic-3f-h1", Field::rationals());
  auto deltas = realize_all(engine, cd, {points("p", {1, 0, -1, 1, -1}), ideal("l", {"x0 + x1", "x2 + x3", "x4"})});
  CheckSuite suite(engine, cd, deltas);
  CheckOutcome o = suite.run("correspondence_image");
  EXPECT_EQ(o.status, Status::pass);
  // The line through e0 and p meets X in deg(X) points.
  EXPECT_EQ(witness(o, "p.support_on_X"), "dim 0, deg 3");
  EXPECT_EQ(witness(o, "l.support_on_X"), "dim 1, deg 3");
}

TEST(Checks, SpecialMemberRespectsDimensionHypothesis) {
  Engine engine;
  ConeData c = preset("cubic-3f-h2", kFp);
  auto deltas = realize_all(engine, c, {points("p", {1, -1, 0, 0, 0}), ideal("l", {"x0 + x1", "x2 + x3", "x4"})});
  CheckSuite suite(engine, c, deltas);
  CheckOutcome o = suite.run("special_member");
  EXPECT_EQ(o.status, Status::pass);
  EXPECT_EQ(witness(o, "p.status"), "PASS");
  EXPECT_EQ(witness(o, "l.status"), "NOT-APPLICABLE");
  EXPECT_EQ(witness(o, "p.dominant"), "yes");
}

TEST(Checks, JoinSupportOnlyForHOne) {
  Engine engine;
  ConeData b = preset("cubic-3f-h1", kFp);
  CheckSuite suite(engine, b, realize_all(engine, b, {ideal("l", {"x0 + x1", "x2 + x3", "x4"})}));
  EXPECT_EQ(suite.run("join_support").status, Status::pass);
  CheckSuite other(engine, preset("cubic-3f-h2", kFp), {});
  EXPECT_EQ(other.run("join_support").status, Status::not_applicable);
}

TEST(Checks, DegreeShadowMultiplicityMatchesLineRestriction) {
  Engine engine;
  ConeData cd = preset("cubic-3f-h1", kFp);
  std::vector<long> p{1, -1, 0, 0, 0};
  CheckSuite suite(engine, cd, realize_all(engine, cd, {points("p", p)}));
  CheckOutcome o = suite.run("degree_shadow");

  // Oracle: V^1 meets the cone image along the line through e0 and p;
  // the multiplicity of p is the order of vanishing of f(s p + u e0) at u = 0.
  RingPtr ring = make_ring(AmbientSpace({{"s", 1, false}, {"u", 1, false}, {"x", 5, false}}), kFp);
  Polynomial s = P(ring, "s0"), u = P(ring, "u0");
  std::map<std::size_t, Polynomial> line;
  for (std::size_t i = 0; i < p.size(); ++i) line[i + 2] = s.scaled(kFp.from_int(p[i])) + (i == 0 ? u : Polynomial(ring));
  Polynomial restricted = P(ring, cd.f_text).substitute(line);
  ASSERT_FALSE(restricted.is_zero());
  unsigned order = restricted.common_power(1);
  EXPECT_EQ(order, 1u);
  EXPECT_EQ(witness(o, "p.delta_multiplicity"), std::to_string(order) + " (expected 3)");
  EXPECT_EQ(o.status, Status::fail);
}

TEST(Checks, DegreeShadowOnQuadricIsExcess) {
  Engine engine;
  ConeData cd = preset("quadric-s2-h1", Field::rationals());
  CheckSuite suite(engine, cd, realize_all(engine, cd, {points("p", {1, 0, 3, 0})}));
  CheckOutcome o = suite.run("degree_shadow");
  EXPECT_EQ(o.status, Status::inconclusive);
  EXPECT_NE(witness(o, "p.excess").find("proper intersection"), std::string::npos);
}

TEST(EngineSoundness, AllCasesPass) {
  Engine engine;
  SoundnessResult r = engine_soundness(engine, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.cases, 18);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}
