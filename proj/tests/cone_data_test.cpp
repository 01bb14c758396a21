#include <gtest/gtest.h>

#include "conekit/cone_data.hpp"
#include "test_support.hpp"

using namespace conekit;
using conekit::testing::P;

namespace {

const Field kFp = Field::prime(kDefaultPrime);

}  // namespace

TEST(ConeData, PresetsParse) {
  ASSERT_EQ(preset_names().size(), 3u);
  ConeData q = preset("quadric-s2-h1", kFp);
  EXPECT_EQ(q.n, 2);
  EXPECT_EQ(q.h, 1);
  EXPECT_EQ(q.a(), 3);
  EXPECT_EQ(q.degree(), 2u);
  ConeData c = preset("cubic-3f-h2", kFp);
  EXPECT_EQ(c.a(), 3);
  EXPECT_EQ(c.degree(), 3u);
  EXPECT_THROW(preset("nope", kFp), std::invalid_argument);
}

TEST(ConeData, Validation) {
  EXPECT_THROW(make_cone_data("c", 1, 1, "x0*x1 - x2^2", kFp), std::invalid_argument);
  EXPECT_THROW(make_cone_data("c", 2, 3, "x0*x3 - x1*x2", kFp), std::invalid_argument);
  EXPECT_THROW(make_cone_data("c", 2, 1, "x0 + x1^2", kFp), std::invalid_argument);
  EXPECT_THROW(make_cone_data("c", 2, 1, "x0 + x1", kFp), std::invalid_argument);
  EXPECT_THROW(preset("cubic-3f-h1", Field::prime(3)), std::invalid_argument);
  EXPECT_NO_THROW(preset("cubic-3f-h1", Field::rationals()));
}

TEST(ConeData, SmoothnessOfQuadricSections) {
  Engine engine;
  ConeData q = preset("quadric-s2-h1", kFp);
  SmoothnessReport whole = check_smoothness(engine, q, Section::whole);
  EXPECT_TRUE(whole.smooth());
  EXPECT_EQ(whole.dimension, 2);
  // x3 = 0 is the tangent plane at e0: the section is the line pair x1*x2 = 0.
  SmoothnessReport fixed = check_smoothness(engine, q, Section::fixed_part);
  EXPECT_EQ(fixed.dimension, 1);
  EXPECT_EQ(fixed.singular_dimension, 0);
  EXPECT_FALSE(fixed.smooth());
  SmoothnessReport comp = check_smoothness(engine, q, Section::complement);
  EXPECT_EQ(comp.dimension, 0);
  EXPECT_TRUE(comp.smooth());
}

TEST(ConeData, FermatSectionsSmooth) {
  Engine engine;
  for (const char* name : {"cubic-3f-h1", "cubic-3f-h2"}) {
    ConeData c = preset(name, kFp);
    for (Section s : {Section::whole, Section::fixed_part, Section::complement}) {
      SmoothnessReport r = check_smoothness(engine, c, s);
      EXPECT_TRUE(r.smooth()) << name << " section " << static_cast<int>(s);
    }
  }
}

TEST(ConeData, SingularConeDetected) {
  Engine engine;
  ConeData cone = make_cone_data("cone", 2, 1, "x0*x1 - x2^2", kFp);
  SmoothnessReport r = check_smoothness(engine, cone, Section::whole);
  EXPECT_EQ(r.singular_dimension, 0);
  EXPECT_FALSE(check_genericity(engine, cone).accepted());
}

TEST(Expansion, QuadricMatchesDirectionalDerivative) {
  ConeData q = preset("quadric-s2-h1", kFp);
  Expansion e = expansion_g(q);
  EXPECT_TRUE(e.generic());
  EXPECT_EQ(e.order, 1u);
  EXPECT_EQ(e.z_degree, 1u);
  Polynomial expected = P(e.g1.ring(), "x3*(z1*x0 - z0*x3)");
  EXPECT_EQ(e.g1.monic(), expected.monic());
  EXPECT_EQ(e.g1.monic(), directional_oracle(q).monic());
}

TEST(Expansion, FermatCubics) {
  for (const char* name : {"cubic-3f-h1", "cubic-3f-h2"}) {
    for (Field field : {kFp, Field::rationals()}) {
      ConeData c = preset(name, field);
      Expansion e = expansion_g(c);
      EXPECT_TRUE(e.generic()) << name;
      EXPECT_LE(e.z_degree, 2u);
      Polynomial g = e.g1;
      // Degree 3 in x, homogeneous in z.
      auto md = g.multidegree();
      ASSERT_TRUE(md.has_value());
      EXPECT_EQ((*md)[1], 3);
      EXPECT_EQ(g.monic(), directional_oracle(c).monic()) << name;
    }
  }
}

TEST(Expansion, MovingCoordinatesAbsentIsDegenerate) {
  // f free of x3: the first-order term no longer depends on z.
  ConeData d = make_cone_data("degenerate", 2, 1, "x0*x1 - x2^2", kFp);
  Expansion e = expansion_g(d);
  EXPECT_TRUE(e.nonzero);
  EXPECT_FALSE(e.z_dependent);
  EXPECT_FALSE(e.generic());
}

TEST(Gtz, MatrixShapeAndDeterminant) {
  ConeData q = preset("quadric-s2-h1", kFp);
  auto m = build_gtz(q, kFp.one(), kFp.one());
  // Columns are images: e3 -> e3 - e0.
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(m[i][j], i == j ? kFp.one() : kFp.zero());
  EXPECT_EQ(m[3][3], kFp.one());
  EXPECT_EQ(m[0][3], -kFp.one());

  ScalarSampler s(kFp, 7);
  for (const char* name : {"quadric-s2-h1", "cubic-3f-h1", "cubic-3f-h2"}) {
    ConeData c = preset(name, kFp);
    for (int trial = 0; trial < 5; ++trial) {
      Scalar t = s.next_nonzero(), z = s.next_nonzero();
      EXPECT_EQ(determinant(build_gtz(c, t, z)), t.pow(static_cast<unsigned>(c.h)) * z) << name;
    }
  }
  EXPECT_THROW(build_gtz(q, kFp.zero(), kFp.one()), std::invalid_argument);
  EXPECT_THROW(build_gtz(q, kFp.one(), kFp.zero()), std::invalid_argument);
}

TEST(Gtz, FixesTheFixedSubspace) {
  ConeData c = preset("cubic-3f-h2", kFp);
  auto m = build_gtz(c, kFp.from_int(5), kFp.from_int(11));
  std::vector<Scalar> v{kFp.from_int(3), kFp.from_int(-2), kFp.from_int(9), kFp.zero(), kFp.zero()};
  for (std::size_t i = 0; i < v.size(); ++i) {
    Scalar acc = kFp.zero();
    for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    EXPECT_EQ(acc, v[i]);
  }
}

TEST(Delta, PointsAndSections) {
  Engine engine(EngineCaps{}, 3);
  ConeData q = preset("quadric-s2-h1", kFp);
  DeltaSpec p = delta_points(engine, q, {{2, 3, 4, 6}}, "p");
  EXPECT_EQ(p.dimension, 0);
  EXPECT_EQ(p.codim_in_x, 2);
  EXPECT_TRUE(delta_on(engine, q, p, Section::whole));
  EXPECT_FALSE(delta_on(engine, q, p, Section::fixed_part));

  DeltaSpec line = delta_custom(engine, q, {"x0", "x1"}, "line");
  EXPECT_EQ(line.dimension, 1);
  EXPECT_TRUE(delta_on(engine, q, line, Section::whole));

  DeltaSpec sec = delta_linear_section(engine, q, Section::whole, 1, "s");
  EXPECT_EQ(sec.dimension, 1);
  EXPECT_EQ(engine.hilbert(sec.ideal).degree, 2);

  auto rp = delta_random_point(engine, q, Section::fixed_part, "r");
  ASSERT_TRUE(rp.has_value());
  EXPECT_EQ(rp->dimension, 0);
  EXPECT_TRUE(delta_on(engine, q, *rp, Section::fixed_part));
  EXPECT_FALSE(delta_random_point(engine, preset("quadric-s2-h1", Field::rationals()), Section::whole, "r"));
}
