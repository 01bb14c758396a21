#include <gtest/gtest.h>

#include "conekit/groebner.hpp"
#include "test_support.hpp"

using namespace conekit;
using namespace conekit::testing;

TEST(Hilbert, TwistedCubic) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 4), Field::prime(31991));
  Engine e;
  HilbertData h = e.hilbert(I(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}));
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.degree, 3);
}

TEST(Hilbert, HypersurfaceDegreeIsPolynomialDegree) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 5), Field::prime(31991));
  Engine e;
  HilbertData h = e.hilbert(I(r, {"x0^3 + x1^3 + x2^3 + x3^3 + x4^3"}));
  EXPECT_EQ(h.dimension, 3);
  EXPECT_EQ(h.degree, 3);
}

TEST(Hilbert, ProductOfLinesHasDegreeTwo) {
  AmbientSpace amb({Block{"x", 2, true}, Block{"y", 2, true}});
  RingPtr r = make_ring(amb, Field::prime(31991));
  Engine e;
  HilbertData whole = e.hilbert(Ideal::zero(r));
  EXPECT_EQ(whole.dimension, 2);
  EXPECT_EQ(whole.degree, 2);
  HilbertData diag = e.hilbert(I(r, {"x0*y1 - x1*y0"}));
  EXPECT_EQ(diag.dimension, 1);
  EXPECT_EQ(diag.degree, 2);
  ASSERT_EQ(diag.multidegree.size(), 2U);
  HilbertData point = e.hilbert(I(r, {"x1", "y1"}));
  EXPECT_EQ(point.dimension, 0);
  EXPECT_EQ(point.degree, 1);
}

TEST(Hilbert, SegreSurfaceBidegree) {
  // Diagonal of P^2 x P^2: class H1^2 + H1*H2 + H2^2, and (2H)^2 = 4 on P^2.
  AmbientSpace amb({Block{"x", 3, true}, Block{"y", 3, true}});
  RingPtr r = make_ring(amb, Field::prime(31991));
  Engine e;
  HilbertData h = e.hilbert(I(r, {"x0*y1 - x1*y0", "x0*y2 - x2*y0", "x1*y2 - x2*y1"}));
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 4);
  EXPECT_EQ(h.multidegree.size(), 3U);
}

TEST(Hilbert, EmptySchemeHasDimensionMinusOne) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 3), Field::prime(31991));
  Engine e;
  EXPECT_EQ(e.hilbert(Ideal::unit(r)).dimension, -1);
}

TEST(ZeroDim, CountsStandardMonomials) {
  RingPtr r = affine_ring({"a", "b"});
  Engine e;
  EXPECT_EQ(e.zero_dim_count(I(r, {"a0^2 - 1", "b0^2 - 1"})), 4);
  EXPECT_EQ(e.zero_dim_count(I(r, {"a0^2", "a0*b0", "b0^2"})), 3);
  EXPECT_EQ(e.zero_dim_count(I(r, {"a0", "a0 - 1"})), 0);
  EXPECT_THROW(e.zero_dim_count(I(r, {"a0"})), std::domain_error);
}
