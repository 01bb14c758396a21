#include <gtest/gtest.h>

#include "conekit/groebner.hpp"
#include "test_support.hpp"

using namespace conekit;
using namespace conekit::testing;

namespace {

RingPtr p3(Field f = Field::prime(31991)) { return make_ring(AmbientSpace::projective("x", 4), f); }

Ideal twisted_cubic(const RingPtr& r) { return I(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}); }

}  // namespace

TEST(Groebner, TwistedCubicQuadricsAreAlreadyAReducedBasis) {
  Engine e;
  GroebnerBasis gb = e.groebner(twisted_cubic(p3()));
  EXPECT_EQ(printed(gb), (std::vector<std::string>{"x2^2 - x1*x3", "x1*x2 - x0*x3", "x1^2 - x0*x2"}));
  EXPECT_TRUE(verify_buchberger_criterion(gb));
}

TEST(Groebner, LexBasisOfCircleAndLine) {
  RingPtr r = affine_ring({"a", "b"}, Field::rationals(), MonomialOrder::lex());
  Engine e;
  GroebnerBasis gb = e.groebner(I(r, {"a0^2 + b0^2 - 1", "a0 - b0"}), MonomialOrder::lex());
  EXPECT_EQ(printed(gb), (std::vector<std::string>{"b0^2 - 1/2", "a0 - b0"}));
}

TEST(Groebner, InconsistentSystemGivesUnit) {
  RingPtr r = affine_ring({"a", "b"});
  Engine e;
  EXPECT_TRUE(e.groebner(I(r, {"a0*b0 - 1", "a0"})).is_unit());
  EXPECT_TRUE(e.is_unit(I(r, {"a0^2 - 1", "a0^3 - a0^2 - 2"})));
}

TEST(Groebner, MembershipAgainstParametrization) {
  Engine e;
  RingPtr r = p3();
  Ideal tc = twisted_cubic(r);
  // (s^3, s^2 t, s t^2, t^3) satisfies x0^2 x3 = x1^3 but not x0 x3 = x1^2.
  EXPECT_TRUE(e.contains(tc, P(r, "x0^2*x3 - x1^3")));
  EXPECT_FALSE(e.contains(tc, P(r, "x0*x3 - x1^2")));
}

TEST(Groebner, Cyclic4BasisSatisfiesBuchbergerCriterion) {
  RingPtr r = affine_ring({"a", "b", "c", "d"});
  Ideal c4 = I(r, {"a0 + b0 + c0 + d0", "a0*b0 + b0*c0 + c0*d0 + d0*a0",
                   "a0*b0*c0 + b0*c0*d0 + c0*d0*a0 + d0*a0*b0", "a0*b0*c0*d0 - 1"});
  Engine e;
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    GroebnerBasis gb = e.groebner(c4, order);
    EXPECT_TRUE(verify_buchberger_criterion(gb)) << order.to_string();
    for (const auto& g : c4.generators()) EXPECT_TRUE(e.contains(gb, g));
  }
}

TEST(Groebner, ReducedBasisIsIndependentOfGeneratorPresentation) {
  Engine e;
  RingPtr r = p3();
  Ideal a = twisted_cubic(r);
  Ideal b = I(r, {"x0*x2 - x1^2 + 5*(x1*x3 - x2^2)", "x1*x3 - x2^2", "x0*x3 - x1*x2 + x3*(x0*x2 - x1^2)"});
  EXPECT_EQ(printed(e.groebner(a)), printed(e.groebner(b)));
  EXPECT_TRUE(e.ideal_equal(a, b));
}

TEST(Groebner, RationalAndModularLeadTermsAgreeOnIntegerInput) {
  std::vector<std::string> gens = {"x0^2 - 3*x1*x2 + x3^2", "x1^3 - x0*x2*x3", "x0*x1 - 7*x2^2"};
  Engine e;
  GroebnerBasis q = e.groebner(I(p3(Field::rationals()), gens));
  GroebnerBasis p = e.groebner(I(p3(), gens));
  ASSERT_EQ(q.basis.size(), p.basis.size());
  for (std::size_t i = 0; i < q.basis.size(); ++i)
    EXPECT_EQ(q.basis[i].leading_monomial(), p.basis[i].leading_monomial());
  EXPECT_TRUE(verify_buchberger_criterion(q));
}

TEST(Groebner, BasisCapRaisesResourceError) {
  EngineCaps caps;
  caps.max_basis = 2;
  Engine e(caps);
  EXPECT_THROW(e.groebner(twisted_cubic(p3())), ResourceError);
}

TEST(Groebner, PairBudgetRaisesResourceError) {
  EngineCaps caps;
  caps.max_pairs = 1;
  Engine e(caps);
  RingPtr r = affine_ring({"a", "b", "c"});
  EXPECT_THROW(e.groebner(I(r, {"a0^2 - b0*c0", "b0^2 - a0*c0", "c0^2 - a0*b0 - 1"})), ResourceError);
}

TEST(Groebner, ZeroIdealHasEmptyBasis) {
  Engine e;
  EXPECT_TRUE(e.groebner(Ideal::zero(p3())).basis.empty());
  EXPECT_FALSE(e.contains(Ideal::zero(p3()), P(p3(), "x0")));
}
