#include <gtest/gtest.h>

#include "conekit/poly_io.hpp"
#include "conekit/polynomial.hpp"

using namespace conekit;

namespace {

RingPtr ring3(Field f = Field::prime(31991), MonomialOrder o = MonomialOrder::grevlex()) {
  return make_ring(AmbientSpace::projective("x", 3), f, o);
}

}  // namespace

TEST(Ambient, MasterLayout) {
  AmbientSpace m = AmbientSpace::master(2);
  EXPECT_EQ(m.num_vars(), 12U);
  EXPECT_EQ(m.var_name(0), "t0");
  EXPECT_EQ(m.var_name(4), "x0");
  EXPECT_EQ(m.var("y", 3), 11U);
  EXPECT_EQ(m.projective_dimension(), 1 + 1 + 3 + 3);
  EXPECT_EQ(m.without({"t", "z"}).num_vars(), 8U);
}

TEST(MonomialOrder, GrevlexTieBreak) {
  RingPtr r = ring3();
  Polynomial p = parse_polynomial(r, "x0*x2 + x1^2");
  // x1^2 > x0*x2 in grevlex, x0*x2 > x1^2 in lex.
  EXPECT_EQ(print_polynomial(p), "x1^2 + x0*x2");
  EXPECT_EQ(print_polynomial(p.to_ring(r->with_order(MonomialOrder::lex()))), "x0*x2 + x1^2");
}

TEST(MonomialOrder, EliminationRanksBlockFirst) {
  AmbientSpace amb({Block{"t", 2, true}, Block{"x", 2, true}});
  RingPtr r = make_ring(amb, Field::prime(101), MonomialOrder::eliminating(amb, {"t"}));
  Polynomial p = parse_polynomial(r, "x0^5 + t1*x1");
  EXPECT_EQ(print_polynomial(p), "t1*x1 + x0^5");
}

TEST(Polynomial, ParsePrintRoundTrip) {
  RingPtr r = ring3(Field::rationals());
  for (const char* text : {"x0^3 - 2/3*x1*x2 + 5", "-x2", "0", "(x0 + x1)^2 - x0^2 - 2*x1*x0"}) {
    Polynomial p = parse_polynomial(r, text);
    EXPECT_EQ(parse_polynomial(r, print_polynomial(p)), p) << text;
  }
  EXPECT_EQ(print_polynomial(parse_polynomial(r, "(x0 + x1)^2 - x0^2 - 2*x1*x0")), "x1^2");
}

TEST(Polynomial, SymmetricResiduesPrint) {
  RingPtr r = ring3(Field::prime(7));
  EXPECT_EQ(print_polynomial(parse_polynomial(r, "6*x0 + 3*x1")), "-x0 + 3*x1");
}

TEST(Polynomial, ParseErrors) {
  RingPtr r = ring3();
  EXPECT_THROW(parse_polynomial(r, "x0 +"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "x7"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "x0 x1"), ParseError);
}

TEST(Polynomial, RingAxiomsOnSamples) {
  RingPtr r = ring3(Field::rationals());
  Polynomial a = parse_polynomial(r, "x0^2 - x1*x2 + 3");
  Polynomial b = parse_polynomial(r, "x2 - 1/2*x0");
  Polynomial c = parse_polynomial(r, "x1^3 + x0");
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Polynomial, MultidegreeAndHomogeneity) {
  AmbientSpace amb({Block{"x", 2, true}, Block{"y", 2, true}});
  RingPtr r = make_ring(amb, Field::prime(101));
  Polynomial p = parse_polynomial(r, "x0*y1 - x1*y0");
  ASSERT_TRUE(p.multidegree().has_value());
  EXPECT_EQ(*p.multidegree(), (std::vector<int>{1, 1}));
  EXPECT_FALSE(parse_polynomial(r, "x0*y1 - x1").multidegree().has_value());
  EXPECT_TRUE(parse_polynomial(r, "x0^2 - x1*y1").is_homogeneous());
}

TEST(Polynomial, SubstituteAndEvaluate) {
  RingPtr r = ring3();
  Polynomial p = parse_polynomial(r, "x0^2 - x1*x2");
  Polynomial q = p.substitute({{0, parse_polynomial(r, "x1 + x2")}});
  EXPECT_EQ(q, parse_polynomial(r, "x1^2 + x1*x2 + x2^2"));
  const Field& f = r->field();
  EXPECT_EQ(p.evaluate({f.from_int(3), f.from_int(2), f.from_int(4)}), f.from_int(1));
}

TEST(Polynomial, DerivativeAndPowers) {
  RingPtr r = ring3();
  Polynomial p = parse_polynomial(r, "x0^3*x1 + 2*x1");
  EXPECT_EQ(p.derivative(0), parse_polynomial(r, "3*x0^2*x1"));
  EXPECT_EQ(p.common_power(1), 1U);
  EXPECT_EQ(p.divide_by_power(1, 1), parse_polynomial(r, "x0^3 + 2"));
  EXPECT_EQ(p.degree_in(0), 3U);
  EXPECT_EQ(p.coefficient_of(0, 3), parse_polynomial(r, "x1"));
}

TEST(Polynomial, TaylorShiftReassembles) {
  AmbientSpace amb({Block{"t", 1, false}, Block{"x", 2, true}});
  RingPtr r = make_ring(amb, Field::rationals());
  Polynomial p = parse_polynomial(r, "t0^3*x0 - 2*t0*x1 + x0");
  Polynomial tm1 = parse_polynomial(r, "t0 - 1");
  Polynomial sum(r);
  for (unsigned k = 0; k <= 3; ++k) sum += tm1.pow(k) * taylor_shift_coefficient(p, 0, k);
  EXPECT_EQ(sum, p);
  EXPECT_EQ(taylor_shift_coefficient(p, 0, 0), parse_polynomial(r, "2*x0 - 2*x1"));
}

TEST(Polynomial, CrossRingArithmeticThrows) {
  RingPtr a = ring3(Field::prime(7));
  RingPtr b = ring3(Field::prime(11));
  EXPECT_THROW(parse_polynomial(a, "x0") + parse_polynomial(b, "x0"), std::invalid_argument);
}

TEST(Polynomial, ExponentOverflowIsAResourceError) {
  RingPtr r = ring3();
  EXPECT_THROW(parse_polynomial(r, "x0^200 * x0^100"), ResourceError);
}
