#include <gtest/gtest.h>

#include <random>

#include "dtc/errors.hpp"
#include "dtc/field/diff_field.hpp"
#include "support/generators.hpp"

namespace dtc {
namespace {

class FieldTest : public ::testing::Test {
 protected:
  FieldPtr k = DiffField::standard_xt();
  RationalFunction p(const char* s) const { return k->parse(s); }
};

TEST_F(FieldTest, ParseProductKeepsPolynomialForm) {
  const auto a = p("t*x");
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ(a.numerator(), (Polynomial::variable(0) * Polynomial::variable(1)));
}

TEST_F(FieldTest, ParseCancelsCommonFactor) { EXPECT_EQ(p("(x^2-1)/(x-1)"), p("x+1")); }

TEST_F(FieldTest, ParseRejectsZeroDenominator) {
  EXPECT_THROW(p("1/0"), DivisionByZero);
  EXPECT_THROW(p("x/(t-t)"), DivisionByZero);
  EXPECT_THROW(p("(x-x)^-1"), DivisionByZero);
}

TEST_F(FieldTest, ParseErrors) {
  EXPECT_THROW(p("x+"), ParseError);
  EXPECT_THROW(p("(x"), ParseError);
  EXPECT_THROW(p("x $ t"), ParseError);
  EXPECT_THROW(p("y"), UnknownName);
}

TEST_F(FieldTest, NegativeExponent) { EXPECT_EQ(p("x^-2"), p("1/(x*x)")); }

TEST_F(FieldTest, ArithmeticOracles) {
  EXPECT_TRUE((p("x") + p("-x")).is_zero());
  EXPECT_TRUE((p("1/(x-1)") * p("x-1")).is_one());
  EXPECT_EQ(p("x^2-1") / p("x+1"), p("x-1"));
  EXPECT_THROW(p("x") / p("0"), DivisionByZero);
}

TEST_F(FieldTest, CanonicalDenominatorIsMonic) {
  const auto a = p("x/(2*t+4)");
  EXPECT_EQ(a.denominator().leading().coeff, 1);
  EXPECT_EQ(a, p("(x/2)/(t+2)"));
}

TEST_F(FieldTest, DerivationOracles) {
  EXPECT_EQ(k->derive(p("t*x"), "dx"), p("t"));
  EXPECT_TRUE(k->derive(p("7/3"), "dt").is_zero());
  EXPECT_EQ(k->derive(p("1/x"), "dx"), p("-1/x^2"));
  EXPECT_THROW(k->derive(p("x"), "dz"), UnknownName);
}

TEST_F(FieldTest, PrintFormats) {
  EXPECT_EQ(k->print(p("t*x")), "x*t");
  EXPECT_EQ(k->print(p("0")), "0");
  EXPECT_EQ(k->print(p("1/(x*t)")), "1/(x*t)");
  EXPECT_EQ(k->print(p("-x/(x+t)")), "-x/(x + t)");
  EXPECT_EQ(k->print(p("x^2 - 3*t + 1/2")), "x^2 - 3*t + 1/2");
}

TEST_F(FieldTest, NonCommutingDerivationsRejected) {
  // d1 = d/dx, d2 = x d/dt: d1 d2 t = 1, d2 d1 t = 0.
  EXPECT_THROW(DiffField::create({"x", "t"}, {{"d1", {1, 0}}, {"d2", {0, RationalFunction::variable(0)}}}, "d1", std::string("d2")),
               Error);
}

TEST_F(FieldTest, ArbitraryRationalDerivationValues) {
  // d(t) = 1/t commutes with d/dx since neither touches the other's generator.
  auto f = DiffField::create({"x", "t"}, {{"dx", {1, 0}}, {"dt", {0, RationalFunction::variable(1).inverse()}}}, "dx",
                             std::string("dt"));
  EXPECT_EQ(f->derive(f->parse("t^2"), "dt"), f->parse("2"));
}

TEST(PolynomialGcd, MultivariateCommonFactor) {
  auto k = DiffField::standard_xt();
  const auto a = k->parse("(x+t)*(x-2*t)*(x*t+1)").numerator();
  const auto b = k->parse("(x+t)*(x*t+1)^2*(t+3)").numerator();
  EXPECT_EQ(gcd(a, b), k->parse("(x+t)*(x*t+1)").numerator().monic());
}

class FieldProperties : public FieldTest {
 protected:
  std::mt19937_64 rng{20240611};
  RationalFunction random() { return testing::random_rational(rng, 2, 2); }
};

TEST_F(FieldProperties, DerivationsAreAdditiveAndLeibniz) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random();
    const auto b = random();
    for (std::size_t d = 0; d < k->derivation_count(); ++d) {
      EXPECT_EQ(k->derive(a + b, d), k->derive(a, d) + k->derive(b, d));
      EXPECT_EQ(k->derive(a * b, d), k->derive(a, d) * b + a * k->derive(b, d));
    }
  }
}

TEST_F(FieldProperties, DerivationsCommute) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random();
    EXPECT_EQ(k->derive(k->derive(a, 0), 1), k->derive(k->derive(a, 1), 0));
  }
}

TEST_F(FieldProperties, SelfSubtractionIsCanonicalZero) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random();
    const auto z = a - a;
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.is_polynomial());
    EXPECT_EQ(z, RationalFunction());
  }
}

TEST_F(FieldProperties, PrintParseRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random();
    if (d.is_zero()) continue;
    const auto a = random() / d;
    EXPECT_EQ(p(k->print(a).c_str()), a) << k->print(a);
  }
}

TEST_F(FieldProperties, FieldAxioms) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random();
    const auto b = random();
    const auto c = random();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

}  // namespace
}  // namespace dtc
