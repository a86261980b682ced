#include <gtest/gtest.h>

#include <random>

#include "qsw/error.hpp"
#include "qsw/scalar.hpp"

using namespace qsw;

namespace {

Scalar P(const char* text) { return parse_scalar(text); }

Poly random_poly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<Poly::Term> out;
  for (int i = 0; i < terms; ++i) out.push_back({{deg(rng), deg(rng)}, Rational(coef(rng))});
  return Poly::from_terms(std::move(out));
}

Scalar random_scalar(std::mt19937& rng) {
  Poly num = random_poly(rng, 2, 3);
  Poly den;
  do {
    den = random_poly(rng, 2, 2);
  } while (den.is_zero());
  return Scalar(RatFunc(num, den));
}

}  // namespace

TEST(Coeff, AdditiveInverseCancels) { EXPECT_TRUE((P("r - s") + P("s - r")).is_zero()); }

TEST(Coeff, QuotientCancels) {
  Scalar q = P("(r^2 - s^2)/(r - s)");
  EXPECT_EQ(q, P("r + s"));
  EXPECT_EQ(q.str(), "r + s");
}

TEST(Coeff, EvaluateRatio) { EXPECT_EQ(P("r/s").evaluate(2, 3), Rational(2, 3)); }

TEST(Coeff, DivisionByZeroThrows) {
  try {
    (void)(P("r") / P("r - r"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW((void)Scalar(0).inverse(), Error);
}

TEST(Coeff, QintSmallValues) {
  auto p = ParamSpec::symbolic();
  EXPECT_EQ(qint(1, p), Scalar(1));
  EXPECT_EQ(qint(2, p), P("r + s"));
  EXPECT_EQ(qint(3, p), P("r^2 + r*s + s^2"));
  EXPECT_EQ(qint(3, p).str(), "r^2 + r*s + s^2");
  EXPECT_EQ(qint(3, p), P("(r^3 - s^3)/(r - s)"));
  EXPECT_THROW(qint(0, p), Error);
}

TEST(Coeff, QintBalancedSpecialization) {
  for (int q = 2; q <= 4; ++q) {
    for (int k = 1; k <= 6; ++k) {
      Rational qv(q);
      Rational expected = 0;
      for (int j = 0; j < k; ++j) {
        Rational term = 1;
        int e = k - 1 - 2 * j;
        for (int t = 0; t < std::abs(e); ++t) term *= e > 0 ? qv : Rational(1 / qv);
        expected += term;
      }
      EXPECT_EQ(qint(k, ParamSpec::symbolic()).evaluate(qv, 1 / qv), expected) << q << " " << k;
      EXPECT_EQ(qint(k, ParamSpec::specialized(qv, 1 / qv)).rational(), expected);
    }
  }
}

TEST(Coeff, MaterializeHalfPowers) {
  EXPECT_EQ(materialize(GScalar::from_twice(2), ParamSpec::symbolic()), P("r/s"));
  EXPECT_EQ(materialize(GScalar::from_twice(3), ParamSpec::specialized(4, 1)), Scalar(8));
  EXPECT_EQ(materialize(GScalar::from_twice(-3), ParamSpec::specialized(4, 9)), Scalar(Rational(27, 8)));
  try {
    materialize(GScalar::from_twice(1), ParamSpec::symbolic());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HalfPowerUnavailable);
  }
  EXPECT_THROW(materialize(GScalar::from_twice(1), ParamSpec::specialized(2, 3)), Error);
}

TEST(Coeff, GScalarExponentsAdd) {
  GScalar a = GScalar::from_twice(3);
  GScalar b = GScalar::from_twice(1);
  EXPECT_EQ((a * b).twice_exponent(), 4);
  EXPECT_TRUE((a * b).is_integral());
  EXPECT_EQ(a.exponent_str(), "3/2");
  EXPECT_EQ((a * b).exponent_str(), "2");
}

TEST(Coeff, ParamValidation) {
  EXPECT_THROW(ParamSpec::specialized(0, 1), Error);
  EXPECT_THROW(ParamSpec::specialized(2, 2), Error);
  EXPECT_THROW(ParamSpec::specialized(2, -2), Error);
  EXPECT_NO_THROW(ParamSpec::specialized(2, 3));
  auto ng = ParamSpec::nongeneric(2, -2);
  EXPECT_FALSE(ng.is_generic());
  EXPECT_TRUE(ng.s_equals_minus_r());
}

TEST(Coeff, RenderingRoundTrips) {
  for (const char* text : {"(r^2 + r*s)/(r - s)", "-3/2", "r/s", "1/(r*s)", "(2*r - 3)/(r^2*s + s)", "r^-2*s",
                           "-r/(s^2)", "0"}) {
    Scalar v = P(text);
    EXPECT_EQ(parse_scalar(v.str()), v) << text << " -> " << v.str();
  }
  EXPECT_EQ(P("r^-2*s").str(), "s/r^2");
  EXPECT_EQ(P("1/(r*s)").str(), "1/(r*s)");
  EXPECT_THROW(P("r +"), Error);
  EXPECT_THROW(P("x"), Error);
  EXPECT_THROW(P("(r"), Error);
}

TEST(CoeffProperty, CanonicalFormIdempotent) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly num = random_poly(rng, 3, 4);
    Poly den = random_poly(rng, 3, 3);
    if (den.is_zero()) continue;
    RatFunc f(num, den);
    RatFunc g(f.num(), f.den());
    EXPECT_EQ(f, g);
    EXPECT_EQ(f.den().is_zero(), false);
    if (!f.is_zero()) EXPECT_EQ(f.den().leading().coeff, 1);
    EXPECT_TRUE(gcd(f.num(), f.den()).is_one() || f.is_zero());
    // Scaling numerator and denominator by a common factor is invisible.
    Poly extra = Poly::var_r() + Poly(Rational(3)) * Poly::var_s();
    EXPECT_EQ(RatFunc(num * extra, den * extra.scaled(Rational(-5, 2))), RatFunc(num.scaled(Rational(-2, 5)), den));
  }
}

TEST(CoeffProperty, FieldAxiomsSymbolic) {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(CoeffProperty, FieldAxiomsSpecialized) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-20, 20);
  std::uniform_int_distribution<int> pos(1, 9);
  for (int i = 0; i < 200; ++i) {
    Scalar a(Rational(d(rng), pos(rng))), b(Rational(d(rng), pos(rng))), c(Rational(d(rng), pos(rng)));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(CoeffProperty, EvaluationIsAHomomorphism) {
  std::mt19937 rng(17);
  const Rational r0(2), s0(3);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 80; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    Rational av, bv;
    try {
      av = a.evaluate(r0, s0);
      bv = b.evaluate(r0, s0);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    EXPECT_EQ((a + b).evaluate(r0, s0), av + bv);
    EXPECT_EQ((a - b).evaluate(r0, s0), av - bv);
    EXPECT_EQ((a * b).evaluate(r0, s0), av * bv);
    if (sgn(bv) != 0) EXPECT_EQ((a / b).evaluate(r0, s0), av / bv);
  }
  EXPECT_GE(checked, 40);
}
