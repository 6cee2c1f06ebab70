#include <gtest/gtest.h>

#include <random>

#include "qaffine/scalar.hpp"

using namespace qaffine;

namespace {
RationalFunction rf(const char* s) { return RationalFunction::parse(s); }

RationalFunction random_rf(std::mt19937& g, bool in_a) {
  std::uniform_int_distribution<int> c(-3, 3), d(0, 3);
  auto poly = [&](int deg) {
    std::vector<mpz_class> v(deg + 1);
    for (auto& x : v) x = c(g);
    v.back() = c(g) == 0 ? 1 : c(g) | 1;
    return Poly(v);
  };
  int dd = d(g);
  Poly den = poly(dd);
  Poly num = poly(in_a ? std::uniform_int_distribution<int>(0, dd)(g) : dd + 1);
  return RationalFunction(num, den);
}
}  // namespace

TEST(QInt, SmallValues) {
  EXPECT_EQ(RationalFunction(q_int(2)), rf("q+q^-1"));
  EXPECT_EQ(RationalFunction(q_int(1)), RationalFunction(1));
  EXPECT_EQ(RationalFunction(q_fact(0)), RationalFunction(1));
  EXPECT_EQ(RationalFunction(q_binom(2, 1)), rf("q+q^-1"));
  EXPECT_EQ(RationalFunction(q_int(3)), rf("q^2+1+q^-2"));
  EXPECT_THROW(q_int(-1), std::invalid_argument);
  EXPECT_THROW(q_binom(1, 2), std::invalid_argument);
}

TEST(QInt, BinomialsIntegralAndBarInvariant) {
  for (int m = 0; m <= 9; ++m)
    for (int r = 0; r <= m; ++r) {
      LaurentPoly b = q_binom(m, r);
      EXPECT_TRUE(b.has_integer_coeffs());
      EXPECT_EQ(b, b.bar());
      // Independent check against the factorial quotient.
      RationalFunction quot = RationalFunction(q_fact(m)) / (RationalFunction(q_fact(r)) * RationalFunction(q_fact(m - r)));
      EXPECT_EQ(RationalFunction(b), quot);
    }
}

TEST(Rational, CanonicalForm) {
  RationalFunction x = rf("(q^2+1)/(q^2-q)");
  EXPECT_EQ(x.to_string(), "(q^2+1)/(q^2-q)");
  EXPECT_EQ(rf("q^-2").to_string(), "1/q^2");
  RationalFunction half(mpq_class(1, 2));
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ((RationalFunction(Poly(std::vector<mpz_class>{-2, 0, 2})) / RationalFunction(Poly(std::vector<mpz_class>{-4, 4}))).to_string(),
            "(q+1)/2");
  RationalFunction neg(Poly(1), Poly(-1));
  EXPECT_EQ(neg, RationalFunction(-1));
}

TEST(Rational, ParseRoundTrip) {
  std::mt19937 g(7);
  for (int t = 0; t < 200; ++t) {
    RationalFunction x = random_rf(g, t % 2);
    EXPECT_EQ(RationalFunction::parse(x.to_string()), x) << x.to_string();
  }
}

TEST(Rational, FieldAxioms) {
  std::mt19937 g(11);
  for (int t = 0; t < 100; ++t) {
    RationalFunction a = random_rf(g, false), b = random_rf(g, true), c = random_rf(g, false);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, RationalFunction(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    EXPECT_EQ(a.bar().bar(), a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(RingA, Membership) {
  EXPECT_TRUE(rf("q^-1").in_A());
  EXPECT_FALSE(rf("q").in_A());
  RationalFunction v = RationalFunction(1) / (rf("q") - rf("q^-1"));
  EXPECT_TRUE(v.in_A());
  EXPECT_EQ(v.limit_at_infinity(), 0);
  EXPECT_EQ(rf("(q^2+1)/(q^2-q)").limit_at_infinity(), 1);
  RationalFunction one_m = RationalFunction(1) - rf("q^-2");
  RationalFunction psi = (RationalFunction(1) - rf("q^-4")) / (one_m * one_m);
  EXPECT_EQ(psi.limit_at_infinity(), 1);
  EXPECT_THROW(rf("q").limit_at_infinity(), std::domain_error);
}

TEST(RingA, ClosedAndLimitMultiplicative) {
  std::mt19937 g(3);
  for (int t = 0; t < 200; ++t) {
    RationalFunction a = random_rf(g, true), b = random_rf(g, true);
    ASSERT_TRUE(a.in_A());
    EXPECT_TRUE((a + b).in_A());
    EXPECT_TRUE((a * b).in_A());
    EXPECT_EQ((a * b).limit_at_infinity(), a.limit_at_infinity() * b.limit_at_infinity());
    EXPECT_EQ((a + b).limit_at_infinity(), a.limit_at_infinity() + b.limit_at_infinity());
  }
}

TEST(Series, ExpLogKnown) {
  using S = PowerSeries<RationalFunction>;
  S u(3, RationalFunction(0));
  u[1] = 1;
  S e = series_exp(u, RationalFunction(1), rf_is_zero);
  EXPECT_EQ(e[2], RationalFunction(mpq_class(1, 2)));
  EXPECT_EQ(e[3], RationalFunction(mpq_class(1, 6)));
  S one_plus_u(3, RationalFunction(0));
  one_plus_u[0] = 1;
  one_plus_u[1] = 1;
  S l = series_log(one_plus_u, RationalFunction(1), rf_is_zero);
  EXPECT_EQ(l[0], RationalFunction(0));
  EXPECT_EQ(l[2], RationalFunction(mpq_class(-1, 2)));
  EXPECT_EQ(l[3], RationalFunction(mpq_class(1, 3)));
  EXPECT_THROW(series_exp(one_plus_u, RationalFunction(1), rf_is_zero), std::invalid_argument);
  EXPECT_THROW(series_log(u, RationalFunction(1), rf_is_zero), std::invalid_argument);
}

TEST(Series, ExpLogRoundTrip) {
  std::mt19937 g(5);
  using S = PowerSeries<RationalFunction>;
  for (int t = 0; t < 20; ++t) {
    S s(6, RationalFunction(0));
    for (int k = 1; k <= 6; ++k) s[k] = random_rf(g, k % 2);
    S back = series_log(series_exp(s, RationalFunction(1), rf_is_zero), RationalFunction(1), rf_is_zero);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(back[k], s[k]);
  }
}
