#include <gtest/gtest.h>

#include <set>

#include "qaffine/weyl.hpp"

using namespace qaffine;

namespace {
// All positive real roots k*delta +/- alpha with k <= bound, as vectors.
std::vector<Weight> real_roots(const CartanDatum& c, int bound) {
  std::vector<Weight> out;
  for (const Weight& a : c.finite_positive_roots())
    for (int k = 0; k <= bound; ++k) {
      out.push_back(k * c.delta() + a);
      if (k >= 1) out.push_back(k * c.delta() - a);
    }
  return out;
}

int brute_length(const CartanDatum& c, const AffineWeylElement& w, int bound) {
  int n = 0;
  for (const Weight& b : real_roots(c, bound))
    if (is_negative_real(c, w.act(b))) ++n;
  return n;
}

int expected_N(int n) {
  // sum over finite positive roots of 2 ht(alpha)
  int s = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) s += 2 * (b - a + 1);
  return s;
}
}  // namespace

TEST(Weyl, ReflectionAction) {
  CartanDatum c(1);
  auto s0 = AffineWeylElement::reflection(c, 0);
  EXPECT_EQ(s0.act(c.alpha(0)), (-1) * c.alpha(0));
  EXPECT_EQ(s0.act(c.alpha(1)), 2 * c.delta() - c.alpha(1));
  EXPECT_EQ(AffineWeylElement::identity(c).length(), 0);
  EXPECT_EQ(s0.length(), 1);
}

TEST(Weyl, TranslationAction) {
  for (int n = 1; n <= 3; ++n) {
    CartanDatum c(n);
    auto t = AffineWeylElement::t_two_rho(c);
    Weight two_rho(n);  // 2 rho as a sum of positive roots
    for (const Weight& a : c.finite_positive_roots()) two_rho = two_rho + a;
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(t.act(c.alpha(i)), c.alpha(i) - c.pairing(two_rho, c.alpha(i)) * c.delta());
    EXPECT_EQ(t.act(c.delta()), c.delta());
    EXPECT_EQ(t * t.inverse(), AffineWeylElement::identity(c));
  }
}

TEST(Weyl, LengthMatchesInversionCount) {
  for (int n = 1; n <= 3; ++n) {
    CartanDatum c(n);
    auto t = AffineWeylElement::t_two_rho(c);
    EXPECT_EQ(t.length(), brute_length(c, t, 12));
    EXPECT_EQ(t.length(), expected_N(n));
    auto w = AffineWeylElement::reflection(c, 0) * AffineWeylElement::reflection(c, 1) * t;
    EXPECT_EQ(w.length(), brute_length(c, w, 12));
  }
  EXPECT_EQ(AffineWeylElement::t_two_rho(CartanDatum(2)).length(), 8);
}

TEST(Weyl, DescentConsistentWithLength) {
  for (int n = 1; n <= 3; ++n) {
    CartanDatum c(n);
    auto w = AffineWeylElement::t_two_rho(c) * AffineWeylElement::reflection(c, 1);
    for (int i = 0; i <= n; ++i) {
      int l = (AffineWeylElement::reflection(c, i) * w).length();
      EXPECT_EQ(l, w.length() + (w.is_descent(i) ? -1 : 1));
    }
  }
}

TEST(Weyl, TwoRhoWordIsReduced) {
  for (int n = 1; n <= 3; ++n) {
    CartanDatum c(n);
    ReducedWord rw = t_two_rho_word(c);
    ASSERT_EQ(static_cast<int>(rw.letters.size()), expected_N(n));
    EXPECT_EQ(rw.evaluate(c), AffineWeylElement::t_two_rho(c));
    AffineWeylElement p = AffineWeylElement::identity(c);
    for (size_t k = 0; k < rw.letters.size(); ++k) {
      p = p * AffineWeylElement::reflection(c, rw.letters[k]);
      EXPECT_EQ(p.length(), static_cast<int>(k + 1));
    }
  }
  EXPECT_EQ(t_two_rho_word(CartanDatum(1)).letters, (std::vector<int>{0, 1}));
}

TEST(Weyl, ConcatenatedPeriodsStayReduced) {
  for (int n = 1; n <= 3; ++n) {
    CartanDatum c(n);
    RootOrder ord(c, 3);
    int N = ord.period();
    for (int start = -N; start <= N; start += std::max(1, N / 3)) {
      AffineWeylElement p = AffineWeylElement::identity(c);
      for (int m = 0; m < 2 * N; ++m) {
        p = p * AffineWeylElement::reflection(c, ord.letter(start + m));
        ASSERT_EQ(p.length(), m + 1);
      }
    }
  }
}

TEST(Weyl, BetaSequenceSmallCases) {
  CartanDatum c(1);
  RootOrder ord(c, 4);
  EXPECT_EQ(ord.beta_vector(0), c.alpha(ord.letter(0)));
  EXPECT_EQ(ord.beta_vector(1), c.alpha(ord.letter(1)));
  std::set<AffineRoot> got{ord.beta(0), ord.beta(-1)};
  std::set<AffineRoot> want{AffineRoot::plus(0, c.alpha(1)), AffineRoot::plus(1, c.alpha(1))};
  EXPECT_EQ(got, want);
}

TEST(Weyl, BetaSequenceEnumeratesRealRoots) {
  for (int n = 1; n <= 3; ++n) {
    CartanDatum c(n);
    int D = 4;
    RootOrder ord(c, D);
    int N = ord.period();
    std::set<AffineRoot> seen;
    for (int k = -2 * N + 1; k <= 2 * N; ++k) {
      AffineRoot r = ord.beta(k);
      EXPECT_TRUE(seen.insert(r).second) << "repeat at k=" << k;
      EXPECT_EQ(r.kind, k <= 0 ? RootKind::RealPlus : RootKind::RealMinus);
    }
    // Every real root of degree <= D is indexed.
    for (const Weight& a : c.finite_positive_roots())
      for (int k = 0; k <= D; ++k) {
        EXPECT_TRUE(ord.index_of(AffineRoot::plus(k, a)).has_value());
        if (k >= 1) EXPECT_TRUE(ord.index_of(AffineRoot::minus(k, a)).has_value());
      }
  }
}

TEST(Weyl, RootOrder) {
  CartanDatum c(1);
  RootOrder ord(c, 3);
  auto a1 = c.alpha(1);
  EXPECT_TRUE(ord.less(AffineRoot::plus(0, a1), AffineRoot::imaginary(1, 1, 1)));
  EXPECT_TRUE(ord.less(AffineRoot::imaginary(1, 1, 1), AffineRoot::imaginary(2, 1, 1)));
  EXPECT_TRUE(ord.less(AffineRoot::minus(2, a1), AffineRoot::minus(1, a1)));
  auto rs = ord.window_roots();
  EXPECT_EQ(rs.front(), AffineRoot::plus(0, a1));
  EXPECT_EQ(rs[1], AffineRoot::plus(1, a1));
  EXPECT_EQ(rs.back(), AffineRoot::minus(1, a1));
  EXPECT_THROW(ord.less(AffineRoot::plus(9, a1), AffineRoot::plus(0, a1)), std::out_of_range);
}

TEST(Weyl, RootOrderIsStrictTotal) {
  for (int n = 1; n <= 2; ++n) {
    CartanDatum c(n);
    RootOrder ord(c, 2);
    auto rs = ord.window_roots();
    for (int k = 1; k <= 2; ++k)
      for (int i = 1; i <= n; ++i) rs.push_back(AffineRoot::imaginary(k, i, n));
    for (auto& a : rs)
      for (auto& b : rs) {
        if (a == b) {
          EXPECT_FALSE(ord.less(a, b));
          continue;
        }
        EXPECT_NE(ord.less(a, b), ord.less(b, a));
        for (auto& d : rs)
          if (ord.less(a, b) && ord.less(b, d)) EXPECT_TRUE(ord.less(a, d));
      }
  }
}
