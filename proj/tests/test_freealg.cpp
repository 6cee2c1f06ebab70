#include <gtest/gtest.h>

#include <random>

#include "qaffine/freealg.hpp"

using namespace qaffine;

namespace {

RationalFunction q(int k) { return RationalFunction::q_pow(k); }

// Random element with words of the given weight and small Laurent coefficients.
FreeElement random_homogeneous(std::mt19937& rng, const std::vector<int>& nu, int terms) {
  std::vector<std::pair<Word, RationalFunction>> t;
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> letters;
    for (size_t i = 0; i < nu.size(); ++i)
      for (int m = 0; m < nu[i]; ++m) letters.push_back(static_cast<int>(i));
    std::shuffle(letters.begin(), letters.end(), rng);
    Word w;
    for (int l : letters) w.push_back(l);
    RationalFunction c = RationalFunction(coef(rng)) * q(expo(rng)) + RationalFunction(coef(rng));
    t.emplace_back(w, c);
  }
  return FreeElement::from_terms(t);
}

std::vector<int> random_weight(std::mt19937& rng, int nodes, int height) {
  std::vector<int> nu(nodes, 0);
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  for (int k = 0; k < height; ++k) ++nu[pick(rng)];
  return nu;
}

}  // namespace

TEST(Word, BasicsAndOrder) {
  Word w{0, 1, 1};
  EXPECT_EQ(w.size(), 3);
  EXPECT_EQ(w.to_string(), "E[0]E[1]E[1]");
  EXPECT_EQ(Word().to_string(), "1");
  EXPECT_EQ(w.erase(1), (Word{0, 1}));
  EXPECT_EQ(w.reversed(), (Word{1, 1, 0}));
  EXPECT_TRUE((Word{0, 1}) < (Word{0, 1, 0}));
  EXPECT_TRUE((Word{0, 1, 1}) < (Word{1}));
  EXPECT_EQ(w.weight(1), Weight(std::vector<int>{1, 2}));
}

TEST(Word, HeightCapFailsLoudly) {
  int old = height_cap();
  set_height_cap(3);
  Word w{0, 1, 0};
  EXPECT_THROW(w.push_back(1), std::length_error);
  EXPECT_THROW(w + Word{1}, std::length_error);
  set_height_cap(old);
}

TEST(ZLaurent, ArithmeticAndDivision) {
  ZLaurent a = ZLaurent::monomial(1, -1) + ZLaurent::monomial(1, 1);  // [2]
  ZLaurent b = a * a;
  EXPECT_EQ(b.to_string(), b.to_laurent().to_string());
  EXPECT_EQ(b.divexact(a), a);
  EXPECT_EQ(a.bar(), a);
  EXPECT_THROW(ZLaurent(3).divexact(ZLaurent::monomial(1, 1) + ZLaurent(1)), std::domain_error);
  ZLaurent big = ZLaurent(std::numeric_limits<int64_t>::max());
  EXPECT_THROW(big + big, std::overflow_error);
}

TEST(FreeAlg, ProductExamples) {
  FreeElement e0 = FreeElement::generator(0), e1 = FreeElement::generator(1);
  FreeElement p = e0 * e1;
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coeff(Word{0, 1}), RationalFunction(1));
  EXPECT_EQ((e0 + e1) * FreeElement::one(), e0 + e1);
  FreeElement s = (q(1) * e0) * (q(-1) * e0);
  EXPECT_EQ(s, FreeElement::monomial(Word{0, 0}));
  EXPECT_EQ(s.to_string(), "1 * E[0]E[0]");
}

TEST(FreeAlg, ProductIsAssociativeAndGraded) {
  std::mt19937 rng(11);
  CartanDatum c(2);
  for (int trial = 0; trial < 20; ++trial) {
    FreeElement x = random_homogeneous(rng, random_weight(rng, 3, 2), 3);
    FreeElement y = random_homogeneous(rng, random_weight(rng, 3, 2), 3);
    FreeElement z = random_homogeneous(rng, random_weight(rng, 3, 1), 2);
    EXPECT_EQ((x * y) * z, x * (y * z));
    if (!x.is_zero() && !y.is_zero()) EXPECT_EQ((x * y).weight(2), x.weight(2) + y.weight(2));
  }
}

TEST(FreeAlg, CoproductExamples) {
  CartanDatum c(1);
  FreeElement one = FreeElement::one();
  TensorElement r1 = coproduct_r(c, one);
  ASSERT_EQ(r1.terms.size(), 1u);
  EXPECT_EQ(r1.terms.begin()->second, RationalFunction(1));

  for (int i = 0; i <= 1; ++i) {
    TensorElement ri = coproduct_r(c, FreeElement::generator(i));
    TensorElement expect;
    expect.add({Word::letter(i), Word()}, RationalFunction(1));
    expect.add({Word(), Word::letter(i)}, RationalFunction(1));
    EXPECT_EQ(ri, expect);
  }
  // r(E_i E_j), expanded by hand with the twist
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) {
      Word wi = Word::letter(i), wj = Word::letter(j);
      TensorElement expect;
      expect.add({wi + wj, Word()}, RationalFunction(1));
      expect.add({wi, wj}, RationalFunction(1));
      expect.add({wj, wi}, q(c.a(i, j)));
      expect.add({Word(), wi + wj}, RationalFunction(1));
      EXPECT_EQ(coproduct_r(c, FreeElement::monomial(wi + wj)), expect) << i << j;
    }
}

TEST(FreeAlg, CoproductIsAlgebraMapAndCoassociative) {
  std::mt19937 rng(5);
  for (int n : {1, 2}) {
    CartanDatum c(n);
    for (int trial = 0; trial < 8; ++trial) {
      FreeElement x = random_homogeneous(rng, random_weight(rng, n + 1, 2), 2);
      FreeElement y = random_homogeneous(rng, random_weight(rng, n + 1, 2), 2);
      EXPECT_EQ(coproduct_r(c, x * y), TensorElement::multiply(c, coproduct_r(c, x), coproduct_r(c, y)));
      FreeElement z = random_homogeneous(rng, random_weight(rng, n + 1, 5), 3);
      EXPECT_EQ(coproduct_left_then(c, z), coproduct_right_then(c, z));
    }
  }
}

TEST(FreeAlg, DerivationExamples) {
  CartanDatum c(2);
  for (int i = 0; i <= 2; ++i) {
    EXPECT_EQ(FreeElement::generator(i).r(c, i), FreeElement::one());
    EXPECT_EQ(FreeElement::generator(i).ir(c, i), FreeElement::one());
    for (int j = 0; j <= 2; ++j) {
      if (j == i) continue;
      EXPECT_TRUE(FreeElement::generator(j).r(c, i).is_zero());
      EXPECT_EQ(FreeElement::monomial(Word{j, i}).r(c, i), FreeElement::generator(j));
      EXPECT_EQ(FreeElement::monomial(Word{i, j}).r(c, i), q(c.a(i, j)) * FreeElement::generator(j));
    }
  }
}

TEST(FreeAlg, DerivationProductRulesAndSigma) {
  std::mt19937 rng(7);
  for (int n : {1, 2, 3}) {
    CartanDatum c(n);
    for (int trial = 0; trial < 10; ++trial) {
      FreeElement x = random_homogeneous(rng, random_weight(rng, n + 1, 3), 3);
      FreeElement y = random_homogeneous(rng, random_weight(rng, n + 1, 2), 3);
      if (x.is_zero() || y.is_zero()) continue;
      for (int i = 0; i <= n; ++i) {
        int yi = c.pairing(y.weight(n), c.alpha(i));
        int xi = c.pairing(x.weight(n), c.alpha(i));
        EXPECT_EQ((x * y).r(c, i), q(yi) * (x.r(c, i) * y) + x * y.r(c, i));
        EXPECT_EQ((x * y).ir(c, i), x.ir(c, i) * y + q(xi) * (x * y.ir(c, i)));
        EXPECT_EQ(x.sigma().r(c, i), x.ir(c, i).sigma());
      }
      EXPECT_EQ(x.sigma().sigma(), x);
      EXPECT_EQ(x.bar().bar(), x);
      EXPECT_EQ(x.sigma().bar(), x.bar().sigma());
      EXPECT_EQ((x * y).sigma(), y.sigma() * x.sigma());
    }
  }
}

TEST(FreeAlg, SigmaAndBarExamples) {
  EXPECT_EQ(FreeElement::monomial(Word{0, 1}).sigma(), FreeElement::monomial(Word{1, 0}));
  EXPECT_EQ((q(1) * FreeElement::generator(0)).bar(), q(-1) * FreeElement::generator(0));
  FreeElement t = RationalFunction(q_int(2)) * FreeElement::monomial(Word{0, 1});
  EXPECT_EQ(t.bar(), t);
}

TEST(FreeAlg, DividedPowers) {
  FreeElement e = FreeElement::generator(1);
  EXPECT_EQ(divided_power(e, 0), FreeElement::one());
  EXPECT_EQ(divided_power(e, 2).coeff(Word{1, 1}), RationalFunction(q_int(2)).inverse());
  EXPECT_EQ(divided_power(e, 3).coeff(Word{1, 1, 1}), (RationalFunction(q_int(3)) * RationalFunction(q_int(2))).inverse());
}

TEST(FreeAlg, ScaledArithmeticMatchesExpandedArithmetic) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    FreeElement x = random_homogeneous(rng, {1, 2}, 3);
    FreeElement y = random_homogeneous(rng, {1, 2}, 3);
    RationalFunction s = RationalFunction::parse("(q^2+1)/(q^3-2)");
    FreeElement z = s * x + y;
    for (const auto& [w, cx] : z.expanded()) EXPECT_EQ(cx, s * x.coeff(w) + y.coeff(w));
    EXPECT_TRUE((x - x).is_zero());
  }
}
