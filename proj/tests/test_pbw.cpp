#include <gtest/gtest.h>

#include "qaffine/pbw.hpp"

using namespace qaffine;

namespace {

RationalFunction q(int k) { return RationalFunction::q_pow(k); }

struct N1 {
  CartanDatum c{1};
  Weight a1 = c.alpha(1);
  Weight d = c.delta();
  AffineRoot alpha = AffineRoot::plus(0, a1);
  AffineRoot dpa = AffineRoot::plus(1, a1);
  AffineRoot dma = AffineRoot::minus(1, a1);
  AffineRoot del = AffineRoot::imaginary(1, 1, 1);
  AffineRoot del2 = AffineRoot::imaginary(2, 1, 1);
};

PBWIndex idx(std::initializer_list<std::pair<AffineRoot, int>> l) {
  PBWIndex c;
  for (const auto& [r, m] : l) c.add(r, m);
  return c;
}

}  // namespace

TEST(PBW, OrderPutsGreaterRootsFirst) {
  for (int n : {1, 2, 3}) {
    CartanDatum c(n);
    RootOrder ord(c, 3);
    for (const AffineRoot& r : ord.window_roots()) {
      int k = *ord.index_of(r);
      EXPECT_EQ(k <= 0, r.kind == RootKind::RealPlus) << r;
      EXPECT_TRUE(ord.less(r, AffineRoot::imaginary(1, 1, n)) == (r.kind == RootKind::RealPlus)) << r;
    }
  }
}

TEST(PBW, IndexCountsMatchDimensions) {
  for (int n : {1, 2}) {
    CartanDatum c(n);
    for (int h = 1; h <= (n == 1 ? 8 : 6); ++h) {
      std::vector<int> cur(n + 1, 0);
      auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == n) {
          cur[k] = left;
          Weight nu(cur);
          EXPECT_EQ(pbw_indices(c, nu).size(), dim_oracle(c, nu)) << nu;
          return;
        }
        for (int t = 0; t <= left; ++t) {
          cur[k] = t;
          self(self, k + 1, left - t);
        }
      };
      rec(rec, 0, h);
    }
  }
}

TEST(PBW, MonomialExamples) {
  N1 s;
  RootVectorTable t(s.c, 3);
  PBWBasis b(t);
  UElem e1 = UElem::generator(s.c, 1);
  EXPECT_TRUE(equals_in_uplus(b.E(idx({{s.alpha, 2}})), divided_power(e1, 2)));
  EXPECT_TRUE(equals_in_uplus(b.E(idx({{s.del, 1}})), t.P_tilde(1, 1)));
  EXPECT_TRUE(equals_in_uplus(b.E(idx({{s.alpha, 1}, {s.dma, 1}})), e1 * t.seed(1)));
  EXPECT_TRUE(equals_in_uplus(b.E_prime(idx({{s.del, 2}})), t.psi_tilde(1, 1) * t.psi_tilde(1, 1)));

  PBWIndex real = idx({{s.alpha, 1}, {s.dpa, 1}});
  EXPECT_TRUE(equals_in_uplus(b.B(real), b.E(real)));
  UElem p1 = t.P_tilde(1, 1);
  EXPECT_TRUE(equals_in_uplus(b.B(idx({{s.del, 2}})), p1 * p1 - t.P_tilde(2, 1)));
  EXPECT_TRUE(equals_in_uplus(b.B(idx({{s.alpha, 1}, {s.del, 1}, {s.dma, 1}})), e1 * p1 * t.seed(1)));

  CartanDatum c2(2);
  RootVectorTable t2(c2, 1);
  PBWBasis b2(t2);
  EXPECT_FALSE(b2.supported(idx({{AffineRoot::plus(0, c2.alpha(1) + c2.alpha(2)), 1}})));
  EXPECT_THROW(b2.E(idx({{AffineRoot::plus(0, c2.alpha(1) + c2.alpha(2)), 1}})), std::domain_error);
}

TEST(PBW, BasisHasFullRank) {
  N1 s;
  RootVectorTable t(s.c, 4);
  PBWBasis b(t);
  for (int h = 1; h <= 8; ++h)
    for (int x = 0; x <= h; ++x) {
      Weight nu(std::vector<int>{x, h - x});
      auto ids = pbw_indices(s.c, nu);
      std::vector<UElem> bs;
      for (const auto& c : ids) bs.push_back(b.B(c));
      std::vector<const DualVec*> rows;
      for (const auto& e : bs) rows.push_back(&e.dual());
      EXPECT_EQ(rank_specialized(rows, 1234567, 2305843009213693951ull), dim_uplus(s.c, nu)) << nu;
      for (const auto& e : bs) EXPECT_TRUE(in_lattice(e));
    }
}

TEST(PBW, OrthonormalityExamples) {
  N1 s;
  RootVectorTable t(s.c, 3);
  PBWBasis b(t);
  for (const Weight& nu : {s.a1, s.d, 2 * s.d}) {
    auto tab = b.orthonormality_table(nu);
    EXPECT_TRUE(tab.pass) << nu;
    EXPECT_EQ(tab.indices.size(), nu == s.a1 ? 1u : nu == s.d ? 2u : 6u);
  }
}

TEST(PBW, ProjectionExamples) {
  N1 s;
  RootVectorTable t(s.c, 3);
  PBWBasis b(t);
  UElem e1 = UElem::generator(s.c, 1);
  for (int k = 1; k <= 2; ++k) EXPECT_EQ(b.pi0(t.P_tilde(k, 1)), ImaginaryElement::generator(k, 1));
  EXPECT_TRUE(b.pi0(e1 * t.seed(1)).is_zero());
  EXPECT_EQ(b.pi0(t.seed(1) * e1), ImaginaryElement::generator(1, 1));
  // idempotent, and multiplicative on imaginary degrees
  UElem x = t.seed(1) * e1;
  UElem y = t.real(2, Sign::Minus, 1) * e1 + t.seed(1) * t.real(1, Sign::Plus, 1);
  ImaginaryElement px = b.pi0(x), py = b.pi0(y);
  EXPECT_EQ(b.pi0(px.materialize(t)), px);
  EXPECT_EQ(b.pi0(x * y), px * py);
  ASSERT_TRUE(in_lattice(x));
  EXPECT_TRUE(in_lattice(px.materialize(t)));
  EXPECT_THROW(b.pi0(e1), std::invalid_argument);
}

TEST(PBW, IntegralityExamples) {
  N1 s;
  RootVectorTable t(s.c, 3);
  PBWBasis b(t);
  PBWIndex a = idx({{s.alpha, 1}}), p = idx({{s.del, 1}});
  EXPECT_TRUE(b.integrality_check(a, a));
  auto co = coords(b.E(a) * b.E(a), {b.E(idx({{s.alpha, 2}}))});
  EXPECT_EQ(co[0], RationalFunction(q_int(2)));
  EXPECT_TRUE(b.integrality_check(p, a));
  EXPECT_TRUE(b.integrality_check(p, p));
  EXPECT_TRUE(b.integrality_check(idx({{s.dma, 1}}), a));
}

TEST(PBW, InnerProductFactorizes) {
  N1 s;
  RootVectorTable t(s.c, 3);
  PBWBasis b(t);
  for (const Weight& nu : {s.d, s.d + s.a1, 2 * s.d}) {
    auto ids = pbw_indices(s.c, nu);
    for (const auto& x : ids)
      for (const auto& y : ids) EXPECT_TRUE(b.luinner_check(x, y)) << x.to_string() << " " << y.to_string();
  }
  EXPECT_EQ(divided_power_norm(2), inner(divided_power(UElem::generator(s.c, 1), 2), divided_power(UElem::generator(s.c, 1), 2)));
}
