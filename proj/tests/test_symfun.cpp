#include <gtest/gtest.h>

#include <random>

#include "qaffine/symfun.hpp"

using namespace qaffine;

namespace {

RationalFunction q(int k) { return RationalFunction::q_pow(k); }
RationalFunction ii() { return (RationalFunction(1) - q(-2)).inverse(); }

// Classical oracle: symmetric polynomials in N variables at a rational point.
mpq_class h_at(int k, const std::vector<mpq_class>& x) {
  if (k < 0) return 0;
  // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
  std::vector<mpq_class> h(k + 1, 0);
  h[0] = 1;
  for (const auto& xm : x)
    for (int d = 1; d <= k; ++d) h[d] += xm * h[d - 1];
  return h[k];
}

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  size_t n = m.size();
  mpq_class d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Bialternant formula det(x_j^{lambda_i + N - i}) / det(x_j^{N - i}).
mpq_class schur_bialternant(const Partition& lambda, const std::vector<mpq_class>& x) {
  int n = static_cast<int>(x.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n)), v(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class pa = 1, pv = 1;
      for (int e = 0; e < lambda.part(i) + n - 1 - i; ++e) pa *= x[j];
      for (int e = 0; e < n - 1 - i; ++e) pv *= x[j];
      a[i][j] = pa;
      v[i][j] = pv;
    }
  return det(a) / det(v);
}

mpq_class eval(const AbstractSymFn& f, const std::vector<mpq_class>& x) {
  mpq_class acc = 0;
  for (const auto& [p, c] : f.terms()) {
    mpq_class m = 1;
    for (int k : p.parts) m *= h_at(k, x);
    acc += c.limit_at_infinity() * m;  // coefficients are rational here
  }
  return acc;
}

}  // namespace

TEST(SymFn, JacobiTrudiMatchesBialternant) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<mpq_class> x;
    while (x.size() < 5) {  // distinct points keep the Vandermonde nonzero
      mpq_class v(num(rng), den(rng));
      v.canonicalize();
      if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    for (int m = 0; m <= 5; ++m)
      for (const Partition& lambda : partitions_of(m))
        EXPECT_EQ(eval(AbstractSymFn::schur(lambda), x), schur_bialternant(lambda, x)) << lambda;
    for (int k = 1; k <= 5; ++k) {
      mpq_class p = 0;
      for (const auto& xi : x) {
        mpq_class t = 1;
        for (int e = 0; e < k; ++e) t *= xi;
        p += t;
      }
      EXPECT_EQ(eval(AbstractSymFn::power_sum(k), x), p) << k;
    }
  }
}

TEST(SymFn, AbstractPieri) {
  using F = AbstractSymFn;
  F s1 = F::schur(Partition({1}));
  EXPECT_EQ(s1 * s1, F::schur(Partition({2})) + F::schur(Partition({1, 1})));
  EXPECT_EQ(abstract_pieri(1, Partition({2})), F::schur(Partition({3})) + F::schur(Partition({2, 1})));
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m + k <= 4; ++m)
      for (const Partition& mu : partitions_of(m))
        EXPECT_EQ(F::schur(Partition({k})) * F::schur(mu), abstract_pieri(k, mu)) << k << " " << mu;
  EXPECT_EQ(F::schur(Partition()), F::constant(RationalFunction(1)));
}

TEST(SymFn, SchurExamples) {
  using I = ImaginaryElement;
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(schur(Partition({k}), 1), I::generator(k, 1));
  EXPECT_EQ(schur(Partition({1, 1}), 2), I::generator(1, 2) * I::generator(1, 2) - I::generator(2, 2));
  EXPECT_EQ(schur(Partition(), 1), I::constant(RationalFunction(1)));
  for (int m = 1; m <= 4; ++m)
    for (const Partition& lambda : partitions_of(m))
      EXPECT_EQ(schur(lambda, 1), schur(lambda, 1, lambda.length() + 2)) << lambda;
  EXPECT_THROW(schur(Partition({1, 1}), 1, 1), std::invalid_argument);

  EXPECT_EQ(S({{{1, 1}, 1}}), I::generator(1, 1));
  EXPECT_EQ(S({{{1, 1}, 2}}), schur(Partition({1, 1}), 1));
  EXPECT_EQ(S({{{2, 1}, 1}}), I::generator(2, 1));
  EXPECT_EQ(S({{{1, 1}, 1}, {{1, 2}, 1}}), I::generator(1, 1) * I::generator(1, 2));
  EXPECT_EQ(partition_of({{{2, 1}, 1}, {{1, 1}, 2}, {{3, 2}, 1}}, 1), Partition({2, 1, 1}));
}

TEST(SymFn, PtildeExamples) {
  CartanDatum c(1);
  RootVectorTable t(c, 3);
  EXPECT_TRUE(equals_in_uplus(t.P_tilde(1, 1), t.psi_tilde(1, 1)));
  UElem p2 = RationalFunction(q_int(2)).inverse() *
             (q(-1) * (t.psi_tilde(1, 1) * t.P_tilde(1, 1)) + t.psi_tilde(2, 1));
  EXPECT_TRUE(equals_in_uplus(t.P_tilde(2, 1), p2));
  for (int k = 1; k <= 3; ++k) {
    RationalFunction want = q(k - 1) * (RationalFunction(1) - q(-2 * k - 2)) * ii() * ii();
    EXPECT_EQ(inner(t.psi_tilde(k, 1), t.P_tilde(k, 1)), want) << k;
  }
}

TEST(SymFn, GeneratingFunctionAndNewton) {
  for (auto [n, K] : {std::pair{1, 4}, std::pair{2, 3}}) {
    CartanDatum c(n);
    RootVectorTable t(c, K);
    for (int i = 1; i <= n; ++i) {
      EXPECT_TRUE(generating_function_crosscheck(t, K, i)) << n << " " << i;
      for (int k = 1; k <= K; ++k) EXPECT_TRUE(newton_crosscheck(t, k, i)) << n << " " << k << " " << i;
    }
  }
}

TEST(SymFn, HomomorphismAndPieriInU0) {
  CartanDatum c(1);
  RootVectorTable t(c, 3);
  UElem p1 = t.P_tilde(1, 1);
  AbstractSymFn f = AbstractSymFn::schur(Partition({2})) + AbstractSymFn::schur(Partition({1, 1}));
  EXPECT_TRUE(equals_in_uplus(hom_to_U0(f, 1).materialize(t), p1 * p1));
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m + k <= 3; ++m)
      for (const Partition& mu : partitions_of(m)) {
        UElem lhs = schur(Partition({k}), 1).materialize(t) * schur(mu, 1).materialize(t);
        EXPECT_TRUE(equals_in_uplus(lhs, hom_to_U0(abstract_pieri(k, mu), 1).materialize(t))) << k << " " << mu;
      }
}

TEST(SymFn, PtildeCommuteAndOrthonormal) {
  CartanDatum c(2);
  RootVectorTable t(c, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          const UElem &x = t.P_tilde(k, i), &y = t.P_tilde(l, j);
          EXPECT_TRUE(equals_in_uplus(x * y, y * x));
          if (k != l) continue;
          RationalFunction v = inner(x, y);
          ASSERT_TRUE(v.in_A());
          EXPECT_EQ(v.limit_at_infinity(), mpq_class(i == j ? 1 : 0)) << i << j << k;
        }
}
