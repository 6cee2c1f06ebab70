#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qaffine/cartan.hpp"

using namespace qaffine;

TEST(Cartan, Matrices) {
  CartanDatum c1(1);
  EXPECT_EQ(c1.a(0, 1), -2);
  EXPECT_EQ(c1.a(1, 1), 2);
  CartanDatum c2(2);
  EXPECT_EQ(c2.a(0, 1), -1);
  EXPECT_EQ(c2.a(1, 2), -1);
  EXPECT_EQ(c2.a(2, 0), -1);
  EXPECT_EQ(c2.o(1), -1);
  EXPECT_EQ(c2.o(2), 1);
  CartanDatum c3(3);
  EXPECT_EQ(c3.a(1, 3), 0);
  EXPECT_EQ(c3.a(3, 0), -1);
  EXPECT_THROW(CartanDatum(0), std::invalid_argument);
}

TEST(Cartan, SignMapAlternatesOnFiniteDiagram) {
  for (int n = 1; n <= 5; ++n) {
    CartanDatum c(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && c.a(i, j) < 0) EXPECT_EQ(c.o(i), -c.o(j));
  }
}

TEST(Cartan, PairingSymmetricAndDeltaNull) {
  std::mt19937 g(1);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 1; n <= 4; ++n) {
    CartanDatum c(n);
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(c.pairing(c.alpha(i), c.alpha(i)), 2);
      EXPECT_EQ(c.pairing(c.delta(), c.alpha(i)), 0);
    }
    for (int t = 0; t < 50; ++t) {
      Weight x(n), y(n);
      for (int i = 0; i <= n; ++i) {
        x[i] = d(g);
        y[i] = d(g);
      }
      EXPECT_EQ(c.pairing(x, y), c.pairing(y, x));
    }
  }
  EXPECT_EQ(CartanDatum(1).pairing(CartanDatum(1).alpha(0), CartanDatum(1).alpha(1)), -2);
}

TEST(Cartan, WeightParseAndPrint) {
  Weight w = Weight::parse("2,1,0");
  EXPECT_EQ(w.rank(), 2);
  EXPECT_EQ(w.height(), 3);
  EXPECT_EQ(w.to_string(), "2,1,0");
  EXPECT_EQ(w.delta_multiple(), 0);
  EXPECT_EQ(Weight::parse("3,2").delta_multiple(), 2);
}

TEST(Cartan, FiniteRoots) {
  EXPECT_EQ(CartanDatum(1).finite_positive_roots().size(), 1u);
  EXPECT_EQ(CartanDatum(3).finite_positive_roots().size(), 6u);
}

TEST(Cartan, RootNames) {
  CartanDatum c(1);
  EXPECT_EQ(AffineRoot::plus(0, c.alpha(1)).to_string(), "a1");
  EXPECT_EQ(AffineRoot::plus(1, c.alpha(1)).to_string(), "d+a1");
  EXPECT_EQ(AffineRoot::minus(2, c.alpha(1)).to_string(), "2d-a1");
  EXPECT_EQ(AffineRoot::imaginary(1, 1, 1).to_string(), "d^(1)");
  EXPECT_EQ(AffineRoot::minus(1, c.alpha(1)).to_weight(c), Weight::parse("1,0"));
  EXPECT_THROW(AffineRoot::minus(0, c.alpha(1)), std::invalid_argument);
}

namespace {
// Independent oracle: enumerate all partitions lambda of |mu|+k containing mu
// and test the horizontal-strip condition column by column.
std::set<Partition> brute_pieri(int k, const Partition& mu) {
  std::set<Partition> out;
  for (const Partition& lam : partitions_of(mu.size() + k)) {
    bool ok = lam.length() <= mu.length() + 1;
    for (int r = 0; ok && r < mu.length(); ++r) ok = lam.part(r) >= mu.part(r);
    // horizontal strip: lambda_{r+1} <= mu_r for all r
    for (int r = 0; ok && r + 1 < lam.length(); ++r) ok = lam.part(r + 1) <= mu.part(r);
    if (ok) out.insert(lam);
  }
  return out;
}
}  // namespace

TEST(Partitions, Counts) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(7).size(), 15u);
}

TEST(Partitions, PieriExamples) {
  auto v = pieri_shapes(1, Partition({1}));
  EXPECT_EQ(v, (std::vector<Partition>{Partition({2}), Partition({1, 1})}));
  EXPECT_EQ(pieri_shapes(2, Partition()), (std::vector<Partition>{Partition({2})}));
  EXPECT_EQ(pieri_shapes(2, Partition({2})),
            (std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2})}));
}

TEST(Partitions, PieriMatchesBruteForce) {
  for (int m = 0; m <= 5; ++m)
    for (const Partition& mu : partitions_of(m))
      for (int k = 1; k <= 4; ++k) {
        auto v = pieri_shapes(k, mu);
        std::set<Partition> s(v.begin(), v.end());
        EXPECT_EQ(s.size(), v.size());
        EXPECT_EQ(s, brute_pieri(k, mu)) << mu.to_string() << " k=" << k;
      }
}
