// Extended affine Weyl group acting on the affine root lattice, the reduced
// word of t_{2rho}, the beta sequence and the convex order on roots.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qaffine/cartan.hpp"

namespace qaffine {

/// Linear action on the root lattice Z^{n+1} (basis alpha_0..alpha_n),
/// stored with its inverse. Columns are images of simple roots.
class AffineWeylElement {
public:
  static AffineWeylElement identity(const CartanDatum& c);
  static AffineWeylElement reflection(const CartanDatum& c, int i);
  /// Translation t_omega for omega = sum_i m_i omega_i (m over nodes 1..n).
  static AffineWeylElement translation(const CartanDatum& c, const std::vector<int>& m);
  static AffineWeylElement t_two_rho(const CartanDatum& c);
  /// Rotation of the cycle i -> i + s (mod n+1).
  static AffineWeylElement rotation(const CartanDatum& c, int s);

  Weight act(const Weight& v) const;
  Weight act_inverse(const Weight& v) const;
  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  bool operator==(const AffineWeylElement& o) const { return m_ == o.m_; }

  /// Number of positive real roots sent to negative roots.
  int length() const;
  /// i is a left descent iff w^{-1}(alpha_i) is negative.
  bool is_descent(int i) const;

private:
  AffineWeylElement(const CartanDatum& c) : c_(&c) {}
  const CartanDatum* c_;
  std::vector<std::vector<int>> m_, inv_;
};

/// Real root test on the affine root lattice.
bool is_positive_real(const CartanDatum& c, const Weight& v);
bool is_negative_real(const CartanDatum& c, const Weight& v);
/// Converts a positive real root vector to an AffineRoot.
AffineRoot classify_real(const CartanDatum& c, const Weight& v);

struct ReducedWord {
  std::vector<int> letters;
  AffineWeylElement evaluate(const CartanDatum& c) const;
};

/// Greedy left-descent extraction of a reduced word.
ReducedWord reduced_word(const CartanDatum& c, const AffineWeylElement& w);
ReducedWord t_two_rho_word(const CartanDatum& c);

/// beta_k along the periodic sequence built from the reduced word, and the
/// total order on positive roots that it induces.
class RootOrder {
public:
  RootOrder(const CartanDatum& c, int max_delta);

  const ReducedWord& word() const { return word_; }
  int period() const { return static_cast<int>(word_.letters.size()); }
  int max_delta() const { return max_delta_; }
  /// Letter i_k of the doubly infinite sequence.
  int letter(int k) const;
  /// beta_k as a lattice vector (any k, computed by prefix products).
  Weight beta_vector(int k) const;
  AffineRoot beta(int k) const;
  /// Index k with beta_k = r; nullopt when outside the precomputed window.
  std::optional<int> index_of(const AffineRoot& r) const;
  /// Strict total order; throws for roots outside the window.
  bool less(const AffineRoot& a, const AffineRoot& b) const;
  /// Real roots in the window with delta-degree <= max_delta, sorted.
  std::vector<AffineRoot> window_roots() const;

private:
  std::vector<int> key(const AffineRoot& r) const;
  const CartanDatum* c_;
  int max_delta_;
  ReducedWord word_;
  std::map<AffineRoot, int> index_;
};

}  // namespace qaffine
