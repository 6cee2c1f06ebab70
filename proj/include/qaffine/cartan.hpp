// Root datum of untwisted affine sl_{n+1}: Cartan matrix, weights, the sign
// map o, affine roots and partitions.
#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace qaffine {

/// Integer vector over the affine nodes 0..n, in the basis of simple roots.
struct Weight {
  std::vector<int> d;

  Weight() = default;
  explicit Weight(int n) : d(n + 1, 0) {}
  explicit Weight(std::vector<int> v) : d(std::move(v)) {}

  int rank() const { return static_cast<int>(d.size()) - 1; }
  int operator[](int i) const { return d.at(i); }
  int& operator[](int i) { return d.at(i); }
  int height() const;
  bool is_nonnegative() const;
  bool is_zero() const;
  /// Largest m with m*delta <= *this componentwise.
  int delta_multiple() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(int m, const Weight& a);
  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) = default;

  std::string to_string() const;  // "a0,a1,...,an"
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }
  static Weight parse(const std::string& s);
};

class CartanDatum {
public:
  explicit CartanDatum(int n);

  int rank() const { return n_; }
  int nodes() const { return n_ + 1; }
  int a(int i, int j) const { return a_[i][j]; }
  /// o(i) = (-1)^i on the finite nodes.
  int o(int i) const { return (i % 2 == 0) ? 1 : -1; }

  Weight alpha(int i) const;
  Weight delta() const;
  int pairing(const Weight& x, const Weight& y) const;
  /// Finite positive roots alpha_a + ... + alpha_b (1 <= a <= b <= n), as
  /// weights with zero in the 0 slot.
  std::vector<Weight> finite_positive_roots() const;
  bool is_finite_root(const Weight& w) const;

private:
  int n_;
  std::vector<std::vector<int>> a_;
};

enum class RootKind { RealPlus, Imaginary, RealMinus };

/// Positive affine root with multiplicity label: k*delta + alpha,
/// (k*delta, color) or k*delta - alpha.
struct AffineRoot {
  RootKind kind = RootKind::RealPlus;
  int k = 0;
  Weight alpha;  // finite positive root (zero in slot 0); unused for imaginary
  int color = 0;  // node in 1..n for imaginary roots

  static AffineRoot plus(int k, Weight alpha);
  static AffineRoot minus(int k, Weight alpha);
  static AffineRoot imaginary(int k, int color, int n);

  Weight to_weight(const CartanDatum& c) const;
  bool is_real() const { return kind != RootKind::Imaginary; }
  /// Index i when alpha = alpha_i is simple, else -1.
  int simple_index() const;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const AffineRoot& r) { return os << r.to_string(); }

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) = default;
  friend auto operator<=>(const AffineRoot& a, const AffineRoot& b) = default;
};

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int part(int k) const { return k < length() ? parts[k] : 0; }
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) = default;
};

std::vector<Partition> partitions_of(int m);
/// All lambda containing mu with lambda/mu a horizontal strip of k boxes.
std::vector<Partition> pieri_shapes(int k, const Partition& mu);

}  // namespace qaffine
