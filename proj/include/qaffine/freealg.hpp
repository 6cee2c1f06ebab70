// Free algebra on E_0..E_n over Q(q): words, integer Laurent coefficients,
// elements with a common rational scale, derivations, sigma, bar, coproduct.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/scalar.hpp"

namespace qaffine {

/// Word over the affine nodes, at most kMax letters, stored inline.
class Word {
public:
  static constexpr int kMax = 31;

  Word() { b_.fill(0); }
  Word(std::initializer_list<int> letters);
  static Word letter(int i);

  int size() const { return b_[0]; }
  bool empty() const { return b_[0] == 0; }
  int operator[](int k) const { return b_[k + 1]; }
  void push_back(int i);
  Word erase(int pos) const;
  Word reversed() const;
  Word subword(int from, int len) const;
  Weight weight(int n) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.b_ == b.b_; }
  /// Lexicographic on letters, a proper prefix first.
  friend bool operator<(const Word& a, const Word& b);

  size_t hash() const;
  std::string to_string() const;  // "E[0]E[1]"; "1" for the empty word

private:
  std::array<uint8_t, kMax + 1> b_;  // b_[0] = length
};

struct WordHash {
  size_t operator()(const Word& w) const { return w.hash(); }
};

/// Laurent polynomial with int64 coefficients; overflow is checked and
/// raised as std::overflow_error.
class ZLaurent {
public:
  ZLaurent() = default;
  ZLaurent(int64_t v) {
    if (v) c_.push_back(v);
  }
  static ZLaurent monomial(int64_t c, int k);
  static ZLaurent from_laurent(const LaurentPoly& p);  // integer coefficients only
  static ZLaurent from_poly(const Poly& p);

  bool is_zero() const { return c_.empty(); }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  int64_t coeff(int k) const;
  const std::vector<int64_t>& coeffs() const { return c_; }

  /// this += m * q^shift * o
  void add_mul_shift(const ZLaurent& o, int64_t m, int shift);
  ZLaurent operator-() const;
  friend ZLaurent operator+(const ZLaurent& a, const ZLaurent& b);
  friend ZLaurent operator-(const ZLaurent& a, const ZLaurent& b);
  friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
  friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
  ZLaurent shifted(int k) const;
  ZLaurent bar() const;

  /// Positive gcd of the coefficients (0 for zero).
  int64_t content() const;
  void divexact(int64_t d);
  /// Exact division by a polynomial in q (as a Laurent shift of p).
  ZLaurent divexact(const ZLaurent& d) const;

  LaurentPoly to_laurent() const;
  /// q^{-low} times this, as a polynomial.
  Poly to_poly() const;
  std::string to_string() const;

private:
  void trim();
  int lo_ = 0;
  std::vector<int64_t> c_;
};

/// Scaled integer vector: the value of term t is scale * c_t. Shared by free
/// elements and dual images, so arithmetic on scales lives here.
struct ScaleRatio {
  ZLaurent a, b;  // s_x / s_y = a / b
  RationalFunction out_scale;  // s_y / b
};
ScaleRatio scale_ratio(const RationalFunction& sx, const RationalFunction& sy);
/// Splits f = s * p with p an integer Laurent polynomial of content 1 and
/// s = q^k * (1/den) * (integer) in canonical form.
std::pair<RationalFunction, ZLaurent> split_scalar(const RationalFunction& f);

/// Element of the free algebra: scale * sum_w c_w E_w.
class FreeElement {
public:
  using Term = std::pair<Word, ZLaurent>;

  FreeElement() = default;
  static FreeElement one();
  static FreeElement generator(int i);
  static FreeElement monomial(const Word& w, const RationalFunction& c = RationalFunction(1));
  /// Builds from (word, coefficient) pairs; duplicates are merged.
  static FreeElement from_terms(const std::vector<std::pair<Word, RationalFunction>>& t);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const RationalFunction& scale() const { return scale_; }
  const std::vector<Term>& terms() const { return terms_; }
  RationalFunction coeff(const Word& w) const;
  /// Terms with explicit Q(q) coefficients, in word order.
  std::vector<std::pair<Word, RationalFunction>> expanded() const;

  /// Weight of a homogeneous element; throws if mixed or zero.
  Weight weight(int n) const;
  bool is_homogeneous(int n) const;
  std::map<Weight, FreeElement> homogeneous_parts(int n) const;
  int height() const;

  FreeElement operator-() const;
  friend FreeElement operator+(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator-(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator*(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator*(const RationalFunction& s, const FreeElement& x);
  FreeElement& operator+=(const FreeElement& y) { return *this = *this + y; }
  /// Exact equality in the free algebra (not modulo Serre).
  friend bool operator==(const FreeElement& x, const FreeElement& y);

  FreeElement r(const CartanDatum& c, int i) const;   // strips a trailing E_i
  FreeElement ir(const CartanDatum& c, int i) const;  // strips a leading E_i
  FreeElement sigma() const;
  FreeElement bar() const;

  /// "coeff * E[i1]E[i2]... + ..."
  std::string to_string() const;

  /// Internal: builds from unsorted integer terms and a scale, consolidating.
  static FreeElement from_raw(RationalFunction scale, std::vector<Term> terms);

private:
  void normalize();
  RationalFunction scale_ = RationalFunction(1);
  std::vector<Term> terms_;  // sorted by word, nonzero coefficients
};

FreeElement divided_power(const FreeElement& x, int r);
/// Maximum height any construction may reach (Word::kMax unless lowered).
int height_cap();
void set_height_cap(int h);

/// Element of the twisted tensor square F (x) F.
class TensorElement {
public:
  using Key = std::pair<Word, Word>;
  std::map<Key, RationalFunction> terms;

  static TensorElement pure(const FreeElement& x, const FreeElement& y);
  TensorElement& add(const Key& k, const RationalFunction& c);
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms == b.terms; }
  /// (x1 (x) x2)(y1 (x) y2) = q^{|x2|.|y1|} x1 y1 (x) x2 y2
  static TensorElement multiply(const CartanDatum& c, const TensorElement& a, const TensorElement& b);
};

/// Lusztig's coproduct r, an algebra map into the twisted tensor square.
TensorElement coproduct_r(const CartanDatum& c, const FreeElement& x);
/// (r (x) id) r and (id (x) r) r, as triple tensors for coassociativity checks.
std::map<std::array<Word, 3>, RationalFunction> coproduct_left_then(const CartanDatum& c, const FreeElement& x);
std::map<std::array<Word, 3>, RationalFunction> coproduct_right_then(const CartanDatum& c, const FreeElement& x);

}  // namespace qaffine
