// The imaginary subalgebra U+(0) as a ring of symmetric functions.
//
// ImaginaryElement is a polynomial in the commuting generators P~_{k,i};
// it is turned into an element of U+ only when asked. AbstractSymFn is the
// classical ring in the complete homogeneous basis h_lambda, used as an
// oracle through the substitution h_k -> P~_{k,i}.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "qaffine/rootvec.hpp"

namespace qaffine {

/// Exponents of P~_{k,i}, keyed by (k, i). Also used for imaginary PBW
/// indices c_0, where (k, i) -> c_0(k delta, i).
using PtMonomial = std::map<std::pair<int, int>, int>;

class ImaginaryElement {
public:
  ImaginaryElement() = default;
  static ImaginaryElement constant(const RationalFunction& c);
  /// P~_{k,i}, with P~_0 = 1 and P~_k = 0 for k < 0.
  static ImaginaryElement generator(int k, int i);

  const std::map<PtMonomial, RationalFunction>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  /// Multiple of delta of every term; throws unless homogeneous and nonzero.
  int degree() const;

  ImaginaryElement operator-() const;
  friend ImaginaryElement operator+(const ImaginaryElement& x, const ImaginaryElement& y);
  friend ImaginaryElement operator-(const ImaginaryElement& x, const ImaginaryElement& y);
  friend ImaginaryElement operator*(const ImaginaryElement& x, const ImaginaryElement& y);
  friend ImaginaryElement operator*(const RationalFunction& s, const ImaginaryElement& x);
  friend bool operator==(const ImaginaryElement& x, const ImaginaryElement& y) { return x.t_ == y.t_; }

  /// The element of U+, each monomial multiplied out with factors ordered
  /// by (k, i). Requires a homogeneous element.
  UElem materialize(RootVectorTable& t) const;
  std::string to_string() const;

private:
  void add_term(const PtMonomial& m, const RationalFunction& c);
  std::map<PtMonomial, RationalFunction> t_;
};

/// Symmetric function in the basis h_lambda.
class AbstractSymFn {
public:
  AbstractSymFn() = default;
  static AbstractSymFn constant(const RationalFunction& c);
  /// h_k, with h_0 = 1 and h_k = 0 for k < 0.
  static AbstractSymFn h(int k);
  /// Jacobi-Trudi determinant det(h_{lambda_r - r + m}).
  static AbstractSymFn schur(const Partition& lambda);
  /// Power sum from Newton's identity k h_k = sum_s p_s h_{k-s}.
  static AbstractSymFn power_sum(int k);
  /// Elementary e_k from sum_r (-1)^r e_r h_{k-r} = 0.
  static AbstractSymFn e(int k);
  /// Dual Jacobi-Trudi determinant det(e_{lambda'_r - r + m}).
  static AbstractSymFn schur_dual(const Partition& lambda);

  const std::map<Partition, RationalFunction>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  AbstractSymFn operator-() const;
  friend AbstractSymFn operator+(const AbstractSymFn& x, const AbstractSymFn& y);
  friend AbstractSymFn operator-(const AbstractSymFn& x, const AbstractSymFn& y);
  friend AbstractSymFn operator*(const AbstractSymFn& x, const AbstractSymFn& y);
  friend AbstractSymFn operator*(const RationalFunction& s, const AbstractSymFn& x);
  friend bool operator==(const AbstractSymFn& x, const AbstractSymFn& y) { return x.t_ == y.t_; }
  std::string to_string() const;

private:
  void add_term(const Partition& p, const RationalFunction& c);
  std::map<Partition, RationalFunction> t_;
};

/// sum of s_lambda over lambda/mu a horizontal strip of k boxes.
AbstractSymFn abstract_pieri(int k, const Partition& mu);
/// Substitutes h_k -> P~_{k,i}.
ImaginaryElement hom_to_U0(const AbstractSymFn& f, int i);

/// s_{lambda,i} as the t x t Jacobi-Trudi determinant in the P~_{.,i};
/// t < 0 means t = length(lambda).
ImaginaryElement schur(const Partition& lambda, int i, int t = -1);
/// Product over i of s_{lambda(i),i}, lambda(i) having c0(k, i) parts k.
ImaginaryElement S(const PtMonomial& c0);
/// The partition of color i read off from an imaginary index.
Partition partition_of(const PtMonomial& c0, int i);

/// P~_{k,i} = (1/k) sum_s (s/[s]) E_{s delta,i} P~_{k-s,i}, checked in U+.
bool newton_crosscheck(RootVectorTable& t, int k, int i);
/// sum P_m u^m = exp(-sum E_{m delta,i} u^m/[m]) and the P~ analogue with
/// the opposite sign, for all m <= k.
bool generating_function_crosscheck(RootVectorTable& t, int k, int i);

}  // namespace qaffine
