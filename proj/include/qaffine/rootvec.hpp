// Affine root vectors inside U+: seeds E_{d-a_i}, real root vectors
// E_{kd+a_i}, E_{kd-a_i}, psi~_{k,i}, imaginary E_{kd,i}, P_{k,i}, P~_{k,i},
// and the operators D+-, bold D, bold D~ applied to divided powers of xi.
#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "qaffine/form.hpp"

namespace qaffine {

enum class Sign { Plus, Minus };

/// Lazily built, cached table of root vectors for one datum and degree bound.
/// Access is thread-safe; every entry is computed once.
class RootVectorTable {
public:
  RootVectorTable(const CartanDatum& c, int k_max);

  const CartanDatum& datum() const { return c_; }
  int k_max() const { return k_max_; }

  /// E_{d - a_i}, built by braid substitutions along a support-avoiding chain.
  const UElem& seed(int i);
  /// E_{k d + a_i} (k >= 0) or E_{k d - a_i} (k >= 1).
  const UElem& real(int k, Sign s, int i);
  const UElem& psi_tilde(int k, int i);
  /// E_{k d, i}, from the logarithm of 1 + sum (q - q^-1) psi~_k u^k.
  const UElem& imag(int k, int i);
  const UElem& P(int k, int i);
  const UElem& P_tilde(int k, int i);

  /// D^+_{k,i}(xi^(r)) and D^-_{k,i}(xi^(r)).
  const UElem& D(Sign s, int k, int i, int r);
  /// sum_m q^{k-m} P_{k-m,i} D+_{m,i}(xi^(r)).
  UElem bold_D(int k, int i, int r);
  /// sum_m D+_{m,i}(xi^(r)) q^{m-k} P~_{k-m,i}.
  UElem bold_D_tilde(int k, int i, int r);

  /// The braid chain used for seed(i): reflecting nodes in order.
  std::vector<int> seed_chain(int i) const;

private:
  void check_index(int k, int i, int kmin) const;
  template <class F>
  const UElem& memo(std::map<std::tuple<int, int, int, int>, UElem>& m, std::tuple<int, int, int, int> key, F&& make);

  const CartanDatum& c_;
  int k_max_;
  std::recursive_mutex mu_;
  std::map<std::tuple<int, int, int, int>, UElem> seeds_, real_, psi_, imag_, p_, pt_, d_;
};

/// x y - y x.
UElem commutator(const UElem& x, const UElem& y);

/// Applies T_j (one-letter substitution E_m -> E_m E_j - q^-1 E_j E_m for
/// every letter m adjacent to j) to a free element not involving E_j.
FreeElement braid_substitute(const CartanDatum& c, const FreeElement& x, int j);

}  // namespace qaffine
