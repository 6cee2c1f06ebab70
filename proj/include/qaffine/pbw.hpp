// PBW indices over the positive affine roots, the ordered monomials E_c,
// E'_c and B_c, the projection pi0 onto the imaginary subalgebra, and the
// orthonormality and integrality checks built on them.
//
// Real root vectors exist for roots k delta +- alpha_i with alpha_i simple;
// for n >= 2 indices touching other finite roots are reported unsupported.
#pragma once

#include <mutex>
#include <optional>

#include "qaffine/symfun.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine {

/// Finitely supported map from positive affine roots to N.
struct PBWIndex {
  std::map<AffineRoot, int> c;  // no zero entries

  PBWIndex& add(const AffineRoot& r, int m = 1);
  int operator()(const AffineRoot& r) const;
  Weight weight(const CartanDatum& cd) const;
  /// Restrictions to k delta + alpha, imaginary, and k delta - alpha roots.
  PBWIndex greater_part() const;
  PBWIndex imaginary_part() const;
  PBWIndex less_part() const;
  bool is_imaginary() const;
  /// Imaginary part as (k, i) -> c(k delta, i).
  PtMonomial imaginary_exponents() const;
  std::string to_string() const;

  friend bool operator==(const PBWIndex& a, const PBWIndex& b) = default;
  friend auto operator<=>(const PBWIndex& a, const PBWIndex& b) = default;
};

/// Every PBW index of weight nu, in a fixed deterministic order.
std::vector<PBWIndex> pbw_indices(const CartanDatum& c, const Weight& nu);

struct OrthonormalityTable {
  Weight weight;
  std::vector<PBWIndex> indices;
  /// limit at q = infinity of (B_c, B_c'); nullopt when not in A.
  std::vector<std::vector<std::optional<mpq_class>>> limits;
  bool pass = false;
};

class PBWBasis {
public:
  explicit PBWBasis(RootVectorTable& t);

  const CartanDatum& datum() const { return t_.datum(); }
  const RootOrder& order() const { return order_; }
  RootVectorTable& table() { return t_; }

  /// True when every real root of c has a constructed root vector.
  bool supported(const PBWIndex& c) const;
  const UElem& root_vector(const AffineRoot& r);

  /// Ordered product of divided powers of real root vectors and P~ factors.
  UElem E(const PBWIndex& c);
  /// As E, with psi~ factors in place of P~.
  UElem E_prime(const PBWIndex& c);
  /// E_{c>} S_{c0} E_{c<}.
  UElem B(const PBWIndex& c);

  /// Coordinates of x (weight in N delta) on the B basis, restricted to the
  /// purely imaginary indices.
  std::map<PtMonomial, RationalFunction> pi0_coords(const UElem& x);
  ImaginaryElement pi0(const UElem& x);

  OrthonormalityTable orthonormality_table(const Weight& nu);
  /// Coordinates of E_c E_c' on the E basis of its weight are in Z[q, q^-1].
  bool integrality_check(const PBWIndex& c, const PBWIndex& cp);
  /// The same for every pair of indices of weights a and b, in both orders;
  /// returns the first failing pair.
  std::optional<std::pair<PBWIndex, PBWIndex>> integrality_check(const Weight& a, const Weight& b);
  /// (E_c, E_c') equals (E_{c0}, E_{c'0}) times the divided-power norms of
  /// the real parts, which must agree.
  bool luinner_check(const PBWIndex& c, const PBWIndex& cp);

private:
  UElem ordered(const PBWIndex& c, bool psi);
  std::vector<UElem> basis_E(const std::vector<PBWIndex>& idx);
  std::vector<UElem> basis_B(const std::vector<PBWIndex>& idx);

  RootVectorTable& t_;
  RootOrder order_;
  std::mutex mu_;
  std::map<PBWIndex, UElem> e_memo_;
};

/// (E_i^(m), E_i^(m)) = prod_{s=1}^{m} (1 - q^{-2s})^{-1}.
RationalFunction divided_power_norm(int m);

}  // namespace qaffine
