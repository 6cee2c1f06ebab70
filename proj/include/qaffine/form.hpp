// Lusztig's bilinear form on the free algebra and the resulting zero test
// modulo its radical (the quantum Serre ideal).
//
// The workhorse is the dual image of an element x of weight nu,
//   dual(x)_w = (1 - q^-2)^{ht nu} (E_w, x)   for words w of weight nu,
// which is a vector of integer Laurent polynomials (up to a common scale).
// It satisfies dual(E_i) = [i] and dual(xy) = dual(x) * dual(y), where * is
// the q-twisted shuffle product. x is zero in U+ iff dual(x) = 0.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qaffine/freealg.hpp"

namespace qaffine {

/// All words of a fixed weight, ranked lexicographically.
class WordSpace {
public:
  static std::shared_ptr<const WordSpace> get(const Weight& nu);

  const Weight& weight() const { return nu_; }
  int height() const { return height_; }
  size_t size() const { return count_[top_]; }
  Word word(size_t idx) const;
  size_t index(const Word& w) const;
  /// Incremental ranking: state for the full multiset, then step(state, c)
  /// consumes letter c and rank_step(state, c) is its rank contribution.
  int top_state() const { return top_; }
  int step(int state, int c) const { return state - stride_[c]; }
  uint64_t rank_step(int state, int c) const { return contrib_[state * nodes_ + c]; }
  bool has(int state, int c) const;

  explicit WordSpace(const Weight& nu);

private:
  Weight nu_;
  int nodes_, height_, top_;
  std::vector<int> stride_;
  std::vector<uint64_t> count_;    // words for each remaining multiset
  std::vector<uint64_t> contrib_;  // [state][letter]
};

/// Sparse dual image over a WordSpace, with a common rational scale.
/// Entries are sorted by word rank and never zero.
struct DualVec {
  std::shared_ptr<const WordSpace> space;
  RationalFunction scale = RationalFunction(1);
  std::vector<std::pair<uint64_t, ZLaurent>> e;

  bool is_zero() const { return e.empty(); }
  size_t nonzeros() const { return e.size(); }
  /// Entry at a word rank, or nullptr.
  const ZLaurent* find(uint64_t idx) const;
  /// Moves integer and polynomial content into the scale.
  void normalize();
};

/// Element of U+ (homogeneous): a free representative, when small enough to
/// keep, together with its dual image.
class UElem {
public:
  UElem() = default;  // zero of unspecified weight
  UElem(const CartanDatum& c, const FreeElement& x);
  static UElem generator(const CartanDatum& c, int i);
  static UElem one(const CartanDatum& c);

  bool is_zero() const;  // zero in U+
  bool has_weight() const { return dual_.space != nullptr; }
  const Weight& weight() const;
  int height() const { return has_weight() ? dual_.space->height() : 0; }
  const DualVec& dual() const { return dual_; }
  bool has_free() const { return free_.has_value(); }
  const FreeElement& free() const;
  void drop_free() { free_.reset(); }

  /// Dual coefficient at word w as an element of Q(q).
  RationalFunction dual_coeff(const Word& w) const;

  UElem operator-() const;
  friend UElem operator+(const UElem& x, const UElem& y);
  friend UElem operator-(const UElem& x, const UElem& y);
  friend UElem operator*(const UElem& x, const UElem& y);
  friend UElem operator*(const RationalFunction& s, const UElem& x);
  friend UElem operator*(const UElem& x, const mpq_class& s);
  UElem& operator+=(const UElem& y) { return *this = *this + y; }

  UElem r(int i) const;   // right derivation r_i
  UElem ir(int i) const;  // left derivation _ir

  /// Free representatives above this many terms are dropped after products.
  static void set_free_limit(size_t n);
  static size_t free_limit();

  const CartanDatum* datum() const { return c_; }

private:
  friend UElem make_uelem(const CartanDatum&, std::optional<FreeElement>, DualVec);
  const CartanDatum* c_ = nullptr;
  std::optional<FreeElement> free_;
  DualVec dual_;
};

UElem make_uelem(const CartanDatum& c, std::optional<FreeElement> free, DualVec dual);
UElem divided_power(const UElem& x, int r);
/// q-commutator x y - q^k y x.
UElem qcomm(const UElem& x, const UElem& y, int k);

/// Twisted shuffle of dual images.
DualVec shuffle(const CartanDatum& c, const DualVec& x, const DualVec& y);
/// Dual image of a homogeneous free element (recursion on the first letter).
DualVec dual_of(const CartanDatum& c, const FreeElement& x);

// ---- form operations

/// (x, y) for free elements; 0 across weights.
RationalFunction inner(const CartanDatum& c, const FreeElement& x, const FreeElement& y);
/// (x, y) in U+; uses whichever side has a free representative.
RationalFunction inner(const UElem& x, const UElem& y);

/// Zero test by iterated left derivations down to height 0, on the free
/// representative directly.
bool is_zero_by_derivations(const CartanDatum& c, const FreeElement& x);
/// Zero test via the dual image (homogeneous parts separately).
bool is_zero_in_uplus(const CartanDatum& c, const FreeElement& x);
bool equals_in_uplus(const CartanDatum& c, const FreeElement& x, const FreeElement& y);
bool equals_in_uplus(const UElem& x, const UElem& y);

/// sum_r (-1)^r [1 - a_ij choose r] E_i^r E_j E_i^{1 - a_ij - r}, for i != j.
FreeElement serre_element(const CartanDatum& c, int i, int j);

bool in_lattice(const CartanDatum& c, const FreeElement& x);
bool in_lattice(const UElem& x);

/// Memo of (E_u, E_v) for words of equal weight, smaller word first.
class PairingCache {
public:
  explicit PairingCache(const CartanDatum& c) : c_(c) {}
  RationalFunction get(const Word& u, const Word& v);
  size_t size() const;

private:
  ZLaurent raw(const Word& u, const Word& v);  // dual(E_v)_u
  const CartanDatum& c_;
  mutable std::mutex mu_;
  std::unordered_map<Word, std::unordered_map<Word, ZLaurent, WordHash>, WordHash> memo_;
};

// ---- exact linear algebra and dimensions

/// Rank of the matrix with rows dual(x_k), specialized at q = q0 mod p.
/// A lower bound for the rank over Q(q).
size_t rank_specialized(const std::vector<const DualVec*>& rows, uint64_t q0, uint64_t p);
/// Indices of rows forming an independent set at the specialization, and
/// the pivot columns chosen for them.
std::pair<std::vector<size_t>, std::vector<size_t>> independent_rows_specialized(
    const std::vector<const DualVec*>& rows, uint64_t q0, uint64_t p);

struct GramRank {
  size_t words = 0;
  size_t lower = 0;  // rank at a specialization
  size_t upper = 0;  // words minus independent certified radical vectors
  bool exact() const { return lower == upper; }
};
/// Rank of the Gram matrix on words of weight nu, certified from both sides.
GramRank gram_rank(const CartanDatum& c, const Weight& nu);
/// Dimension from the PBW count (Kostant partition function with imaginary
/// multiplicity n).
uint64_t dim_oracle(const CartanDatum& c, const Weight& nu);
size_t dim_uplus(const CartanDatum& c, const Weight& nu);

/// Solves x = sum_k a_k b_k in U+; throws std::domain_error when the b_k
/// are dependent or x is not in their span.
std::vector<RationalFunction> coords(const UElem& x, const std::vector<UElem>& basis);
/// coords for several elements of one weight, sharing the elimination.
std::vector<std::vector<RationalFunction>> coords_many(const std::vector<UElem>& xs, const std::vector<UElem>& basis);
std::vector<RationalFunction> coords(const CartanDatum& c, const FreeElement& x, const std::vector<FreeElement>& basis);

/// Exact solve of A y = b over Q(q) by fraction-free elimination; A square.
std::vector<RationalFunction> solve_exact(const std::vector<std::vector<RationalFunction>>& A,
                                          const std::vector<RationalFunction>& b);
/// As solve_exact for several right-hand sides at once.
std::vector<std::vector<RationalFunction>> solve_exact_many(const std::vector<std::vector<RationalFunction>>& A,
                                                           const std::vector<std::vector<RationalFunction>>& B);

}  // namespace qaffine
