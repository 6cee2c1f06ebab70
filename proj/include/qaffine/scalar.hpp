// Exact scalars in q: integer polynomials, Laurent polynomials, rational
// functions, q-integers and truncated power series.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qaffine {

/// Dense polynomial in q with integer coefficients. c[k] is the coefficient
/// of q^k; the vector never ends in a zero.
class Poly {
public:
  Poly() = default;
  Poly(long v);
  explicit Poly(std::vector<mpz_class> c);
  static Poly monomial(const mpz_class& c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int k) const;
  /// Lowest exponent with a nonzero coefficient (0 for the zero poly).
  int valuation() const;

  mpz_class content() const;
  Poly primitive() const;
  Poly reversed() const;  // q^deg * p(1/q)
  Poly shifted(int k) const;  // q^k * p, k >= 0
  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const mpz_class& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Exact quotient a / b; throws if b does not divide a in Z[q].
  static Poly divexact(const Poly& a, const Poly& b);
  /// Exact quotient by an integer.
  Poly divexact(const mpz_class& s) const;
  static Poly gcd(const Poly& a, const Poly& b);
  /// Pseudo-remainder of a by b.
  static Poly prem(const Poly& a, const Poly& b);

  std::string to_string() const;  // descending powers, e.g. "q^2-q"
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Laurent polynomial in q with rational coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long v);
  static LaurentPoly monomial(const mpq_class& c, int k);

  bool is_zero() const { return c_.empty(); }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(int k) const;
  LaurentPoly bar() const;
  bool has_integer_coeffs() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
  void trim();
  int lo_ = 0;
  std::vector<mpq_class> c_;
};

/// Element of Q(q), stored as num/den with num, den in Z[q] coprime and
/// den having positive leading coefficient.
class RationalFunction {
public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(long v) : num_(v), den_(1) {}
  RationalFunction(const mpq_class& v);
  RationalFunction(const Poly& p) : num_(p), den_(1) {}
  RationalFunction(const Poly& n, const Poly& d);
  RationalFunction(const LaurentPoly& p);

  static RationalFunction q_pow(int k);
  /// Parses the output of to_string(), plus plain sums like "q+q^-1".
  static RationalFunction parse(std::string_view s);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RationalFunction inverse() const;
  RationalFunction bar() const;
  RationalFunction operator-() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Membership in the ring of functions regular at q = infinity.
  bool in_A() const { return is_zero() || num_.degree() <= den_.degree(); }
  /// Constant term of the expansion in q^-1; throws unless in_A().
  mpq_class limit_at_infinity() const;
  /// Laurent expansion, valid only when den is a monomial.
  bool is_laurent() const;
  LaurentPoly to_laurent() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
  void canonicalize();
  Poly num_, den_;
};

// q-integers [m] = (q^m - q^-m)/(q - q^-1) and friends.
LaurentPoly q_int(int m);
/// [m] for any integer m, using [-m] = -[m].
LaurentPoly q_int_signed(int m);
LaurentPoly q_fact(int m);
LaurentPoly q_binom(int m, int r);

/// Truncated series sum_{k<=order} c_k u^k over a commutative coefficient
/// type C supporting +, -, *, and scaling by mpq_class.
template <class C>
struct PowerSeries {
  int order = 0;
  std::vector<C> c;  // size order + 1

  PowerSeries(int ord, const C& zero) : order(ord), c(ord + 1, zero) {}
  const C& operator[](int k) const { return c.at(k); }
  C& operator[](int k) { return c.at(k); }
};

/// exp(s) for s with vanishing constant term; uses k e_k = sum_j j s_j e_{k-j}.
template <class C>
PowerSeries<C> series_exp(const PowerSeries<C>& s, const C& one, bool (*is_zero)(const C&)) {
  if (!is_zero(s.c[0])) throw std::invalid_argument("series_exp: nonzero constant term");
  PowerSeries<C> e(s.order, s.c[0]);
  e[0] = one;
  for (int k = 1; k <= s.order; ++k) {
    C acc = s.c[0];
    for (int j = 1; j <= k; ++j) {
      if (is_zero(s[j])) continue;
      acc = acc + (s[j] * e[k - j]) * mpq_class(j);
    }
    e[k] = acc * mpq_class(1, k);
  }
  return e;
}

/// log(s) for s with constant term one; uses k l_k = k s_k - sum_j j l_j s_{k-j}.
template <class C>
PowerSeries<C> series_log(const PowerSeries<C>& s, const C& one, bool (*is_zero)(const C&)) {
  if (!is_zero(s.c[0] - one)) throw std::invalid_argument("series_log: constant term is not one");
  C zero = s.c[0] - one;
  PowerSeries<C> l(s.order, zero);
  for (int k = 1; k <= s.order; ++k) {
    C acc = s[k] * mpq_class(k);
    for (int j = 1; j < k; ++j) {
      if (is_zero(l[j]) || is_zero(s[k - j])) continue;
      acc = acc - (l[j] * s[k - j]) * mpq_class(j);
    }
    l[k] = acc * mpq_class(1, k);
  }
  return l;
}

inline RationalFunction operator*(const RationalFunction& a, const mpq_class& s) {
  return a * RationalFunction(s);
}
inline bool rf_is_zero(const RationalFunction& a) { return a.is_zero(); }

/// Global truncation order for u-series.
inline constexpr int kDefaultMaxDelta = 6;

}  // namespace qaffine
