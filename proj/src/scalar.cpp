#include "qaffine/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace qaffine {

// ---------------------------------------------------------------- Poly

Poly::Poly(long v) {
  if (v != 0) c_.emplace_back(v);
}

Poly::Poly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int k) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

int Poly::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return 0;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (lead() < 0) g = -g;
  return divexact(g);
}

Poly Poly::reversed() const {
  std::vector<mpz_class> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<mpz_class> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const mpz_class& s) {
  if (s == 0) return Poly();
  Poly r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::divexact(const mpz_class& s) const {
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divexact: division by zero");
  if (a.is_zero()) return Poly();
  int db = b.degree();
  std::vector<mpz_class> rem = a.c_;
  int dq = a.degree() - db;
  if (dq < 0) throw std::domain_error("Poly::divexact: not divisible");
  std::vector<mpz_class> quo(dq + 1);
  mpz_class t;
  for (int k = dq; k >= 0; --k) {
    const mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw std::domain_error("Poly::divexact: not divisible");
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    quo[k] = t;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("Poly::divexact: not divisible");
  return Poly(std::move(quo));
}

Poly Poly::prem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::prem: division by zero");
  std::vector<mpz_class> r = a.c_;
  int db = b.degree();
  const mpz_class& lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    int dr = static_cast<int>(r.size()) - 1;
    mpz_class top = r.back();
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= top * b.c_[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive() * b.content();
  if (b.is_zero()) return a.primitive() * a.content();
  mpz_class ca = a.content(), cb = b.content(), g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = Poly(1);
      break;
    }
    Poly r = prem(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.primitive() * g;
}

namespace {
std::string term_string(const mpz_class& c, int k, const char* var) {
  std::string s;
  mpz_class a = abs(c);
  if (k == 0) return a.get_str();
  if (a != 1) s = a.get_str() + "*";
  s += var;
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

template <class Emit>
std::string join_terms(int n, Emit&& emit) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    auto [neg, body] = emit(i);
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? "-" : "+") + body;
  }
  return out.empty() ? "0" : out;
}
}  // namespace

std::string Poly::to_string() const {
  std::vector<int> ks;
  for (int k = degree(); k >= 0; --k)
    if (c_[k] != 0) ks.push_back(k);
  return join_terms(static_cast<int>(ks.size()), [&](int i) {
    return std::pair<bool, std::string>(c_[ks[i]] < 0, term_string(c_[ks[i]], ks[i], "q"));
  });
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long v) {
  if (v != 0) c_.emplace_back(v);
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int k) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = k;
    p.c_.push_back(c);
  }
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  if (z) {
    c_.erase(c_.begin(), c_.begin() + z);
    lo_ += static_cast<int>(z);
  }
  if (c_.empty()) lo_ = 0;
}

mpq_class LaurentPoly::coeff(int k) const {
  int i = k - lo_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -high();
  return r;
}

bool LaurentPoly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly r;
  r.lo_ = std::min(a.lo_, b.lo_);
  int hi = std::max(a.high(), b.high());
  r.c_.assign(hi - r.lo_ + 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - r.lo_ + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - r.lo_ + i] += b.c_[i];
  r.trim();
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly nb = b;
  for (auto& x : nb.c_) x = -x;
  return a + nb;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

std::string LaurentPoly::to_string() const {
  return RationalFunction(*this).to_string();
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const mpq_class& v)
    : num_(Poly(std::vector<mpz_class>{v.get_num()})),
      den_(Poly(std::vector<mpz_class>{v.get_den()})) {}

RationalFunction::RationalFunction(const Poly& n, const Poly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  canonicalize();
}

RationalFunction::RationalFunction(const LaurentPoly& p) : num_(0), den_(1) {
  if (p.is_zero()) return;
  // common denominator of the rational coefficients
  mpz_class l = 1;
  for (int k = p.low(); k <= p.high(); ++k) {
    mpq_class c = p.coeff(k);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> v(p.high() - p.low() + 1);
  for (int k = p.low(); k <= p.high(); ++k) {
    mpq_class c = p.coeff(k) * l;
    v[k - p.low()] = c.get_num();
  }
  Poly n(std::move(v));
  Poly d = Poly::monomial(l, 0);
  if (p.low() >= 0) n = n.shifted(p.low());
  else d = d.shifted(-p.low());
  num_ = n;
  den_ = d;
  canonicalize();
}

RationalFunction RationalFunction::q_pow(int k) {
  if (k >= 0) return RationalFunction(Poly::monomial(1, k));
  return RationalFunction(Poly(1), Poly::monomial(1, -k));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!(g.degree() == 0 && g.lead() == 1)) {
    num_ = Poly::divexact(num_, g);
    den_ = Poly::divexact(den_, g);
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_one() const {
  return num_.degree() == 0 && den_.degree() == 0 && num_.lead() == den_.lead();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunction RationalFunction::bar() const {
  if (is_zero()) return *this;
  // n(1/q)/d(1/q) = rev(n) q^{deg d} / (rev(d) q^{deg n})
  int dn = num_.degree(), dd = den_.degree();
  Poly n = num_.reversed(), d = den_.reversed();
  if (dd >= dn) n = n.shifted(dd - dn);
  else d = d.shifted(dn - dd);
  return RationalFunction(n, d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  Poly g = Poly::gcd(a.den_, b.den_);
  Poly bd = Poly::divexact(b.den_, g);
  Poly ad = Poly::divexact(a.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (b.den_.degree() == 0 && b.den_.lead() == 1 && a.den_.degree() == 0 && a.den_.lead() == 1)
    return RationalFunction(a.num_ * b.num_);
  // cross-cancel before multiplying to keep sizes down
  Poly g1 = Poly::gcd(a.num_, b.den_);
  Poly g2 = Poly::gcd(b.num_, a.den_);
  Poly n = Poly::divexact(a.num_, g1) * Poly::divexact(b.num_, g2);
  Poly d = Poly::divexact(a.den_, g2) * Poly::divexact(b.den_, g1);
  return RationalFunction(n, d);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

mpq_class RationalFunction::limit_at_infinity() const {
  if (is_zero()) return 0;
  if (!in_A()) throw std::domain_error("limit_at_infinity: " + to_string() + " has a pole at infinity");
  if (num_.degree() < den_.degree()) return 0;
  mpq_class r(num_.lead(), den_.lead());
  r.canonicalize();
  return r;
}

bool RationalFunction::is_laurent() const {
  const auto& d = den_.coeffs();
  for (int k = 0; k < den_.degree(); ++k)
    if (d[k] != 0) return false;
  return true;
}

LaurentPoly RationalFunction::to_laurent() const {
  if (!is_laurent()) throw std::domain_error("to_laurent: not a Laurent polynomial");
  LaurentPoly r;
  int e = den_.degree();
  for (int k = 0; k <= num_.degree(); ++k) {
    if (num_.coeff(k) == 0) continue;
    mpq_class c(num_.coeff(k), den_.lead());
    c.canonicalize();
    r = r + LaurentPoly::monomial(c, k - e);
  }
  return r;
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  std::string n = num_.to_string();
  if (den_.degree() == 0 && den_.lead() == 1) return n;
  auto multi = [](const Poly& p) {
    int cnt = 0;
    for (const auto& c : p.coeffs()) cnt += (c != 0);
    return cnt > 1 || (cnt == 1 && p.lead() != 1 && p.degree() > 0);
  };
  std::string d = den_.to_string();
  if (multi(num_)) n = "(" + n + ")";
  if (multi(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

// Recursive-descent parser for expressions in q over the integers:
// sums, products, quotients, parentheses and integer powers.
struct Parser {
  std::string_view s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("RationalFunction::parse: bad input '" + std::string(s) + "'");
  }
  long integer() {
    ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t d0 = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == d0) fail();
    long v = std::stol(std::string(s.substr(i, j - i)));
    i = j;
    return v;
  }
  RationalFunction pow(const RationalFunction& b, long e) {
    RationalFunction base = e < 0 ? b.inverse() : b, r(1);
    for (long k = 0; k < std::labs(e); ++k) r *= base;
    return r;
  }
  RationalFunction atom() {
    ws();
    if (i >= s.size()) fail();
    RationalFunction v;
    if (s[i] == '(') {
      ++i;
      v = expr();
      if (!eat(')')) fail();
    } else if (s[i] == 'q') {
      ++i;
      v = RationalFunction::q_pow(1);
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      v = RationalFunction(mpq_class(mpz_class(std::string(s.substr(i, j - i)))));
      i = j;
    } else {
      fail();
    }
    if (eat('^')) v = pow(v, integer());
    return v;
  }
  RationalFunction term() {
    RationalFunction v = atom();
    for (;;) {
      ws();
      if (eat('*')) v *= atom();
      else if (eat('/')) v = v / atom();
      else if (i < s.size() && (s[i] == 'q' || s[i] == '(')) v *= atom();
      else return v;
    }
  }
  RationalFunction expr() {
    RationalFunction v;
    bool neg = eat('-');
    if (!neg) eat('+');
    v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view s) {
  Parser p{s};
  RationalFunction v = p.expr();
  p.ws();
  if (p.i != s.size()) p.fail();
  return v;
}

// ---------------------------------------------------------------- q-combinatorics

LaurentPoly q_int(int m) {
  if (m < 0) throw std::invalid_argument("q_int: negative argument");
  LaurentPoly r;
  for (int k = 0; k < m; ++k) r = r + LaurentPoly::monomial(1, m - 1 - 2 * k);
  return r;
}

LaurentPoly q_int_signed(int m) { return m >= 0 ? q_int(m) : LaurentPoly(-1) * q_int(-m); }

LaurentPoly q_fact(int m) {
  if (m < 0) throw std::invalid_argument("q_fact: negative argument");
  LaurentPoly r(1);
  for (int k = 2; k <= m; ++k) r = r * q_int(k);
  return r;
}

LaurentPoly q_binom(int m, int r) {
  if (m < 0 || r < 0 || r > m) throw std::invalid_argument("q_binom: need m >= r >= 0");
  // Pascal rule [m,r] = q^{-r}[m-1,r] + q^{m-r}[m-1,r-1]
  std::vector<std::vector<LaurentPoly>> t(m + 1);
  for (int a = 0; a <= m; ++a) {
    t[a].resize(a + 1);
    t[a][0] = LaurentPoly(1);
    t[a][a] = LaurentPoly(1);
    for (int b = 1; b < a; ++b)
      t[a][b] = LaurentPoly::monomial(1, -b) * t[a - 1][b] +
                LaurentPoly::monomial(1, a - b) * t[a - 1][b - 1];
  }
  return t[m][r];
}

}  // namespace qaffine
