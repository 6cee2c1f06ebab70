#include "qaffine/freealg.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace qaffine {

namespace {
std::atomic<int> g_height_cap{Word::kMax};

int64_t add_checked(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ZLaurent: coefficient overflow");
  return r;
}

int64_t mul_checked(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ZLaurent: coefficient overflow");
  return r;
}

int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("ZLaurent: coefficient does not fit in 64 bits");
  return z.get_si();
}
}  // namespace

int height_cap() { return g_height_cap.load(); }
void set_height_cap(int h) { g_height_cap = std::clamp(h, 0, Word::kMax); }

// ---------------------------------------------------------------- Word

Word::Word(std::initializer_list<int> letters) {
  b_.fill(0);
  for (int i : letters) push_back(i);
}

Word Word::letter(int i) {
  Word w;
  w.push_back(i);
  return w;
}

void Word::push_back(int i) {
  if (b_[0] >= std::min(kMax, height_cap()))
    throw std::length_error("Word: height cap " + std::to_string(std::min(kMax, height_cap())) + " exceeded");
  b_[++b_[0]] = static_cast<uint8_t>(i);
}

Word Word::erase(int pos) const {
  Word w;
  for (int k = 0; k < size(); ++k)
    if (k != pos) w.b_[++w.b_[0]] = b_[k + 1];
  return w;
}

Word Word::reversed() const {
  Word w;
  w.b_[0] = b_[0];
  for (int k = 0; k < size(); ++k) w.b_[k + 1] = b_[size() - k];
  return w;
}

Word Word::subword(int from, int len) const {
  Word w;
  for (int k = from; k < from + len; ++k) w.b_[++w.b_[0]] = b_[k + 1];
  return w;
}

Weight Word::weight(int n) const {
  Weight w(n);
  for (int k = 0; k < size(); ++k) ++w.d[b_[k + 1]];
  return w;
}

Word operator+(const Word& a, const Word& b) {
  if (a.size() + b.size() > std::min(Word::kMax, height_cap()))
    throw std::length_error("Word: height cap " + std::to_string(std::min(Word::kMax, height_cap())) + " exceeded");
  Word w = a;
  for (int k = 0; k < b.size(); ++k) w.b_[++w.b_[0]] = b.b_[k + 1];
  return w;
}

bool operator<(const Word& a, const Word& b) {
  int m = std::min(a.size(), b.size());
  for (int k = 1; k <= m; ++k)
    if (a.b_[k] != b.b_[k]) return a.b_[k] < b.b_[k];
  return a.size() < b.size();
}

size_t Word::hash() const {
  // FNV-1a over the used bytes
  uint64_t h = 1469598103934665603ull;
  for (int k = 0; k <= size(); ++k) {
    h ^= b_[k];
    h *= 1099511628211ull;
  }
  return h;
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::string s;
  for (int k = 0; k < size(); ++k) s += "E[" + std::to_string(b_[k + 1]) + "]";
  return s;
}

// ---------------------------------------------------------------- ZLaurent

ZLaurent ZLaurent::monomial(int64_t c, int k) {
  ZLaurent z;
  if (c) {
    z.lo_ = k;
    z.c_.push_back(c);
  }
  return z;
}

ZLaurent ZLaurent::from_laurent(const LaurentPoly& p) {
  ZLaurent z;
  if (p.is_zero()) return z;
  if (!p.has_integer_coeffs()) throw std::invalid_argument("ZLaurent: non-integer coefficient");
  z.lo_ = p.low();
  for (int k = p.low(); k <= p.high(); ++k) z.c_.push_back(to_int64(p.coeff(k).get_num()));
  z.trim();
  return z;
}

ZLaurent ZLaurent::from_poly(const Poly& p) {
  ZLaurent z;
  for (const auto& x : p.coeffs()) z.c_.push_back(to_int64(x));
  z.trim();
  return z;
}

int64_t ZLaurent::coeff(int k) const {
  int i = k - lo_;
  return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i];
}

void ZLaurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  if (z) {
    c_.erase(c_.begin(), c_.begin() + z);
    lo_ += static_cast<int>(z);
  }
  if (c_.empty()) lo_ = 0;
}

void ZLaurent::add_mul_shift(const ZLaurent& o, int64_t m, int shift) {
  if (o.is_zero() || m == 0) return;
  int olo = o.lo_ + shift, ohi = o.high() + shift;
  if (c_.empty()) {
    lo_ = olo;
    c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] = mul_checked(o.c_[k], m);
    return;
  }
  if (olo < lo_) {
    c_.insert(c_.begin(), lo_ - olo, 0);
    lo_ = olo;
  }
  if (ohi > high()) c_.resize(ohi - lo_ + 1, 0);
  int off = olo - lo_;
  if (m == 1) {
    for (size_t k = 0; k < o.c_.size(); ++k) c_[off + k] = add_checked(c_[off + k], o.c_[k]);
  } else {
    for (size_t k = 0; k < o.c_.size(); ++k) c_[off + k] = add_checked(c_[off + k], mul_checked(o.c_[k], m));
  }
  if (c_.front() == 0 || c_.back() == 0) trim();
}

ZLaurent ZLaurent::operator-() const {
  ZLaurent r = *this;
  for (auto& x : r.c_) x = mul_checked(x, -1);
  return r;
}

ZLaurent operator+(const ZLaurent& a, const ZLaurent& b) {
  ZLaurent r = a;
  r.add_mul_shift(b, 1, 0);
  return r;
}

ZLaurent operator-(const ZLaurent& a, const ZLaurent& b) {
  ZLaurent r = a;
  r.add_mul_shift(b, -1, 0);
  return r;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
  ZLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = add_checked(r.c_[i + j], mul_checked(a.c_[i], b.c_[j]));
  }
  r.trim();
  return r;
}

ZLaurent ZLaurent::shifted(int k) const {
  ZLaurent r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

ZLaurent ZLaurent::bar() const {
  ZLaurent r;
  if (is_zero()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -high();
  return r;
}

int64_t ZLaurent::content() const {
  int64_t g = 0;
  for (int64_t x : c_) {
    g = std::gcd(g, x < 0 ? -x : x);
    if (g == 1) break;
  }
  return g;
}

void ZLaurent::divexact(int64_t d) {
  for (auto& x : c_) {
    if (x % d) throw std::domain_error("ZLaurent::divexact: not divisible");
    x /= d;
  }
}

ZLaurent ZLaurent::divexact(const ZLaurent& d) const {
  if (d.is_zero()) throw std::domain_error("ZLaurent::divexact: division by zero");
  if (is_zero()) return {};
  int dn = static_cast<int>(d.c_.size());
  std::vector<int64_t> rem = c_;
  int qn = static_cast<int>(c_.size()) - dn + 1;
  if (qn <= 0) throw std::domain_error("ZLaurent::divexact: not divisible");
  std::vector<int64_t> quo(qn, 0);
  int64_t lead = d.c_.back();
  for (int k = qn - 1; k >= 0; --k) {
    int64_t top = rem[k + dn - 1];
    if (top % lead) throw std::domain_error("ZLaurent::divexact: not divisible");
    int64_t t = top / lead;
    quo[k] = t;
    if (t)
      for (int j = 0; j < dn; ++j) rem[k + j] = add_checked(rem[k + j], mul_checked(-t, d.c_[j]));
  }
  for (int64_t x : rem)
    if (x) throw std::domain_error("ZLaurent::divexact: not divisible");
  ZLaurent r;
  r.lo_ = lo_ - d.lo_;
  r.c_ = std::move(quo);
  r.trim();
  return r;
}

LaurentPoly ZLaurent::to_laurent() const {
  LaurentPoly p;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k]) p = p + LaurentPoly::monomial(mpq_class(static_cast<long>(c_[k])), lo_ + static_cast<int>(k));
  return p;
}

Poly ZLaurent::to_poly() const {
  std::vector<mpz_class> v;
  v.reserve(c_.size());
  for (int64_t x : c_) v.emplace_back(static_cast<long>(x));
  return Poly(std::move(v));
}

std::string ZLaurent::to_string() const { return to_laurent().to_string(); }

// ---------------------------------------------------------------- scales

std::pair<RationalFunction, ZLaurent> split_scalar(const RationalFunction& f) {
  if (f.is_zero()) return {RationalFunction(1), ZLaurent()};
  const Poly& num = f.num();
  mpz_class c = num.content();
  if (num.lead() < 0) c = -c;
  int v = num.valuation();
  Poly p = Poly::divexact(num.divexact(c), Poly::monomial(1, v));
  RationalFunction s = RationalFunction(Poly::monomial(c, v), f.den());
  return {s, ZLaurent::from_poly(p)};
}

ScaleRatio scale_ratio(const RationalFunction& sx, const RationalFunction& sy) {
  RationalFunction r = sx / sy;
  // r = q^v * a / b with a, b integer polys
  ScaleRatio out;
  out.a = ZLaurent::from_poly(r.num());
  out.b = ZLaurent::from_poly(r.den());
  out.out_scale = sy / RationalFunction(r.den());
  return out;
}

// ---------------------------------------------------------------- FreeElement

FreeElement FreeElement::one() { return monomial(Word()); }
FreeElement FreeElement::generator(int i) { return monomial(Word::letter(i)); }

FreeElement FreeElement::monomial(const Word& w, const RationalFunction& c) {
  FreeElement x;
  if (c.is_zero()) return x;
  x.scale_ = c;
  x.terms_.emplace_back(w, ZLaurent(1));
  return x;
}

FreeElement FreeElement::from_terms(const std::vector<std::pair<Word, RationalFunction>>& t) {
  FreeElement x;
  for (const auto& [w, c] : t) x = x + monomial(w, c);
  return x;
}

FreeElement FreeElement::from_raw(RationalFunction scale, std::vector<Term> terms) {
  FreeElement x;
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!x.terms_.empty() && x.terms_.back().first == t.first) {
      x.terms_.back().second.add_mul_shift(t.second, 1, 0);
      if (x.terms_.back().second.is_zero()) x.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      x.terms_.push_back(std::move(t));
    }
  }
  x.scale_ = std::move(scale);
  x.normalize();
  return x;
}

void FreeElement::normalize() {
  if (terms_.empty() || scale_.is_zero()) {
    terms_.clear();
    scale_ = RationalFunction(1);
    return;
  }
  int64_t g = 0;
  for (const auto& t : terms_) {
    g = std::gcd(g, t.second.content());
    if (g == 1) break;
  }
  bool neg = terms_.front().second.coeffs().back() < 0;
  if (neg) g = -g;
  if (g != 1) {
    for (auto& t : terms_) t.second.divexact(g);
    scale_ = scale_ * RationalFunction(static_cast<long>(g));
  }
  // Polynomial content, with early exit on the common case of none.
  Poly d = terms_.front().second.to_poly();
  for (size_t k = 1; k < terms_.size() && d.degree() > 0; ++k) d = Poly::gcd(d, terms_[k].second.to_poly());
  if (d.degree() > 0) {
    if (d.lead() < 0) d = -d;
    ZLaurent dz = ZLaurent::from_poly(d.primitive());
    for (auto& t : terms_) t.second = t.second.divexact(dz);
    scale_ = scale_ * RationalFunction(d.primitive());
  }
}

RationalFunction FreeElement::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& v) { return t.first < v; });
  if (it == terms_.end() || !(it->first == w)) return RationalFunction(0);
  return scale_ * RationalFunction(it->second.to_laurent());
}

std::vector<std::pair<Word, RationalFunction>> FreeElement::expanded() const {
  std::vector<std::pair<Word, RationalFunction>> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.emplace_back(w, scale_ * RationalFunction(c.to_laurent()));
  return out;
}

Weight FreeElement::weight(int n) const {
  if (terms_.empty()) throw std::logic_error("FreeElement::weight: zero element");
  Weight w = terms_.front().first.weight(n);
  for (const auto& t : terms_)
    if (!(t.first.weight(n) == w)) throw std::logic_error("FreeElement::weight: not homogeneous");
  return w;
}

bool FreeElement::is_homogeneous(int n) const {
  if (terms_.empty()) return true;
  Weight w = terms_.front().first.weight(n);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.weight(n) == w; });
}

std::map<Weight, FreeElement> FreeElement::homogeneous_parts(int n) const {
  std::map<Weight, std::vector<Term>> parts;
  for (const auto& t : terms_) parts[t.first.weight(n)].push_back(t);
  std::map<Weight, FreeElement> out;
  for (auto& [w, ts] : parts) out.emplace(w, from_raw(scale_, std::move(ts)));
  return out;
}

int FreeElement::height() const {
  int h = 0;
  for (const auto& t : terms_) h = std::max(h, t.first.size());
  return h;
}

FreeElement FreeElement::operator-() const {
  FreeElement x = *this;
  x.scale_ = -x.scale_;
  return x;
}

FreeElement operator+(const FreeElement& x, const FreeElement& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  ScaleRatio sr = scale_ratio(x.scale_, y.scale_);
  std::vector<FreeElement::Term> t;
  t.reserve(x.terms_.size() + y.terms_.size());
  for (const auto& [w, c] : x.terms_) t.emplace_back(w, c * sr.a);
  for (const auto& [w, c] : y.terms_) t.emplace_back(w, c * sr.b);
  return FreeElement::from_raw(sr.out_scale, std::move(t));
}

FreeElement operator-(const FreeElement& x, const FreeElement& y) { return x + (-y); }

FreeElement operator*(const FreeElement& x, const FreeElement& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<FreeElement::Term> t;
  t.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& [u, a] : x.terms_)
    for (const auto& [v, b] : y.terms_) t.emplace_back(u + v, a * b);
  return FreeElement::from_raw(x.scale_ * y.scale_, std::move(t));
}

FreeElement operator*(const RationalFunction& s, const FreeElement& x) {
  if (s.is_zero() || x.is_zero()) return {};
  FreeElement r = x;
  r.scale_ = s * x.scale_;
  return r;
}

bool operator==(const FreeElement& x, const FreeElement& y) { return (x - y).is_zero(); }

FreeElement FreeElement::r(const CartanDatum& c, int i) const {
  std::vector<Term> out;
  for (const auto& [w, co] : terms_) {
    int after = 0;  // (|w_{>p}|, alpha_i)
    for (int p = w.size() - 1; p >= 0; --p) {
      if (w[p] == i) out.emplace_back(w.erase(p), co.shifted(after));
      after += c.a(i, w[p]);
    }
  }
  return from_raw(scale_, std::move(out));
}

FreeElement FreeElement::ir(const CartanDatum& c, int i) const {
  std::vector<Term> out;
  for (const auto& [w, co] : terms_) {
    int before = 0;  // (|w_{<p}|, alpha_i)
    for (int p = 0; p < w.size(); ++p) {
      if (w[p] == i) out.emplace_back(w.erase(p), co.shifted(before));
      before += c.a(i, w[p]);
    }
  }
  return from_raw(scale_, std::move(out));
}

FreeElement FreeElement::sigma() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.emplace_back(w.reversed(), c);
  return from_raw(scale_, std::move(out));
}

FreeElement FreeElement::bar() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.emplace_back(w, c.bar());
  return from_raw(scale_.bar(), std::move(out));
}

std::string FreeElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : expanded()) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + " * " + w.to_string();
  }
  return s;
}

FreeElement divided_power(const FreeElement& x, int r) {
  if (r < 0) throw std::invalid_argument("divided_power: negative exponent");
  FreeElement p = FreeElement::one();
  for (int k = 0; k < r; ++k) p = p * x;
  return RationalFunction(q_fact(r)).inverse() * p;
}

// ---------------------------------------------------------------- tensors

TensorElement TensorElement::pure(const FreeElement& x, const FreeElement& y) {
  TensorElement t;
  for (const auto& [u, a] : x.expanded())
    for (const auto& [v, b] : y.expanded()) t.add({u, v}, a * b);
  return t;
}

TensorElement& TensorElement::add(const Key& k, const RationalFunction& c) {
  if (c.is_zero()) return *this;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  for (const auto& [k, c] : b.terms) r.add(k, c);
  return r;
}

TensorElement TensorElement::multiply(const CartanDatum& c, const TensorElement& a, const TensorElement& b) {
  TensorElement r;
  int n = c.rank();
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      int e = c.pairing(ka.second.weight(n), kb.first.weight(n));
      r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb * RationalFunction::q_pow(e));
    }
  return r;
}

TensorElement coproduct_r(const CartanDatum& c, const FreeElement& x) {
  TensorElement out;
  for (const auto& [w, co] : x.expanded()) {
    // Product of (E_i (x) 1 + 1 (x) E_i) over the letters, as a subset sum.
    int h = w.size();
    for (uint32_t mask = 0; mask < (1u << h); ++mask) {
      Word left, right;
      int e = 0;
      Weight rw(c.rank());
      for (int p = 0; p < h; ++p) {
        if (mask >> p & 1) {
          right.push_back(w[p]);
          rw[w[p]] += 1;
        } else {
          left.push_back(w[p]);
          e += c.pairing(rw, c.alpha(w[p]));
        }
      }
      out.add({left, right}, co * RationalFunction::q_pow(e));
    }
  }
  return out;
}

namespace {
using Triple = std::map<std::array<Word, 3>, RationalFunction>;
void add_triple(Triple& t, const std::array<Word, 3>& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}
}  // namespace

Triple coproduct_left_then(const CartanDatum& c, const FreeElement& x) {
  Triple out;
  for (const auto& [k, co] : coproduct_r(c, x).terms)
    for (const auto& [k2, c2] : coproduct_r(c, FreeElement::monomial(k.first)).terms)
      add_triple(out, {k2.first, k2.second, k.second}, co * c2);
  return out;
}

Triple coproduct_right_then(const CartanDatum& c, const FreeElement& x) {
  Triple out;
  for (const auto& [k, co] : coproduct_r(c, x).terms)
    for (const auto& [k2, c2] : coproduct_r(c, FreeElement::monomial(k.second)).terms)
      add_triple(out, {k.first, k2.first, k2.second}, co * c2);
  return out;
}

}  // namespace qaffine
