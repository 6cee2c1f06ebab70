#include "qaffine/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaffine {

namespace {
RationalFunction qi(int m) { return RationalFunction(q_int(m)); }

// Laplace expansion along the first remaining row; fine for the small
// matrices of Jacobi-Trudi.
template <class T>
T det_rec(const std::vector<std::vector<T>>& m, size_t row, std::vector<bool>& used) {
  size_t n = m.size();
  if (row == n) return T::constant(RationalFunction(1));
  T acc;
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    if (!m[row][c].is_zero()) {
      used[c] = true;
      T minor = det_rec(m, row + 1, used);
      used[c] = false;
      T term = m[row][c] * minor;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

template <class T>
T det(const std::vector<std::vector<T>>& m) {
  std::vector<bool> used(m.size(), false);
  return det_rec(m, 0, used);
}

template <class T, class H>
T jacobi_trudi(const Partition& lambda, int t, H&& h) {
  if (t < 0) t = lambda.length();
  if (t < lambda.length()) throw std::invalid_argument("jacobi_trudi: size below the partition length");
  std::vector<std::vector<T>> m(t, std::vector<T>(t));
  for (int r = 0; r < t; ++r)
    for (int c = 0; c < t; ++c) m[r][c] = h(lambda.part(r) - r + c);
  return det(m);
}
}  // namespace

// ---------------------------------------------------------------- ImaginaryElement

void ImaginaryElement::add_term(const PtMonomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

ImaginaryElement ImaginaryElement::constant(const RationalFunction& c) {
  ImaginaryElement x;
  x.add_term({}, c);
  return x;
}

ImaginaryElement ImaginaryElement::generator(int k, int i) {
  if (k < 0) return {};
  if (k == 0) return constant(RationalFunction(1));
  ImaginaryElement x;
  x.add_term({{{k, i}, 1}}, RationalFunction(1));
  return x;
}

int ImaginaryElement::degree() const {
  if (t_.empty()) throw std::logic_error("ImaginaryElement: zero has no degree");
  int d = -1;
  for (const auto& [m, c] : t_) {
    int e = 0;
    for (const auto& [ki, p] : m) e += ki.first * p;
    if (d >= 0 && e != d) throw std::logic_error("ImaginaryElement: not homogeneous");
    d = e;
  }
  return d;
}

ImaginaryElement ImaginaryElement::operator-() const {
  ImaginaryElement r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

ImaginaryElement operator+(const ImaginaryElement& x, const ImaginaryElement& y) {
  ImaginaryElement r = x;
  for (const auto& [m, c] : y.t_) r.add_term(m, c);
  return r;
}

ImaginaryElement operator-(const ImaginaryElement& x, const ImaginaryElement& y) { return x + (-y); }

ImaginaryElement operator*(const ImaginaryElement& x, const ImaginaryElement& y) {
  ImaginaryElement r;
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_) {
      PtMonomial m = mx;
      for (const auto& [ki, p] : my) m[ki] += p;
      r.add_term(m, cx * cy);
    }
  return r;
}

ImaginaryElement operator*(const RationalFunction& s, const ImaginaryElement& x) {
  if (s.is_zero()) return {};
  ImaginaryElement r = x;
  for (auto& [m, c] : r.t_) c = s * c;
  return r;
}

UElem ImaginaryElement::materialize(RootVectorTable& t) const {
  const CartanDatum& c = t.datum();
  if (t_.empty()) return UElem();
  degree();
  UElem acc;
  for (const auto& [m, co] : t_) {
    UElem p = UElem::one(c);
    for (const auto& [ki, e] : m)
      for (int r = 0; r < e; ++r) p = p * t.P_tilde(ki.first, ki.second);
    acc += co * p;
  }
  return acc;
}

std::string ImaginaryElement::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (m.empty()) os << " * 1";
    for (const auto& [ki, e] : m) {
      os << " * Pt[" << ki.first << "," << ki.second << "]";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- AbstractSymFn

void AbstractSymFn::add_term(const Partition& p, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

AbstractSymFn AbstractSymFn::constant(const RationalFunction& c) {
  AbstractSymFn f;
  f.add_term(Partition(), c);
  return f;
}

AbstractSymFn AbstractSymFn::h(int k) {
  if (k < 0) return {};
  if (k == 0) return constant(RationalFunction(1));
  AbstractSymFn f;
  f.add_term(Partition({k}), RationalFunction(1));
  return f;
}

AbstractSymFn AbstractSymFn::schur(const Partition& lambda) {
  return jacobi_trudi<AbstractSymFn>(lambda, -1, [](int k) { return h(k); });
}

AbstractSymFn AbstractSymFn::power_sum(int k) {
  if (k < 1) throw std::invalid_argument("power_sum: degree must be positive");
  std::vector<AbstractSymFn> p(k + 1);
  for (int m = 1; m <= k; ++m) {
    AbstractSymFn acc = RationalFunction(m) * h(m);
    for (int s = 1; s < m; ++s) acc = acc - p[s] * h(m - s);
    p[m] = acc;
  }
  return p[k];
}

AbstractSymFn AbstractSymFn::e(int k) {
  if (k < 0) return {};
  std::vector<AbstractSymFn> e(k + 1);
  e[0] = constant(RationalFunction(1));
  for (int m = 1; m <= k; ++m) {
    AbstractSymFn acc;
    for (int r = 0; r < m; ++r) acc = acc + RationalFunction((m - r) % 2 ? 1 : -1) * (e[r] * h(m - r));
    e[m] = acc;
  }
  return e[k];
}

AbstractSymFn AbstractSymFn::schur_dual(const Partition& lambda) {
  std::vector<int> conj;
  for (int c = 0; c < lambda.part(0); ++c) {
    int len = 0;
    while (lambda.part(len) > c) ++len;
    conj.push_back(len);
  }
  return jacobi_trudi<AbstractSymFn>(Partition(conj), -1, [](int k) { return e(k); });
}

AbstractSymFn AbstractSymFn::operator-() const {
  AbstractSymFn r = *this;
  for (auto& [p, c] : r.t_) c = -c;
  return r;
}

AbstractSymFn operator+(const AbstractSymFn& x, const AbstractSymFn& y) {
  AbstractSymFn r = x;
  for (const auto& [p, c] : y.t_) r.add_term(p, c);
  return r;
}

AbstractSymFn operator-(const AbstractSymFn& x, const AbstractSymFn& y) { return x + (-y); }

AbstractSymFn operator*(const AbstractSymFn& x, const AbstractSymFn& y) {
  AbstractSymFn r;
  for (const auto& [px, cx] : x.t_)
    for (const auto& [py, cy] : y.t_) {
      std::vector<int> parts = px.parts;
      parts.insert(parts.end(), py.parts.begin(), py.parts.end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      r.add_term(Partition(parts), cx * cy);
    }
  return r;
}

AbstractSymFn operator*(const RationalFunction& s, const AbstractSymFn& x) {
  if (s.is_zero()) return {};
  AbstractSymFn r = x;
  for (auto& [p, c] : r.t_) c = s * c;
  return r;
}

std::string AbstractSymFn::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") * h" << p.to_string();
  }
  return os.str();
}

AbstractSymFn abstract_pieri(int k, const Partition& mu) {
  AbstractSymFn acc;
  for (const Partition& lambda : pieri_shapes(k, mu)) acc = acc + AbstractSymFn::schur(lambda);
  return acc;
}

ImaginaryElement hom_to_U0(const AbstractSymFn& f, int i) {
  ImaginaryElement acc;
  for (const auto& [p, c] : f.terms()) {
    ImaginaryElement m = ImaginaryElement::constant(c);
    for (int k : p.parts) m = m * ImaginaryElement::generator(k, i);
    acc = acc + m;
  }
  return acc;
}

// ---------------------------------------------------------------- Schur elements

ImaginaryElement schur(const Partition& lambda, int i, int t) {
  return jacobi_trudi<ImaginaryElement>(lambda, t, [i](int k) { return ImaginaryElement::generator(k, i); });
}

Partition partition_of(const PtMonomial& c0, int i) {
  std::vector<int> parts;
  for (const auto& [ki, e] : c0) {
    if (e < 0) throw std::invalid_argument("partition_of: negative multiplicity");
    if (ki.second != i) continue;
    if (ki.first < 1) throw std::invalid_argument("partition_of: imaginary degree must be positive");
    for (int r = 0; r < e; ++r) parts.push_back(ki.first);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

ImaginaryElement S(const PtMonomial& c0) {
  std::vector<int> colors;
  for (const auto& [ki, e] : c0)
    if (e > 0) colors.push_back(ki.second);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  ImaginaryElement acc = ImaginaryElement::constant(RationalFunction(1));
  for (int i : colors) acc = acc * schur(partition_of(c0, i), i);
  return acc;
}

// ---------------------------------------------------------------- cross-checks

bool newton_crosscheck(RootVectorTable& t, int k, int i) {
  UElem acc;
  for (int s = 1; s <= k; ++s) {
    RationalFunction co = RationalFunction(s) / qi(s);
    acc += co * (t.imag(s, i) * t.P_tilde(k - s, i));
  }
  acc = RationalFunction(mpq_class(1, k)) * acc;
  return equals_in_uplus(acc, t.P_tilde(k, i));
}

bool generating_function_crosscheck(RootVectorTable& t, int k, int i) {
  const CartanDatum& c = t.datum();
  UElem one = UElem::one(c);
  auto is_zero = [](const UElem& x) { return x.is_zero(); };
  for (int sign : {-1, 1}) {
    PowerSeries<UElem> s(k, UElem());
    for (int m = 1; m <= k; ++m) s[m] = (RationalFunction(sign) / qi(m)) * t.imag(m, i);
    auto e = series_exp<UElem>(s, one, is_zero);
    for (int m = 1; m <= k; ++m) {
      const UElem& want = sign < 0 ? t.P(m, i) : t.P_tilde(m, i);
      if (!equals_in_uplus(e[m], want)) return false;
    }
  }
  return true;
}

}  // namespace qaffine
