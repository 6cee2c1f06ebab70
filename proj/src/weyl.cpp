#include "qaffine/weyl.hpp"

#include <stdexcept>

namespace qaffine {

namespace {
using Mat = std::vector<std::vector<int>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat r(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Weight mat_apply(const Mat& m, const Weight& v) {
  Weight r(static_cast<int>(m.size()) - 1);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r.d[i] += m[i][j] * v.d[j];
  return r;
}

Mat identity_mat(int n) {
  Mat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}
}  // namespace

AffineWeylElement AffineWeylElement::identity(const CartanDatum& c) {
  AffineWeylElement w(c);
  w.m_ = identity_mat(c.nodes());
  w.inv_ = w.m_;
  return w;
}

AffineWeylElement AffineWeylElement::reflection(const CartanDatum& c, int i) {
  AffineWeylElement w(c);
  w.m_ = identity_mat(c.nodes());
  // s_i(alpha_j) = alpha_j - a_ij alpha_i
  for (int j = 0; j < c.nodes(); ++j) w.m_[i][j] -= c.a(i, j);
  w.inv_ = w.m_;
  return w;
}

AffineWeylElement AffineWeylElement::translation(const CartanDatum& c, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != c.rank()) throw std::invalid_argument("translation: need n coefficients");
  auto build = [&](int sign) {
    Mat t = identity_mat(c.nodes());
    // t(alpha_i) = alpha_i - <omega, alpha_i> delta for i in I;
    // t(alpha_0) = alpha_0 + <omega, theta> delta.
    int theta = 0;
    for (int i = 1; i <= c.rank(); ++i) {
      int p = sign * m[i - 1];
      theta += p;
      for (int r = 0; r < c.nodes(); ++r) t[r][i] -= p;
    }
    for (int r = 0; r < c.nodes(); ++r) t[r][0] += theta;
    return t;
  };
  AffineWeylElement w(c);
  w.m_ = build(1);
  w.inv_ = build(-1);
  return w;
}

AffineWeylElement AffineWeylElement::t_two_rho(const CartanDatum& c) {
  return translation(c, std::vector<int>(c.rank(), 2));
}

AffineWeylElement AffineWeylElement::rotation(const CartanDatum& c, int s) {
  int N = c.nodes();
  auto build = [&](int sh) {
    Mat t(N, std::vector<int>(N, 0));
    for (int j = 0; j < N; ++j) t[((j + sh) % N + N) % N][j] = 1;
    return t;
  };
  AffineWeylElement w(c);
  w.m_ = build(s);
  w.inv_ = build(-s);
  return w;
}

Weight AffineWeylElement::act(const Weight& v) const { return mat_apply(m_, v); }
Weight AffineWeylElement::act_inverse(const Weight& v) const { return mat_apply(inv_, v); }

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  AffineWeylElement w(*c_);
  w.m_ = mat_mul(m_, o.m_);
  w.inv_ = mat_mul(o.inv_, inv_);
  return w;
}

AffineWeylElement AffineWeylElement::inverse() const {
  AffineWeylElement w(*c_);
  w.m_ = inv_;
  w.inv_ = m_;
  return w;
}

bool is_positive_real(const CartanDatum&, const Weight& v) {
  bool any = false;
  for (int x : v.d) {
    if (x < 0) return false;
    any |= x > 0;
  }
  return any;
}

bool is_negative_real(const CartanDatum& c, const Weight& v) {
  Weight m = (-1) * v;
  return is_positive_real(c, m);
}

namespace {
// Splits v = m delta + gamma with gamma finite (gamma_0 = 0).
std::pair<int, Weight> split_delta(const CartanDatum& c, const Weight& v) {
  int m = v.d[0];
  return {m, v - m * c.delta()};
}
}  // namespace

AffineRoot classify_real(const CartanDatum& c, const Weight& v) {
  auto [m, g] = split_delta(c, v);
  if (c.is_finite_root(g)) return AffineRoot::plus(m, g);
  Weight ng = (-1) * g;
  if (c.is_finite_root(ng)) return AffineRoot::minus(m, ng);
  throw std::invalid_argument("classify_real: not a real root: " + v.to_string());
}

int AffineWeylElement::length() const {
  const CartanDatum& c = *c_;
  int total = 0;
  for (const Weight& a : c.finite_positive_roots()) {
    for (int sgn : {1, -1}) {
      Weight alpha = sgn * a;
      auto [cc, gamma] = split_delta(c, act(alpha));
      bool gpos = c.is_finite_root(gamma);
      // beta = alpha + m delta positive: m >= 1, or m = 0 with alpha > 0.
      int mlo = sgn > 0 ? 0 : 1;
      // w(beta) = gamma + (cc + m) delta negative: cc + m < 0, or = 0 with gamma < 0.
      int mhi = gpos ? -cc - 1 : -cc;
      if (mhi >= mlo) total += mhi - mlo + 1;
    }
  }
  return total;
}

bool AffineWeylElement::is_descent(int i) const {
  return is_negative_real(*c_, act_inverse(c_->alpha(i)));
}

AffineWeylElement ReducedWord::evaluate(const CartanDatum& c) const {
  AffineWeylElement w = AffineWeylElement::identity(c);
  for (int i : letters) w = w * AffineWeylElement::reflection(c, i);
  return w;
}

ReducedWord reduced_word(const CartanDatum& c, const AffineWeylElement& w0) {
  ReducedWord out;
  AffineWeylElement w = w0;
  int len = w.length();
  while (len > 0) {
    int pick = -1;
    for (int i = 0; i < c.nodes(); ++i)
      if (w.is_descent(i)) {
        pick = i;
        break;
      }
    if (pick < 0) throw std::logic_error("reduced_word: no descent for element of positive length");
    out.letters.push_back(pick);
    w = AffineWeylElement::reflection(c, pick) * w;
    --len;
  }
  return out;
}

ReducedWord t_two_rho_word(const CartanDatum& c) {
  return reduced_word(c, AffineWeylElement::t_two_rho(c));
}

RootOrder::RootOrder(const CartanDatum& c, int max_delta)
    : c_(&c), max_delta_(max_delta), word_(t_two_rho_word(c)) {
  // Each period shifts delta-degrees by 2 ht(alpha) >= 2, so this many
  // periods per side covers every root of degree <= max_delta.
  int N = period();
  int span = (max_delta + 2) * N;
  for (int k = -span + 1; k <= span; ++k) {
    AffineRoot r = beta(k);
    if (r.k <= max_delta) index_.emplace(r, k);
  }
}

int RootOrder::letter(int k) const {
  int N = period();
  int m = ((k - 1) % N + N) % N;  // i_1 .. i_N, i_0 = i_N
  return word_.letters[m];
}

Weight RootOrder::beta_vector(int k) const {
  const CartanDatum& c = *c_;
  Weight v = c.alpha(letter(k));
  if (k <= 0) {
    for (int j = k + 1; j <= 0; ++j) v = AffineWeylElement::reflection(c, letter(j)).act(v);
  } else {
    for (int j = k - 1; j >= 1; --j) v = AffineWeylElement::reflection(c, letter(j)).act(v);
  }
  return v;
}

AffineRoot RootOrder::beta(int k) const { return classify_real(*c_, beta_vector(k)); }

std::optional<int> RootOrder::index_of(const AffineRoot& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> RootOrder::key(const AffineRoot& r) const {
  if (r.kind == RootKind::Imaginary) return {1, r.k, r.color};
  auto k = index_of(r);
  if (!k) throw std::out_of_range("RootOrder: root outside window: " + r.to_string());
  if (*k <= 0) return {0, -*k, 0};
  return {2, -*k, 0};
}

bool RootOrder::less(const AffineRoot& a, const AffineRoot& b) const { return key(a) < key(b); }

std::vector<AffineRoot> RootOrder::window_roots() const {
  std::vector<AffineRoot> out;
  for (const auto& [r, k] : index_) out.push_back(r);
  std::sort(out.begin(), out.end(), [&](const AffineRoot& a, const AffineRoot& b) { return less(a, b); });
  return out;
}

}  // namespace qaffine
