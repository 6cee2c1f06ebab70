#include "qaffine/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qaffine {

int Weight::height() const { return std::accumulate(d.begin(), d.end(), 0); }

bool Weight::is_nonnegative() const {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

int Weight::delta_multiple() const {
  if (d.empty()) return 0;
  return *std::min_element(d.begin(), d.end());
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.d.size() != b.d.size()) throw std::invalid_argument("Weight: rank mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.d.size(); ++i) r.d[i] += b.d[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.d.size() != b.d.size()) throw std::invalid_argument("Weight: rank mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.d.size(); ++i) r.d[i] -= b.d[i];
  return r;
}

Weight operator*(int m, const Weight& a) {
  Weight r = a;
  for (auto& x : r.d) x *= m;
  return r;
}

std::string Weight::to_string() const {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

Weight Weight::parse(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.d.push_back(std::stoi(tok));
  if (w.d.size() < 2) throw std::invalid_argument("Weight::parse: need at least two entries");
  return w;
}

CartanDatum::CartanDatum(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CartanDatum: rank must be >= 1");
  a_.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) a_[i][i] = 2;
  if (n == 1) {
    a_[0][1] = a_[1][0] = -2;
  } else {
    for (int i = 0; i <= n; ++i) {
      int j = (i + 1) % (n + 1);
      a_[i][j] = a_[j][i] = -1;
    }
  }
}

Weight CartanDatum::alpha(int i) const {
  Weight w(n_);
  w[i] = 1;
  return w;
}

Weight CartanDatum::delta() const { return Weight(std::vector<int>(n_ + 1, 1)); }

int CartanDatum::pairing(const Weight& x, const Weight& y) const {
  int s = 0;
  for (int i = 0; i <= n_; ++i) {
    if (x.d[i] == 0) continue;
    for (int j = 0; j <= n_; ++j) s += x.d[i] * a_[i][j] * y.d[j];
  }
  return s;
}

std::vector<Weight> CartanDatum::finite_positive_roots() const {
  std::vector<Weight> out;
  for (int len = 1; len <= n_; ++len)
    for (int a = 1; a + len - 1 <= n_; ++a) {
      Weight w(n_);
      for (int c = a; c < a + len; ++c) w[c] = 1;
      out.push_back(w);
    }
  return out;
}

bool CartanDatum::is_finite_root(const Weight& w) const {
  auto roots = finite_positive_roots();
  return std::find(roots.begin(), roots.end(), w) != roots.end();
}

AffineRoot AffineRoot::plus(int k, Weight alpha) {
  if (k < 0) throw std::invalid_argument("AffineRoot::plus: k must be >= 0");
  return AffineRoot{RootKind::RealPlus, k, std::move(alpha), 0};
}

AffineRoot AffineRoot::minus(int k, Weight alpha) {
  if (k < 1) throw std::invalid_argument("AffineRoot::minus: k must be >= 1");
  return AffineRoot{RootKind::RealMinus, k, std::move(alpha), 0};
}

AffineRoot AffineRoot::imaginary(int k, int color, int n) {
  if (k < 1) throw std::invalid_argument("AffineRoot::imaginary: k must be >= 1");
  if (color < 1 || color > n) throw std::invalid_argument("AffineRoot::imaginary: bad color");
  return AffineRoot{RootKind::Imaginary, k, Weight(n), color};
}

Weight AffineRoot::to_weight(const CartanDatum& c) const {
  Weight w = k * c.delta();
  if (kind == RootKind::RealPlus) return w + alpha;
  if (kind == RootKind::RealMinus) return w - alpha;
  return w;
}

int AffineRoot::simple_index() const {
  if (kind == RootKind::Imaginary) return -1;
  int idx = -1;
  for (int i = 0; i < static_cast<int>(alpha.d.size()); ++i) {
    if (alpha.d[i] == 0) continue;
    if (alpha.d[i] != 1 || idx != -1) return -1;
    idx = i;
  }
  return idx;
}

std::string AffineRoot::to_string() const {
  auto alpha_str = [&] {
    int i = simple_index();
    if (i >= 0) return "a" + std::to_string(i);
    std::string s = "(";
    bool first = true;
    for (int j = 1; j < static_cast<int>(alpha.d.size()); ++j)
      if (alpha.d[j]) {
        s += (first ? "a" : "+a") + std::to_string(j);
        first = false;
      }
    return s + ")";
  };
  std::string kd = k == 0 ? "" : (k == 1 ? "d" : std::to_string(k) + "d");
  switch (kind) {
    case RootKind::RealPlus: return kd.empty() ? alpha_str() : kd + "+" + alpha_str();
    case RootKind::RealMinus: return kd + "-" + alpha_str();
    case RootKind::Imaginary: return kd + "^(" + std::to_string(color) + ")";
  }
  return "";
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("Partition: negative part");
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

namespace {
void gen_partitions(int m, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(m, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(m - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(m, m, cur, out);
  return out;
}

std::vector<Partition> pieri_shapes(int k, const Partition& mu) {
  if (k < 1) throw std::invalid_argument("pieri_shapes: k must be >= 1");
  // Row r may grow up to mu_{r-1} (interlacing); one new row allowed.
  std::vector<Partition> out;
  int rows = mu.length() + 1;
  std::vector<int> add(rows, 0);
  auto rec = [&](auto&& self, int r, int left) -> void {
    if (r == rows) {
      if (left == 0) {
        std::vector<int> p(rows);
        for (int t = 0; t < rows; ++t) p[t] = mu.part(t) + add[t];
        out.emplace_back(p);
      }
      return;
    }
    int cap = r == 0 ? left : std::min(left, mu.part(r - 1) - mu.part(r));
    for (int a = cap; a >= 0; --a) {
      add[r] = a;
      self(self, r + 1, left - a);
    }
    add[r] = 0;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace qaffine
