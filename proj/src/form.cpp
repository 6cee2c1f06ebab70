#include "qaffine/form.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qaffine {

// ---------------------------------------------------------------- WordSpace

WordSpace::WordSpace(const Weight& nu) : nu_(nu), nodes_(static_cast<int>(nu.d.size())), height_(nu.height()) {
  for (int x : nu.d)
    if (x < 0) throw std::invalid_argument("WordSpace: negative weight " + nu.to_string());
  if (height_ > Word::kMax) throw std::length_error("WordSpace: weight exceeds the word length limit");
  stride_.resize(nodes_);
  int states = 1;
  for (int c = 0; c < nodes_; ++c) {
    stride_[c] = states;
    states *= nu.d[c] + 1;
  }
  top_ = states - 1;
  count_.assign(states, 0);
  contrib_.assign(static_cast<size_t>(states) * nodes_, 0);
  std::vector<int> digit(nodes_);
  for (int s = 0; s < states; ++s) {
    int r = s;
    for (int c = 0; c < nodes_; ++c) {
      digit[c] = r % (nu.d[c] + 1);
      r /= nu.d[c] + 1;
    }
    if (s == 0) {
      count_[0] = 1;
      continue;
    }
    uint64_t acc = 0;
    for (int c = 0; c < nodes_; ++c) {
      contrib_[static_cast<size_t>(s) * nodes_ + c] = acc;
      if (digit[c] > 0) acc += count_[s - stride_[c]];
    }
    count_[s] = acc;
  }
}

std::shared_ptr<const WordSpace> WordSpace::get(const Weight& nu) {
  static std::mutex mu;
  static std::map<Weight, std::shared_ptr<const WordSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(nu);
  if (it != cache.end()) return it->second;
  auto sp = std::make_shared<const WordSpace>(nu);
  cache.emplace(nu, sp);
  return sp;
}

bool WordSpace::has(int state, int c) const { return (state / stride_[c]) % (nu_.d[c] + 1) > 0; }

Word WordSpace::word(size_t idx) const {
  Word w;
  int s = top_;
  for (int pos = 0; pos < height_; ++pos) {
    for (int c = 0; c < nodes_; ++c) {
      if (!has(s, c)) continue;
      uint64_t cnt = count_[s - stride_[c]];
      if (idx < cnt) {
        w.push_back(c);
        s -= stride_[c];
        break;
      }
      idx -= cnt;
    }
  }
  return w;
}

size_t WordSpace::index(const Word& w) const {
  if (w.size() != height_) throw std::invalid_argument("WordSpace::index: wrong length");
  int s = top_;
  uint64_t r = 0;
  for (int pos = 0; pos < height_; ++pos) {
    int c = w[pos];
    if (c >= nodes_ || !has(s, c)) throw std::invalid_argument("WordSpace::index: wrong weight");
    r += rank_step(s, c);
    s = step(s, c);
  }
  return r;
}

// ---------------------------------------------------------------- DualVec

const ZLaurent* DualVec::find(uint64_t idx) const {
  auto it = std::lower_bound(e.begin(), e.end(), idx, [](const auto& p, uint64_t k) { return p.first < k; });
  return it != e.end() && it->first == idx ? &it->second : nullptr;
}

void DualVec::normalize() {
  if (e.empty()) {
    scale = RationalFunction(1);
    return;
  }
  int64_t g = 0;
  for (const auto& [k, z] : e) {
    g = std::gcd(g, z.content());
    if (g == 1) break;
  }
  if (e.front().second.coeffs().back() < 0) g = -g;
  if (g != 1) {
    for (auto& [k, z] : e) z.divexact(g);
    scale = scale * RationalFunction(static_cast<long>(g));
  }
  // The polynomial content only matters for keeping coefficients small;
  // the gcd pass is costly, so it runs only once they grow.
  int64_t big = 0;
  for (const auto& [k, z] : e)
    for (int64_t c : z.coeffs()) big = std::max(big, c < 0 ? -c : c);
  if (big < (int64_t{1} << 32)) return;
  Poly d;
  bool started = false;
  for (const auto& [k, z] : e) {
    d = started ? Poly::gcd(d, z.to_poly()) : z.to_poly();
    started = true;
    if (d.degree() <= 0) return;
  }
  if (d.lead() < 0) d = -d;
  d = d.primitive();
  ZLaurent dz = ZLaurent::from_poly(d);
  for (auto& [k, z] : e) z = z.divexact(dz);
  scale = scale * RationalFunction(d);
}

namespace {
DualVec zero_dual(std::shared_ptr<const WordSpace> sp) {
  DualVec d;
  d.space = std::move(sp);
  return d;
}

DualVec add_duals(const DualVec& x, const DualVec& y) {
  if (!(x.space->weight() == y.space->weight())) throw std::invalid_argument("UElem: adding different weights");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  ScaleRatio sr = scale_ratio(x.scale, y.scale);
  DualVec out = zero_dual(x.space);
  out.scale = sr.out_scale;
  bool a1 = sr.a == ZLaurent(1), b1 = sr.b == ZLaurent(1);
  out.e.reserve(x.e.size() + y.e.size());
  auto xi = x.e.begin(), yi = y.e.begin();
  while (xi != x.e.end() || yi != y.e.end()) {
    if (yi == y.e.end() || (xi != x.e.end() && xi->first < yi->first)) {
      out.e.emplace_back(xi->first, a1 ? xi->second : xi->second * sr.a);
      ++xi;
    } else if (xi == x.e.end() || yi->first < xi->first) {
      out.e.emplace_back(yi->first, b1 ? yi->second : yi->second * sr.b);
      ++yi;
    } else {
      ZLaurent z = a1 ? xi->second : xi->second * sr.a;
      z.add_mul_shift(b1 ? yi->second : yi->second * sr.b, 1, 0);
      if (!z.is_zero()) out.e.emplace_back(xi->first, std::move(z));
      ++xi;
      ++yi;
    }
  }
  out.normalize();
  return out;
}

// Accumulator for shuffle output: dense scratch when the output is expected
// to be well filled, a hash map otherwise.
class Accumulator {
public:
  Accumulator(size_t size, bool dense) : dense_(dense) {
    if (dense_) d_.resize(size);
  }
  ZLaurent& at(uint64_t k) { return dense_ ? d_[k] : h_[k]; }
  std::vector<std::pair<uint64_t, ZLaurent>> take() {
    std::vector<std::pair<uint64_t, ZLaurent>> out;
    if (dense_) {
      for (size_t k = 0; k < d_.size(); ++k)
        if (!d_[k].is_zero()) out.emplace_back(k, std::move(d_[k]));
    } else {
      for (auto& [k, z] : h_)
        if (!z.is_zero()) out.emplace_back(k, std::move(z));
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
  }

private:
  bool dense_;
  std::vector<ZLaurent> d_;
  std::unordered_map<uint64_t, ZLaurent> h_;
};

struct ShuffleCtx {
  const WordSpace* out;
  Accumulator* dst;
  const ZLaurent* prod;
  int a, b;
  uint8_t u[Word::kMax], v[Word::kMax];
  // pre[j * nodes + c] = (|v_1..v_j|, alpha_c)
  const int* pre;
  int nodes;

  void run(int i, int j, int state, uint64_t rank, int e) {
    if (i == a) {
      for (int t = j; t < b; ++t) {
        rank += out->rank_step(state, v[t]);
        state = out->step(state, v[t]);
      }
      dst->at(rank).add_mul_shift(*prod, 1, e);
      return;
    }
    if (j == b) {
      for (int t = i; t < a; ++t) {
        rank += out->rank_step(state, u[t]);
        state = out->step(state, u[t]);
        e += pre[j * nodes + u[t]];
      }
      dst->at(rank).add_mul_shift(*prod, 1, e);
      return;
    }
    int cu = u[i];
    run(i + 1, j, out->step(state, cu), rank + out->rank_step(state, cu), e + pre[j * nodes + cu]);
    int cv = v[j];
    run(i, j + 1, out->step(state, cv), rank + out->rank_step(state, cv), e);
  }
};

double binomial(int n, int k) {
  double r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}
}  // namespace

DualVec shuffle(const CartanDatum& c, const DualVec& x, const DualVec& y) {
  auto sp = WordSpace::get(x.space->weight() + y.space->weight());
  DualVec out = zero_dual(sp);
  if (x.is_zero() || y.is_zero()) return out;
  out.scale = x.scale * y.scale;
  ShuffleCtx ctx;
  ctx.out = sp.get();
  ctx.a = x.space->height();
  ctx.b = y.space->height();
  ctx.nodes = c.nodes();

  double leaves = static_cast<double>(x.e.size()) * y.e.size() * binomial(ctx.a + ctx.b, ctx.a);
  // Dense scratch costs 32 bytes per word of the space, so it is capped.
  constexpr size_t kDenseMax = size_t(1) << 22;
  Accumulator acc(sp->size(), sp->size() <= kDenseMax && leaves * 4 > static_cast<double>(sp->size()));
  ctx.dst = &acc;

  std::vector<Word> ys;
  std::vector<std::vector<int>> pres;
  for (const auto& [k, z] : y.e) {
    Word w = y.space->word(k);
    std::vector<int> pre((ctx.b + 1) * ctx.nodes, 0);
    for (int j = 1; j <= ctx.b; ++j)
      for (int cc = 0; cc < ctx.nodes; ++cc) pre[j * ctx.nodes + cc] = pre[(j - 1) * ctx.nodes + cc] + c.a(w[j - 1], cc);
    ys.push_back(w);
    pres.push_back(std::move(pre));
  }
  for (const auto& [kx, zx] : x.e) {
    Word uw = x.space->word(kx);
    for (int t = 0; t < ctx.a; ++t) ctx.u[t] = static_cast<uint8_t>(uw[t]);
    for (size_t m = 0; m < ys.size(); ++m) {
      for (int t = 0; t < ctx.b; ++t) ctx.v[t] = static_cast<uint8_t>(ys[m][t]);
      ZLaurent prod = zx * y.e[m].second;
      ctx.prod = &prod;
      ctx.pre = pres[m].data();
      ctx.run(0, 0, sp->top_state(), 0, 0);
    }
  }
  out.e = acc.take();
  out.normalize();
  return out;
}

namespace {
// dual of sum over terms [lo, hi) of c_t E_{w_t[depth..]}; all words share
// the same prefix of length depth and the same length.
DualVec dual_rec(const CartanDatum& c, const std::vector<FreeElement::Term>& t, size_t lo, size_t hi, int depth,
                 const Weight& rest) {
  if (depth == t[lo].first.size()) {
    DualVec d = zero_dual(WordSpace::get(rest));
    ZLaurent z;
    for (size_t k = lo; k < hi; ++k) z.add_mul_shift(t[k].second, 1, 0);
    if (!z.is_zero()) d.e.emplace_back(0, std::move(z));
    return d;
  }
  DualVec acc = zero_dual(WordSpace::get(rest));
  size_t k = lo;
  while (k < hi) {
    int i = t[k].first[depth];
    size_t e = k;
    while (e < hi && t[e].first[depth] == i) ++e;
    Weight sub = rest - Weight(c.alpha(i));
    DualVec tail = dual_rec(c, t, k, e, depth + 1, sub);
    DualVec gen = zero_dual(WordSpace::get(c.alpha(i)));
    gen.e.emplace_back(0, ZLaurent(1));
    DualVec part = shuffle(c, gen, tail);
    // Scales stay 1 along the recursion except for content pulled out.
    acc = add_duals(acc, part);
    k = e;
  }
  return acc;
}
}  // namespace

DualVec dual_of(const CartanDatum& c, const FreeElement& x) {
  Weight nu = x.weight(c.rank());
  DualVec d = dual_rec(c, x.terms(), 0, x.terms().size(), 0, nu);
  d.scale = d.scale * x.scale();
  return d;
}

// ---------------------------------------------------------------- UElem

namespace {
std::atomic<size_t> g_free_limit{200000};
}

void UElem::set_free_limit(size_t n) { g_free_limit = n; }
size_t UElem::free_limit() { return g_free_limit.load(); }

UElem make_uelem(const CartanDatum& c, std::optional<FreeElement> free, DualVec dual) {
  UElem u;
  u.c_ = &c;
  u.free_ = std::move(free);
  u.dual_ = std::move(dual);
  return u;
}

UElem::UElem(const CartanDatum& c, const FreeElement& x) : c_(&c) {
  if (x.is_zero()) {
    free_ = x;
    return;
  }
  free_ = x;
  dual_ = dual_of(c, x);
}

UElem UElem::generator(const CartanDatum& c, int i) { return UElem(c, FreeElement::generator(i)); }
UElem UElem::one(const CartanDatum& c) { return UElem(c, FreeElement::one()); }

bool UElem::is_zero() const { return !has_weight() || dual_.is_zero(); }

const Weight& UElem::weight() const {
  if (!has_weight()) throw std::logic_error("UElem: zero element has no weight");
  return dual_.space->weight();
}

const FreeElement& UElem::free() const {
  if (!free_) throw std::logic_error("UElem: free representative was dropped (size limit)");
  return *free_;
}

RationalFunction UElem::dual_coeff(const Word& w) const {
  if (!has_weight()) return RationalFunction(0);
  const ZLaurent* z = dual_.find(dual_.space->index(w));
  if (!z) return RationalFunction(0);
  return dual_.scale * RationalFunction(z->to_laurent());
}

UElem UElem::operator-() const {
  UElem r = *this;
  if (r.free_) r.free_ = -*r.free_;
  r.dual_.scale = -r.dual_.scale;
  return r;
}

UElem operator+(const UElem& x, const UElem& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  UElem r;
  r.c_ = x.c_;
  r.dual_ = add_duals(x.dual_, y.dual_);
  if (x.free_ && y.free_) r.free_ = *x.free_ + *y.free_;
  return r;
}

UElem operator-(const UElem& x, const UElem& y) { return x + (-y); }

UElem operator*(const UElem& x, const mpq_class& s) { return RationalFunction(s) * x; }

UElem operator*(const UElem& x, const UElem& y) {
  if (!x.has_weight() || !y.has_weight()) {
    UElem z;
    z.c_ = x.c_ ? x.c_ : y.c_;
    z.free_ = FreeElement();
    return z;
  }
  UElem r;
  r.c_ = x.c_;
  r.dual_ = shuffle(*x.c_, x.dual_, y.dual_);
  if (x.free_ && y.free_ && x.free_->size() * y.free_->size() <= UElem::free_limit()) r.free_ = *x.free_ * *y.free_;
  return r;
}

UElem operator*(const RationalFunction& s, const UElem& x) {
  if (s.is_zero() || !x.has_weight()) {
    UElem z;
    z.c_ = x.c_;
    z.free_ = FreeElement();
    return z;
  }
  UElem r = x;
  r.dual_.scale = s * r.dual_.scale;
  if (r.free_) r.free_ = s * *r.free_;
  return r;
}

UElem UElem::r(int i) const {
  UElem out;
  out.c_ = c_;
  if (!has_weight() || weight()[i] == 0) {
    out.free_ = FreeElement();
    return out;
  }
  Weight sub = weight() - c_->alpha(i);
  auto sp = WordSpace::get(sub);
  DualVec d = zero_dual(sp);
  d.scale = dual_.scale;
  // Dropping a final letter preserves the order of the remaining words.
  for (const auto& [k, z] : dual_.e) {
    Word w = dual_.space->word(k);
    if (w[w.size() - 1] == i) d.e.emplace_back(sp->index(w.subword(0, w.size() - 1)), z);
  }
  d.normalize();
  out.dual_ = std::move(d);
  if (free_) out.free_ = free_->r(*c_, i);
  return out;
}

UElem UElem::ir(int i) const {
  UElem out;
  out.c_ = c_;
  if (!has_weight() || weight()[i] == 0) {
    out.free_ = FreeElement();
    return out;
  }
  Weight sub = weight() - c_->alpha(i);
  auto sp = WordSpace::get(sub);
  DualVec d = zero_dual(sp);
  d.scale = dual_.scale;
  for (const auto& [k, z] : dual_.e) {
    Word w = dual_.space->word(k);
    if (w[0] == i) d.e.emplace_back(sp->index(w.subword(1, w.size() - 1)), z);
  }
  d.normalize();
  out.dual_ = std::move(d);
  if (free_) out.free_ = free_->ir(*c_, i);
  return out;
}

UElem divided_power(const UElem& x, int r) {
  if (r < 0) throw std::invalid_argument("divided_power: negative exponent");
  UElem p = UElem::one(*x.datum());
  for (int k = 0; k < r; ++k) p = p * x;
  return RationalFunction(q_fact(r)).inverse() * p;
}

UElem qcomm(const UElem& x, const UElem& y, int k) { return x * y - RationalFunction::q_pow(k) * (y * x); }

// ---------------------------------------------------------------- form

namespace {
RationalFunction one_minus_qm2_pow(int h) {
  RationalFunction b = RationalFunction(1) - RationalFunction::q_pow(-2);
  RationalFunction r(1);
  for (int k = 0; k < h; ++k) r = r * b;
  return r;
}

RationalFunction pair_free_dual(const FreeElement& x, const DualVec& d) {
  ZLaurent acc;
  for (const auto& [w, cx] : x.terms()) {
    const ZLaurent* cy = d.find(d.space->index(w));
    if (cy) acc.add_mul_shift(cx * *cy, 1, 0);
  }
  return x.scale() * d.scale * RationalFunction(acc.to_laurent()) / one_minus_qm2_pow(d.space->height());
}
}  // namespace

RationalFunction inner(const CartanDatum& c, const FreeElement& x, const FreeElement& y) {
  RationalFunction total(0);
  auto px = x.homogeneous_parts(c.rank());
  auto py = y.homogeneous_parts(c.rank());
  for (const auto& [w, part] : px) {
    auto it = py.find(w);
    if (it == py.end()) continue;
    total += pair_free_dual(part, dual_of(c, it->second));
  }
  return total;
}

RationalFunction inner(const UElem& x, const UElem& y) {
  if (!x.has_weight() || !y.has_weight()) return RationalFunction(0);
  if (!(x.weight() == y.weight())) return RationalFunction(0);
  if (x.has_free()) return pair_free_dual(x.free(), y.dual());
  if (y.has_free()) return pair_free_dual(y.free(), x.dual());
  throw std::logic_error("inner: neither side keeps a free representative");
}

bool is_zero_by_derivations(const CartanDatum& c, const FreeElement& x) {
  if (x.is_zero()) return true;
  for (const auto& [w, part] : x.homogeneous_parts(c.rank())) {
    if (w.height() == 0) return false;
    for (int i = 0; i < c.nodes(); ++i)
      if (w[i] > 0 && !is_zero_by_derivations(c, part.ir(c, i))) return false;
  }
  return true;
}

bool is_zero_in_uplus(const CartanDatum& c, const FreeElement& x) {
  for (const auto& [w, part] : x.homogeneous_parts(c.rank()))
    if (!dual_of(c, part).is_zero()) return false;
  return true;
}

bool equals_in_uplus(const CartanDatum& c, const FreeElement& x, const FreeElement& y) {
  return is_zero_in_uplus(c, x - y);
}

bool equals_in_uplus(const UElem& x, const UElem& y) {
  if (x.has_weight() && y.has_weight() && !(x.weight() == y.weight())) return x.is_zero() && y.is_zero();
  return (x - y).is_zero();
}

bool in_lattice(const CartanDatum& c, const FreeElement& x) { return inner(c, x, x).in_A(); }
bool in_lattice(const UElem& x) { return inner(x, x).in_A(); }

// ---------------------------------------------------------------- PairingCache

ZLaurent PairingCache::raw(const Word& u0, const Word& v0) {
  const Word& u = u0 < v0 ? u0 : v0;
  const Word& v = u0 < v0 ? v0 : u0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(u);
    if (it != memo_.end()) {
      auto jt = it->second.find(v);
      if (jt != it->second.end()) return jt->second;
    }
  }
  ZLaurent r;
  if (u.size() != v.size() || !(u.weight(c_.rank()) == v.weight(c_.rank()))) {
    r = ZLaurent();
  } else if (u.empty()) {
    r = ZLaurent(1);
  } else {
    // dual(E_v)_u with v = i v': positions p of u carrying i.
    int i = v[0];
    Word vt = v.subword(1, v.size() - 1);
    int before = 0;
    for (int p = 0; p < u.size(); ++p) {
      if (u[p] == i) r.add_mul_shift(raw(u.erase(p), vt), 1, before);
      before += c_.a(i, u[p]);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_[u].emplace(v, r);
  return r;
}

RationalFunction PairingCache::get(const Word& u, const Word& v) {
  ZLaurent z = raw(u, v);
  if (z.is_zero()) return RationalFunction(0);
  return RationalFunction(z.to_laurent()) / one_minus_qm2_pow(u.size());
}

size_t PairingCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t s = 0;
  for (const auto& [k, m] : memo_) s += m.size();
  return s;
}

// ---------------------------------------------------------------- linear algebra

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return static_cast<unsigned __int128>(a) * b % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t eval_mod(const ZLaurent& z, uint64_t q0, uint64_t qinv, uint64_t p) {
  if (z.is_zero()) return 0;
  uint64_t acc = 0;
  const auto& cs = z.coeffs();
  for (size_t k = cs.size(); k-- > 0;) {
    int64_t c = cs[k];
    uint64_t cm = c >= 0 ? static_cast<uint64_t>(c) % p : (p - static_cast<uint64_t>(-(c + 1)) % p - 1) % p;
    acc = (mulmod(acc, q0, p) + cm) % p;
  }
  int lo = z.low();
  uint64_t sh = lo >= 0 ? powmod(q0, lo, p) : powmod(qinv, -lo, p);
  return mulmod(acc, sh, p);
}

struct ModElim {
  std::vector<size_t> rows, cols;
};

ModElim eliminate(const std::vector<const DualVec*>& in, uint64_t q0, uint64_t p) {
  ModElim res;
  if (in.empty()) return res;
  // Compress to the columns that occur in some row.
  std::vector<uint64_t> colmap;
  for (const DualVec* d : in) {
    if (!(d->space->weight() == in.front()->space->weight())) throw std::invalid_argument("rank: rows of different weights");
    for (const auto& [k, z] : d->e) colmap.push_back(k);
  }
  std::sort(colmap.begin(), colmap.end());
  colmap.erase(std::unique(colmap.begin(), colmap.end()), colmap.end());
  size_t W = colmap.size();
  uint64_t qinv = powmod(q0, p - 2, p);
  std::vector<std::vector<uint64_t>> basis;  // reduced rows
  std::vector<size_t> piv;
  for (size_t r = 0; r < in.size(); ++r) {
    std::vector<uint64_t> row(W, 0);
    for (const auto& [k, z] : in[r]->e)
      row[std::lower_bound(colmap.begin(), colmap.end(), k) - colmap.begin()] = eval_mod(z, q0, qinv, p);
    for (size_t b = 0; b < basis.size(); ++b) {
      uint64_t f = row[piv[b]];
      if (!f) continue;
      const auto& br = basis[b];
      for (size_t k = 0; k < W; ++k)
        if (br[k]) row[k] = (row[k] + p - mulmod(f, br[k], p)) % p;
    }
    size_t pc = 0;
    while (pc < W && row[pc] == 0) ++pc;
    if (pc == W) continue;
    uint64_t inv = powmod(row[pc], p - 2, p);
    for (auto& x : row) x = mulmod(x, inv, p);
    basis.push_back(std::move(row));
    piv.push_back(pc);
    res.rows.push_back(r);
    res.cols.push_back(colmap[pc]);
  }
  return res;
}

constexpr uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1
}  // namespace

size_t rank_specialized(const std::vector<const DualVec*>& rows, uint64_t q0, uint64_t p) {
  return eliminate(rows, q0, p).rows.size();
}

std::pair<std::vector<size_t>, std::vector<size_t>> independent_rows_specialized(
    const std::vector<const DualVec*>& rows, uint64_t q0, uint64_t p) {
  auto e = eliminate(rows, q0, p);
  return {e.rows, e.cols};
}

FreeElement serre_element(const CartanDatum& c, int i, int j) {
  int m = 1 - c.a(i, j);
  FreeElement s;
  for (int r = 0; r <= m; ++r) {
    Word w;
    for (int k = 0; k < r; ++k) w.push_back(i);
    w.push_back(j);
    for (int k = 0; k < m - r; ++k) w.push_back(i);
    RationalFunction co = RationalFunction(q_binom(m, r)) * RationalFunction(r % 2 ? -1 : 1);
    s = s + FreeElement::monomial(w, co);
  }
  return s;
}

namespace {
// Free coordinates of x as a DualVec-shaped row (indexed by words of weight nu).
DualVec free_row(const FreeElement& x, const std::shared_ptr<const WordSpace>& sp) {
  DualVec d;
  d.space = sp;
  for (const auto& [w, c] : x.terms()) d.e.emplace_back(sp->index(w), c);
  std::sort(d.e.begin(), d.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return d;
}
}  // namespace

GramRank gram_rank(const CartanDatum& c, const Weight& nu) {
  auto sp = WordSpace::get(nu);
  GramRank g;
  g.words = sp->size();
  std::vector<DualVec> rows;
  rows.reserve(g.words);
  for (size_t k = 0; k < g.words; ++k) rows.push_back(dual_of(c, FreeElement::monomial(sp->word(k))));
  std::vector<const DualVec*> ptr;
  for (auto& r : rows) ptr.push_back(&r);
  g.lower = rank_specialized(ptr, 1234567, kPrime);

  // Certified radical vectors a S b; each is checked to have zero dual.
  std::vector<DualVec> kern;
  int n = c.rank();
  for (int i = 0; i < c.nodes(); ++i)
    for (int j = 0; j < c.nodes(); ++j) {
      if (i == j) continue;
      FreeElement s = serre_element(c, i, j);
      Weight ws = s.weight(n);
      Weight rest = nu - ws;
      if (!rest.is_nonnegative()) continue;
      // all splits rest = |a| + |b|
      std::vector<Weight> lefts;
      std::vector<int> cur(nu.d.size(), 0);
      auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cur.size()) {
          lefts.emplace_back(cur);
          return;
        }
        for (int t = 0; t <= rest.d[k]; ++t) {
          cur[k] = t;
          self(self, k + 1);
        }
      };
      rec(rec, 0);
      for (const Weight& wa : lefts) {
        Weight wb = rest - wa;
        auto sa = WordSpace::get(wa);
        auto sb = WordSpace::get(wb);
        for (size_t x = 0; x < sa->size(); ++x)
          for (size_t y = 0; y < sb->size(); ++y) {
            FreeElement e = FreeElement::monomial(sa->word(x)) * s * FreeElement::monomial(sb->word(y));
            if (!dual_of(c, e).is_zero()) throw std::logic_error("gram_rank: Serre multiple not in radical");
            kern.push_back(free_row(e, sp));
          }
      }
    }
  std::vector<const DualVec*> kp;
  for (auto& r : kern) kp.push_back(&r);
  g.upper = g.words - rank_specialized(kp, 7654321, kPrime);
  return g;
}

uint64_t dim_oracle(const CartanDatum& c, const Weight& nu) {
  int nodes = c.nodes();
  std::vector<int> stride(nodes);
  int states = 1;
  for (int k = 0; k < nodes; ++k) {
    stride[k] = states;
    states *= nu.d[k] + 1;
  }
  auto index_of = [&](const Weight& w) {
    int s = 0;
    for (int k = 0; k < nodes; ++k) s += w.d[k] * stride[k];
    return s;
  };
  auto fits = [&](const Weight& w) {
    for (int k = 0; k < nodes; ++k)
      if (w.d[k] < 0 || w.d[k] > nu.d[k]) return false;
    return true;
  };
  // (root weight, multiplicity)
  std::vector<std::pair<Weight, int>> roots;
  int K = nu.delta_multiple() + 1;
  for (const Weight& a : c.finite_positive_roots())
    for (int k = 0; k <= K; ++k) {
      Weight p = k * c.delta() + a;
      if (fits(p)) roots.emplace_back(p, 1);
      if (k >= 1) {
        Weight m = k * c.delta() - a;
        if (fits(m)) roots.emplace_back(m, 1);
      }
    }
  for (int k = 1; k <= K; ++k)
    if (fits(k * c.delta())) roots.emplace_back(k * c.delta(), c.rank());
  std::vector<uint64_t> f(states, 0);
  f[0] = 1;
  std::vector<int> digit(nodes);
  for (const auto& [rw, mult] : roots)
    for (int rep = 0; rep < mult; ++rep) {
      int off = index_of(rw);
      // unbounded knapsack in increasing state order, guarding componentwise fit
      for (int s = 0; s < states; ++s) {
        int r = s;
        bool ok = true;
        for (int k = 0; k < nodes; ++k) {
          digit[k] = r % (nu.d[k] + 1);
          r /= nu.d[k] + 1;
          if (digit[k] < rw.d[k]) ok = false;
        }
        if (ok) f[s] += f[s - off];
      }
    }
  return f[states - 1];
}

size_t dim_uplus(const CartanDatum& c, const Weight& nu) {
  GramRank g = gram_rank(c, nu);
  if (!g.exact()) throw std::runtime_error("dim_uplus: rank bounds disagree at " + nu.to_string());
  return g.lower;
}

std::vector<std::vector<RationalFunction>> solve_exact_many(const std::vector<std::vector<RationalFunction>>& A0,
                                                           const std::vector<std::vector<RationalFunction>>& B0) {
  size_t n = A0.size(), m = B0.size();
  auto A = A0;
  // b[r][j]: row r of right-hand side j
  std::vector<std::vector<RationalFunction>> b(n, std::vector<RationalFunction>(m));
  for (size_t j = 0; j < m; ++j)
    for (size_t r = 0; r < n; ++r) b[r][j] = B0[j][r];
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r)
      if (!A[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) throw std::domain_error("solve_exact: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    RationalFunction inv = A[col][col].inverse();
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      RationalFunction f = A[r][col] * inv;
      for (size_t k = col; k < n; ++k)
        if (!A[col][k].is_zero()) A[r][k] -= f * A[col][k];
      for (size_t j = 0; j < m; ++j)
        if (!b[col][j].is_zero()) b[r][j] -= f * b[col][j];
    }
  }
  std::vector<std::vector<RationalFunction>> x(m, std::vector<RationalFunction>(n));
  for (size_t j = 0; j < m; ++j)
    for (size_t r = 0; r < n; ++r) x[j][r] = b[r][j] / A[r][r];
  return x;
}

std::vector<RationalFunction> solve_exact(const std::vector<std::vector<RationalFunction>>& A,
                                          const std::vector<RationalFunction>& b) {
  return solve_exact_many(A, {b}).front();
}

std::vector<std::vector<RationalFunction>> coords_many(const std::vector<UElem>& xs, const std::vector<UElem>& basis) {
  size_t d = basis.size();
  if (d == 0) {
    for (const auto& x : xs)
      if (!x.is_zero()) throw std::domain_error("coords: empty basis for nonzero element");
    return std::vector<std::vector<RationalFunction>>(xs.size());
  }
  std::vector<const DualVec*> rows;
  for (const auto& b : basis) {
    if (!b.has_weight()) throw std::domain_error("coords: zero basis element");
    rows.push_back(&b.dual());
  }
  std::vector<size_t> sel, cols;
  for (uint64_t q0 : {1234567ull, 987654321ull, 31337ull}) {
    std::tie(sel, cols) = independent_rows_specialized(rows, q0, kPrime);
    if (sel.size() == d) break;
  }
  if (sel.size() != d) throw std::domain_error("coords: basis elements are dependent at every specialization tried");
  for (const auto& x : xs)
    if (!x.is_zero() && !(x.weight() == basis.front().weight())) throw std::domain_error("coords: weight mismatch");
  // Pivot columns from the elimination give a nonsingular d x d system.
  std::vector<std::vector<RationalFunction>> A(d, std::vector<RationalFunction>(d));
  std::vector<std::vector<RationalFunction>> rhs(xs.size(), std::vector<RationalFunction>(d));
  auto sp = basis.front().dual().space;
  for (size_t r = 0; r < d; ++r) {
    Word w = sp->word(cols[r]);
    for (size_t k = 0; k < d; ++k) A[r][k] = basis[k].dual_coeff(w);
    for (size_t j = 0; j < xs.size(); ++j) rhs[j][r] = xs[j].dual_coeff(w);
  }
  auto sol = solve_exact_many(A, rhs);
  for (size_t j = 0; j < xs.size(); ++j) {
    UElem check = xs[j];
    for (size_t k = 0; k < d; ++k) check = check - sol[j][k] * basis[k];
    if (!check.is_zero()) throw std::domain_error("coords: element not in the span of the basis");
  }
  return sol;
}

std::vector<RationalFunction> coords(const UElem& x, const std::vector<UElem>& basis) {
  return coords_many({x}, basis).front();
}

std::vector<RationalFunction> coords(const CartanDatum& c, const FreeElement& x, const std::vector<FreeElement>& basis) {
  std::vector<UElem> b;
  for (const auto& e : basis) b.emplace_back(c, e);
  return coords(UElem(c, x), b);
}

}  // namespace qaffine
