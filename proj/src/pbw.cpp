#include "qaffine/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaffine {

// ---------------------------------------------------------------- PBWIndex

PBWIndex& PBWIndex::add(const AffineRoot& r, int m) {
  if (m < 0) throw std::invalid_argument("PBWIndex: negative multiplicity");
  if (m > 0) c[r] += m;
  return *this;
}

int PBWIndex::operator()(const AffineRoot& r) const {
  auto it = c.find(r);
  return it == c.end() ? 0 : it->second;
}

Weight PBWIndex::weight(const CartanDatum& cd) const {
  Weight w(cd.rank());
  for (const auto& [r, m] : c) w = w + m * r.to_weight(cd);
  return w;
}

namespace {
PBWIndex restrict_kind(const PBWIndex& x, RootKind kind) {
  PBWIndex out;
  for (const auto& [r, m] : x.c)
    if (r.kind == kind) out.c.emplace(r, m);
  return out;
}
}  // namespace

PBWIndex PBWIndex::greater_part() const { return restrict_kind(*this, RootKind::RealPlus); }
PBWIndex PBWIndex::imaginary_part() const { return restrict_kind(*this, RootKind::Imaginary); }
PBWIndex PBWIndex::less_part() const { return restrict_kind(*this, RootKind::RealMinus); }

bool PBWIndex::is_imaginary() const {
  return std::all_of(c.begin(), c.end(), [](const auto& e) { return e.first.kind == RootKind::Imaginary; });
}

PtMonomial PBWIndex::imaginary_exponents() const {
  PtMonomial m;
  for (const auto& [r, e] : c)
    if (r.kind == RootKind::Imaginary) m[{r.k, r.color}] = e;
  return m;
}

std::string PBWIndex::to_string() const {
  if (c.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [r, m] : c) {
    if (!first) os << ", ";
    first = false;
    os << r.to_string() << ": " << m;
  }
  os << "}";
  return os.str();
}

std::vector<PBWIndex> pbw_indices(const CartanDatum& c, const Weight& nu) {
  if (!nu.is_nonnegative()) throw std::invalid_argument("pbw_indices: negative weight");
  auto fits = [&](const Weight& w) {
    for (size_t k = 0; k < nu.d.size(); ++k)
      if (w.d[k] > nu.d[k]) return false;
    return true;
  };
  int K = nu.delta_multiple() + 1;
  std::vector<std::pair<AffineRoot, Weight>> roots;
  for (const Weight& a : c.finite_positive_roots())
    for (int k = 0; k <= K; ++k) {
      AffineRoot p = AffineRoot::plus(k, a);
      if (fits(p.to_weight(c))) roots.emplace_back(p, p.to_weight(c));
      if (k == 0) continue;
      AffineRoot m = AffineRoot::minus(k, a);
      if (fits(m.to_weight(c))) roots.emplace_back(m, m.to_weight(c));
    }
  for (int k = 1; k <= K; ++k)
    for (int i = 1; i <= c.rank(); ++i) {
      AffineRoot r = AffineRoot::imaginary(k, i, c.rank());
      if (fits(r.to_weight(c))) roots.emplace_back(r, r.to_weight(c));
    }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<PBWIndex> out;
  PBWIndex cur;
  auto rec = [&](auto&& self, size_t k, const Weight& rest) -> void {
    if (rest.height() == 0) {
      out.push_back(cur);
      return;
    }
    if (k == roots.size()) return;
    const auto& [r, w] = roots[k];
    Weight left = rest;
    int m = 0;
    while (true) {
      self(self, k + 1, left);
      left = left - w;
      if (!left.is_nonnegative()) break;
      ++m;
      cur.c[r] = m;
    }
    cur.c.erase(r);
  };
  rec(rec, 0, nu);
  std::sort(out.begin(), out.end());
  return out;
}

RationalFunction divided_power_norm(int m) {
  RationalFunction r(1);
  for (int s = 1; s <= m; ++s) r = r / (RationalFunction(1) - RationalFunction::q_pow(-2 * s));
  return r;
}

// ---------------------------------------------------------------- PBWBasis

PBWBasis::PBWBasis(RootVectorTable& t) : t_(t), order_(t.datum(), t.k_max()) {}

bool PBWBasis::supported(const PBWIndex& c) const {
  for (const auto& [r, m] : c.c) {
    if (r.k > t_.k_max()) return false;
    if (r.is_real() && r.simple_index() < 1) return false;
  }
  return true;
}

const UElem& PBWBasis::root_vector(const AffineRoot& r) {
  if (!r.is_real()) throw std::invalid_argument("root_vector: imaginary root " + r.to_string());
  int i = r.simple_index();
  if (i < 1) throw std::domain_error("root_vector: no root vector constructed for " + r.to_string());
  return t_.real(r.k, r.kind == RootKind::RealPlus ? Sign::Plus : Sign::Minus, i);
}

UElem PBWBasis::ordered(const PBWIndex& c, bool psi) {
  const CartanDatum& cd = t_.datum();
  std::vector<std::pair<AffineRoot, int>> f(c.c.begin(), c.c.end());
  std::sort(f.begin(), f.end(), [&](const auto& a, const auto& b) { return order_.less(a.first, b.first); });
  UElem acc = UElem::one(cd);
  for (const auto& [r, m] : f) {
    if (r.is_real()) {
      acc = acc * divided_power(root_vector(r), m);
    } else {
      const UElem& g = psi ? t_.psi_tilde(r.k, r.color) : t_.P_tilde(r.k, r.color);
      for (int s = 0; s < m; ++s) acc = acc * g;
    }
  }
  return acc;
}

UElem PBWBasis::E(const PBWIndex& c) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = e_memo_.find(c);
    if (it != e_memo_.end()) return it->second;
  }
  UElem e = ordered(c, false);
  std::lock_guard<std::mutex> lock(mu_);
  return e_memo_.emplace(c, std::move(e)).first->second;
}

std::vector<UElem> PBWBasis::basis_E(const std::vector<PBWIndex>& idx) {
  std::vector<UElem> out;
  for (const auto& x : idx) {
    if (!supported(x)) throw std::domain_error("PBW: unsupported index " + x.to_string());
    out.push_back(E(x));
  }
  return out;
}
UElem PBWBasis::E_prime(const PBWIndex& c) { return ordered(c, true); }

UElem PBWBasis::B(const PBWIndex& c) {
  UElem mid = S(c.imaginary_exponents()).materialize(t_);
  return E(c.greater_part()) * mid * E(c.less_part());
}

std::vector<UElem> PBWBasis::basis_B(const std::vector<PBWIndex>& idx) {
  std::vector<UElem> out;
  for (const auto& c : idx) {
    if (!supported(c)) throw std::domain_error("PBW: unsupported index " + c.to_string());
    out.push_back(B(c));
  }
  return out;
}

std::map<PtMonomial, RationalFunction> PBWBasis::pi0_coords(const UElem& x) {
  std::map<PtMonomial, RationalFunction> out;
  if (x.is_zero()) return out;
  const Weight& nu = x.weight();
  if (nu.delta_multiple() < 0 || !(nu == nu.delta_multiple() * datum().delta()))
    throw std::invalid_argument("pi0: weight " + nu.to_string() + " is not a multiple of delta");
  auto idx = pbw_indices(datum(), nu);
  auto sol = coords(x, basis_B(idx));
  for (size_t k = 0; k < idx.size(); ++k)
    if (idx[k].is_imaginary() && !sol[k].is_zero()) out.emplace(idx[k].imaginary_exponents(), sol[k]);
  return out;
}

ImaginaryElement PBWBasis::pi0(const UElem& x) {
  ImaginaryElement acc;
  for (const auto& [c0, co] : pi0_coords(x)) acc = acc + co * S(c0);
  return acc;
}

OrthonormalityTable PBWBasis::orthonormality_table(const Weight& nu) {
  OrthonormalityTable tab;
  tab.weight = nu;
  tab.indices = pbw_indices(datum(), nu);
  auto b = basis_B(tab.indices);
  size_t d = b.size();
  tab.limits.assign(d, std::vector<std::optional<mpq_class>>(d));
  tab.pass = true;
  for (size_t r = 0; r < d; ++r)
    for (size_t s = r; s < d; ++s) {
      RationalFunction v = inner(b[r], b[s]);
      if (v.in_A()) tab.limits[r][s] = tab.limits[s][r] = v.limit_at_infinity();
      bool ok = tab.limits[r][s] && *tab.limits[r][s] == (r == s ? 1 : 0);
      if (!ok) tab.pass = false;
    }
  return tab;
}

namespace {
bool integral(const RationalFunction& a) { return a.is_laurent() && a.to_laurent().has_integer_coeffs(); }
}  // namespace

bool PBWBasis::integrality_check(const PBWIndex& c, const PBWIndex& cp) {
  UElem prod = E(c) * E(cp);
  auto basis = basis_E(pbw_indices(datum(), c.weight(datum()) + cp.weight(datum())));
  for (const auto& a : coords(prod, basis))
    if (!integral(a)) return false;
  return true;
}

std::optional<std::pair<PBWIndex, PBWIndex>> PBWBasis::integrality_check(const Weight& a, const Weight& b) {
  auto ia = pbw_indices(datum(), a), ib = pbw_indices(datum(), b);
  std::vector<std::pair<PBWIndex, PBWIndex>> pairs;
  for (const auto& x : ia)
    for (const auto& y : ib) {
      pairs.emplace_back(x, y);
      if (a != b) pairs.emplace_back(y, x);
    }
  std::vector<UElem> prods;
  for (const auto& [x, y] : pairs) prods.push_back(E(x) * E(y));
  auto basis = basis_E(pbw_indices(datum(), a + b));
  auto sol = coords_many(prods, basis);
  for (size_t k = 0; k < pairs.size(); ++k)
    for (const auto& co : sol[k])
      if (!integral(co)) return pairs[k];
  return std::nullopt;
}

bool PBWBasis::luinner_check(const PBWIndex& c, const PBWIndex& cp) {
  RationalFunction lhs = inner(E(c), E(cp));
  PBWIndex c0 = c.imaginary_part(), cp0 = cp.imaginary_part();
  RationalFunction rhs(0);
  bool same_real = c.greater_part() == cp.greater_part() && c.less_part() == cp.less_part();
  if (same_real && c0.weight(datum()) == cp0.weight(datum())) {
    rhs = inner(E(c0), E(cp0));
    for (const auto& [r, m] : c.c)
      if (r.is_real()) rhs = rhs * divided_power_norm(m);
  }
  return lhs == rhs;
}

}  // namespace qaffine
