#include "qaffine/rootvec.hpp"

#include <stdexcept>

namespace qaffine {

namespace {
RationalFunction qp(int k) { return RationalFunction::q_pow(k); }
RationalFunction qi(int m) { return RationalFunction(q_int(m)); }
}  // namespace

UElem commutator(const UElem& x, const UElem& y) { return x * y - y * x; }

FreeElement braid_substitute(const CartanDatum& c, const FreeElement& x, int j) {
  FreeElement ej = FreeElement::generator(j);
  FreeElement out;
  for (const auto& [w, co] : x.expanded()) {
    FreeElement term = FreeElement::monomial(Word(), co);
    for (int p = 0; p < w.size(); ++p) {
      int m = w[p];
      if (m == j) throw std::invalid_argument("braid_substitute: element involves E_" + std::to_string(j));
      FreeElement em = FreeElement::generator(m);
      if (c.a(m, j) == 0) {
        term = term * em;
      } else if (c.a(m, j) == -1) {
        term = term * (em * ej - qp(-1) * (ej * em));
      } else {
        throw std::invalid_argument("braid_substitute: only simply-laced neighbours are supported");
      }
    }
    out += term;
  }
  return out;
}

RootVectorTable::RootVectorTable(const CartanDatum& c, int k_max) : c_(c), k_max_(k_max) {
  if (k_max < 1) throw std::invalid_argument("RootVectorTable: k_max must be positive");
}

void RootVectorTable::check_index(int k, int i, int kmin) const {
  if (i < 1 || i > c_.rank()) throw std::invalid_argument("root vector: node " + std::to_string(i) + " is not finite");
  if (k < kmin) throw std::invalid_argument("root vector: inadmissible degree " + std::to_string(k));
  if (k > k_max_)
    throw std::out_of_range("root vector: degree " + std::to_string(k) + " exceeds bound " + std::to_string(k_max_));
}

template <class F>
const UElem& RootVectorTable::memo(std::map<std::tuple<int, int, int, int>, UElem>& m, std::tuple<int, int, int, int> key,
                                   F&& make) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = m.find(key);
  if (it != m.end()) return it->second;
  UElem v = make();
  return m.emplace(key, std::move(v)).first->second;
}

std::vector<int> RootVectorTable::seed_chain(int i) const {
  std::vector<int> chain;
  int n = c_.rank();
  if (n == 1) return chain;
  for (int j = 1; j < i; ++j) chain.push_back(j);
  for (int j = n; j > i; --j) chain.push_back(j);
  return chain;
}

const UElem& RootVectorTable::seed(int i) {
  check_index(1, i, 1);
  return memo(seeds_, {i, 0, 0, 0}, [&] {
    FreeElement x = FreeElement::generator(0);
    Weight beta = c_.alpha(0);
    for (int j : seed_chain(i)) {
      if (c_.pairing(beta, c_.alpha(j)) != -1 || beta[j] != 0)
        throw std::logic_error("seed: braid chain leaves the support-avoiding range");
      x = braid_substitute(c_, x, j);
      beta = beta + c_.alpha(j);
    }
    if (!(beta == c_.delta() - c_.alpha(i))) throw std::logic_error("seed: chain does not reach delta - alpha_i");
    return UElem(c_, x);
  });
}

const UElem& RootVectorTable::real(int k, Sign s, int i) {
  check_index(k, i, s == Sign::Plus ? 0 : 1);
  return memo(real_, {k, s == Sign::Plus ? 0 : 1, i, 0}, [&] {
    if (s == Sign::Plus && k == 0) return UElem::generator(c_, i);
    if (s == Sign::Minus && k == 1) return seed(i);
    const UElem& prev = real(k - 1, s, i);
    RationalFunction f = qi(2).inverse();
    if (s == Sign::Minus) f = -f;
    return f * commutator(psi_tilde(1, i), prev);
  });
}

const UElem& RootVectorTable::psi_tilde(int k, int i) {
  check_index(k, i, 1);
  return memo(psi_, {k, i, 0, 0}, [&] {
    const UElem& em = real(k, Sign::Minus, i);
    UElem ei = UElem::generator(c_, i);
    return em * ei - qp(-2) * (ei * em);
  });
}

const UElem& RootVectorTable::imag(int k, int i) {
  check_index(k, i, 1);
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = imag_.find({k, i, 0, 0});
    if (it != imag_.end()) return it->second;
    RationalFunction h = qp(1) - qp(-1);
    UElem one = UElem::one(c_);
    PowerSeries<UElem> ser(k, UElem());
    ser[0] = one;
    for (int m = 1; m <= k; ++m) ser[m] = h * psi_tilde(m, i);
    auto lg = series_log<UElem>(ser, one, [](const UElem& x) { return x.is_zero(); });
    RationalFunction hinv = h.inverse();
    for (int m = 1; m <= k; ++m) imag_.emplace(std::tuple{m, i, 0, 0}, hinv * lg[m]);
    return imag_.at({k, i, 0, 0});
  }
}

const UElem& RootVectorTable::P(int k, int i) {
  if (k == 0) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return p_.try_emplace({0, i, 0, 0}, UElem::one(c_)).first->second;
  }
  check_index(k, i, 1);
  return memo(p_, {k, i, 0, 0}, [&] {
    UElem acc;
    for (int r = 1; r <= k; ++r) acc += qp(k - r) * (psi_tilde(r, i) * P(k - r, i));
    return -(qi(k).inverse() * acc);
  });
}

const UElem& RootVectorTable::P_tilde(int k, int i) {
  if (k == 0) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return pt_.try_emplace({0, i, 0, 0}, UElem::one(c_)).first->second;
  }
  check_index(k, i, 1);
  return memo(pt_, {k, i, 0, 0}, [&] {
    UElem acc;
    for (int r = 1; r <= k; ++r) acc += qp(r - k) * (psi_tilde(r, i) * P_tilde(k - r, i));
    return qi(k).inverse() * acc;
  });
}

const UElem& RootVectorTable::D(Sign s, int k, int i, int r) {
  if (r < 0) throw std::invalid_argument("D: negative power of xi");
  if (k < 0) throw std::invalid_argument("D: negative degree");
  if (k > k_max_ - (s == Sign::Minus ? 1 : 0) && r > 0)
    throw std::out_of_range("D: degree " + std::to_string(k) + " exceeds bound");
  return memo(d_, {s == Sign::Plus ? 0 : 1, k, i, r}, [&] {
    if (r == 0) return k == 0 ? UElem::one(c_) : UElem();
    UElem acc;
    for (int m = 0; m <= k; ++m) {
      const UElem& left = D(s, m, i, r - 1);
      if (left.is_zero()) continue;
      const UElem& x = s == Sign::Plus ? real(k - m, Sign::Plus, i) : real(k - m + 1, Sign::Minus, i);
      acc += left * x;
    }
    return qi(r).inverse() * acc;
  });
}

UElem RootVectorTable::bold_D(int k, int i, int r) {
  UElem acc;
  for (int m = 0; m <= k; ++m) acc += qp(k - m) * (P(k - m, i) * D(Sign::Plus, m, i, r));
  return acc;
}

UElem RootVectorTable::bold_D_tilde(int k, int i, int r) {
  UElem acc;
  for (int m = 0; m <= k; ++m) acc += qp(m - k) * (D(Sign::Plus, m, i, r) * P_tilde(k - m, i));
  return acc;
}

}  // namespace qaffine
