#include "qaffine/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qaffine/pbw.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedCap: return "skipped-cap";
  }
  return "fail";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped-cap") return CheckStatus::SkippedCap;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

std::string CheckRecord::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return "";
}

std::optional<Caps> profile(const std::string& name) {
  if (name == "desk") return Caps{2, 3, 8};
  if (name == "extended") return Caps{3, 4, 17};
  return std::nullopt;
}

size_t SuiteReport::count(CheckStatus s) const {
  return std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"weyl",    "relations",      "derivations", "greatidentity", "commute",
                                                 "inner",   "orthonormality", "pbw",         "schur",         "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

RationalFunction qp(int k) { return RationalFunction::q_pow(k); }
RationalFunction qi(int m) { return RationalFunction(q_int_signed(m)); }
RationalFunction qfact(int m) { return RationalFunction(q_fact(m)); }
RationalFunction one_minus_qm(int k) { return RationalFunction(1) - qp(-k); }

// ---------------------------------------------------------------- names

std::string root_name(int k, Sign s, int i) {
  std::string a = "a" + std::to_string(i);
  if (k == 0) return "E(" + a + ")";
  std::string d = k == 1 ? "d" : std::to_string(k) + "d";
  return "E(" + d + (s == Sign::Plus ? "+" : "-") + a + ")";
}
std::string div_name(const std::string& x, int m) { return m == 1 ? x : x + "^(" + std::to_string(m) + ")"; }
std::string imag_name(int k, int i) { return "E(" + std::to_string(k) + "d," + std::to_string(i) + ")"; }
std::string psi_name(int k, int i) { return "psi~(" + std::to_string(k) + "," + std::to_string(i) + ")"; }
std::string pt_name(int k, int i) { return "P~(" + std::to_string(k) + "," + std::to_string(i) + ")"; }
std::string rf(const RationalFunction& x) { return x.to_string(); }

std::string pair_kind(const CartanDatum& c, int i, int j) {
  if (i == j) return "same";
  return c.a(i, j) == 0 ? "orthogonal" : "adjacent";
}

std::string monomial_name(const PtMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [ki, e] : m) {
    if (!s.empty()) s += "*";
    s += pt_name(ki.first, ki.second);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- plan

struct Task {
  CheckRecord rec;
  int height = 0;
  std::function<void(CheckRecord&)> run;
};

struct Plan {
  const std::string suite;
  const Caps& caps;
  const SuiteOptions& opt;
  std::vector<Task> tasks;

  void add(const std::string& anchor, Params params, int height, std::string lhs, std::string rhs,
           std::function<void(CheckRecord&)> run) {
    Task t;
    t.rec.anchor = anchor;
    std::string id = suite + "/" + anchor + "[";
    for (size_t k = 0; k < params.size(); ++k) id += (k ? "," : "") + params[k].first + "=" + params[k].second;
    t.rec.id = id + "]";
    t.rec.params = std::move(params);
    t.rec.lhs = std::move(lhs);
    t.rec.rhs = std::move(rhs);
    if (opt.select && !opt.select(t.rec)) return;
    t.height = height;
    t.run = std::move(run);
    tasks.push_back(std::move(t));
  }
};

Params P(std::initializer_list<std::pair<std::string, int>> kv) {
  Params p;
  for (const auto& [k, v] : kv) p.emplace_back(k, std::to_string(v));
  return p;
}

void set_equal(CheckRecord& r, const UElem& a, const UElem& b) {
  UElem d = a - b;
  bool z = d.is_zero();
  r.status = z ? CheckStatus::Pass : CheckStatus::Fail;
  r.value = z ? "0" : "nonzero difference (" + std::to_string(d.dual().nonzeros()) + " dual entries)";
}

void set_zero(CheckRecord& r, const UElem& a) { set_equal(r, a, UElem()); }

void set_value(CheckRecord& r, const RationalFunction& got, const RationalFunction& want) {
  r.value = rf(got);
  r.status = got == want ? CheckStatus::Pass : CheckStatus::Fail;
}

// Pass when got is in A with the given limit at q = infinity.
void set_limit(CheckRecord& r, const RationalFunction& got, const mpq_class& want) {
  r.value = rf(got);
  if (!got.in_A()) {
    r.limit = "not in A";
    r.status = CheckStatus::Fail;
    return;
  }
  mpq_class l = got.limit_at_infinity();
  r.limit = l.get_str();
  r.status = l == want ? CheckStatus::Pass : CheckStatus::Fail;
}

void set_bool(CheckRecord& r, bool ok, const std::string& value) {
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.value = value;
}

std::vector<CheckRecord> execute(std::vector<Task>& tasks, const Caps& caps, int threads) {
  std::vector<CheckRecord> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      Task& t = tasks[k];
      CheckRecord r = t.rec;
      if (t.height > caps.max_height) {
        r.status = CheckStatus::SkippedCap;
        r.value = "height " + std::to_string(t.height) + " above cap " + std::to_string(caps.max_height);
      } else {
        try {
          t.run(r);
        } catch (const std::domain_error& e) {
          r.status = CheckStatus::SkippedCap;
          r.value = std::string("unsupported: ") + e.what();
        } catch (const std::exception& e) {
          r.status = CheckStatus::Fail;
          r.value = std::string("error: ") + e.what();
        }
      }
      out[k] = std::move(r);
    }
  };
  int nt = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < nt; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

// Every nonnegative weight of n with 1 <= height <= h, by height then lexicographically.
std::vector<Weight> weights_upto(int n, int h) {
  std::vector<Weight> out;
  for (int t = 1; t <= h; ++t) {
    std::vector<int> cur(n + 1, 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
      if (k == n) {
        cur[k] = left;
        out.emplace_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[k] = v;
        self(self, k + 1, left - v);
      }
    };
    rec(rec, 0, t);
  }
  return out;
}

// Monomials in the P~_{k,i} of total degree m over colors 1..n.
std::vector<PtMonomial> pt_monomials(int n, int m) {
  std::vector<PtMonomial> out;
  for (const Partition& p : partitions_of(m)) {
    // distribute the parts over colors, keeping each color's parts a partition
    std::vector<int> parts = p.parts;
    PtMonomial cur;
    auto rec = [&](auto&& self, size_t k, int min_color) -> void {
      if (k == parts.size()) {
        out.push_back(cur);
        return;
      }
      int start = (k > 0 && parts[k] == parts[k - 1]) ? min_color : 1;
      for (int i = start; i <= n; ++i) {
        cur[{parts[k], i}] += 1;
        self(self, k + 1, i);
        if (--cur[{parts[k], i}] == 0) cur.erase({parts[k], i});
      }
    };
    rec(rec, 0, 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UElem pt_product(RootVectorTable& t, const PtMonomial& m) {
  UElem acc = UElem::one(t.datum());
  for (const auto& [ki, e] : m)
    for (int r = 0; r < e; ++r) acc = acc * t.P_tilde(ki.first, ki.second);
  return acc;
}

// Shared per-rank state for one suite run.
struct Context {
  CartanDatum c;
  RootVectorTable t;
  Context(int n, int k_max) : c(n), t(c, k_max) {}
  int ht(const Weight& w) const { return w.height(); }
  Weight d(int k) const { return k * c.delta(); }
  Weight a(int i) const { return c.alpha(i); }
  Weight root(int k, Sign s, int i) const { return s == Sign::Plus ? d(k) + a(i) : d(k) - a(i); }
};

// ---------------------------------------------------------------- weyl

void weyl_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  int n = c.rank();
  auto t = AffineWeylElement::t_two_rho(c);
  ReducedWord w = t_two_rho_word(c);
  std::string word;
  for (int l : w.letters) word += (word.empty() ? "" : " ") + std::to_string(l);

  pl.add("translation-word-reduced", P({{"n", n}}), 0, "length of the word for t_{2rho}", "length(t_{2rho})",
         [&c, t, w, word](CheckRecord& r) {
           bool ok = w.evaluate(c) == t && static_cast<int>(w.letters.size()) == t.length();
           set_bool(r, ok, word);
         });
  pl.add("translation-length-inversions", P({{"n", n}}), 0, "length(t_{2rho})",
         "#{positive real roots sent negative}", [&c, t](CheckRecord& r) {
           int bound = 4 * c.rank() + 4, inv = 0;
           for (const Weight& a : c.finite_positive_roots())
             for (int k = 0; k <= bound; ++k) {
               if (is_negative_real(c, t.act(k * c.delta() + a))) ++inv;
               if (k >= 1 && is_negative_real(c, t.act(k * c.delta() - a))) ++inv;
             }
           // 2 rho paired with each positive coroot, summed
           int expect = 0;
           for (const Weight& a : c.finite_positive_roots()) expect += 2 * a.height();
           set_bool(r, t.length() == inv && inv == expect, std::to_string(inv));
         });

  int periods = pl.opt.periods;
  pl.add("beta-sequence-no-repeat", P({{"n", n}, {"periods", periods}}), 0, "beta_k, -periods*N < k <= periods*N",
         "pairwise distinct positive real roots", [&c, periods](CheckRecord& r) {
           RootOrder ord(c, 1);
           int N = ord.period();
           std::set<AffineRoot> seen;
           bool ok = true;
           for (int k = -periods * N + 1; k <= periods * N; ++k) {
             Weight b = ord.beta_vector(k);
             if (!is_positive_real(c, b) || !seen.insert(classify_real(c, b)).second) ok = false;
           }
           set_bool(r, ok, std::to_string(seen.size()) + " distinct roots");
         });
  pl.add("beta-sequence-enumerates-roots", P({{"n", n}, {"periods", periods}}), 0,
         "{k : k d + a among beta_{<=0}}, {k : k d - a among beta_{>0}}",
         "[0, 2 periods ht(a)) and [1, 2 periods ht(a)] for each finite a", [&c, periods](CheckRecord& r) {
           RootOrder ord(c, 1);
           int N = ord.period();
           std::map<Weight, std::set<int>> plus, minus;
           bool ok = true;
           for (int k = -periods * N + 1; k <= periods * N; ++k) {
             AffineRoot b = classify_real(c, ord.beta_vector(k));
             bool is_plus = b.kind == RootKind::RealPlus;
             if (is_plus != (k <= 0)) ok = false;
             (is_plus ? plus : minus)[b.alpha].insert(b.k);
           }
           for (const Weight& a : c.finite_positive_roots()) {
             int m = 2 * periods * a.height();
             std::set<int> ep, em;
             for (int k = 0; k < m; ++k) ep.insert(k);
             for (int k = 1; k <= m; ++k) em.insert(k);
             if (plus[a] != ep || minus[a] != em) ok = false;
           }
           set_bool(r, ok, ok ? "complete" : "mismatch");
         });
}

// ---------------------------------------------------------------- relations

void relation_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), K = pl.caps.max_delta;
  const std::vector<Sign> signs = {Sign::Plus, Sign::Minus};
  auto sgn = [](Sign s) { return s == Sign::Plus ? 1 : -1; };

  for (int i = 1; i <= n; ++i)
    for (Sign s : signs)
      for (int k = (s == Sign::Plus ? 0 : 1); k <= K; ++k) {
        std::string e = root_name(k, s, i);
        pl.add("real-root-vector-norm", P({{"n", n}, {"sign", sgn(s)}, {"i", i}, {"k", k}}), cx.ht(cx.root(k, s, i)),
               "(" + e + ", " + e + ")", rf(one_minus_qm(2).inverse()), [&t, k, s, i](CheckRecord& r) {
                 const UElem& x = t.real(k, s, i);
                 set_value(r, inner(x, x), one_minus_qm(2).inverse());
                 if (r.status == CheckStatus::Pass && !in_lattice(x)) set_bool(r, false, r.value + "; not in lattice");
               });
      }

  for (int k = 1; k <= K; ++k)
    for (int l = k; k + l <= K; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (k == l && j <= i) continue;
          pl.add("imaginary-vectors-commute", P({{"n", n}, {"k", k}, {"l", l}, {"i", i}, {"j", j}}),
                 cx.ht(cx.d(k + l)), "[" + imag_name(k, i) + ", " + imag_name(l, j) + "]", "0",
                 [&t, k, l, i, j](CheckRecord& r) { set_zero(r, commutator(t.imag(k, i), t.imag(l, j))); });
        }

  for (Sign s : signs)
    for (int k = 1; k <= K; ++k)
      for (int l = (s == Sign::Plus ? 0 : 1); k + l <= K; ++l)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            RationalFunction co =
                RationalFunction(sgn(s) * (k % 2 ? c.o(i) * c.o(j) : 1)) * qi(k * c.a(i, j)) / RationalFunction(k);
            pl.add("imaginary-real-bracket", P({{"n", n}, {"sign", sgn(s)}, {"k", k}, {"l", l}, {"i", i}, {"j", j}}),
                   cx.ht(cx.root(k + l, s, j)), "[" + imag_name(k, i) + ", " + root_name(l, s, j) + "]",
                   "(" + rf(co) + ") " + root_name(k + l, s, j), [&t, k, l, i, j, s, co](CheckRecord& r) {
                     set_equal(r, commutator(t.imag(k, i), t.real(l, s, j)), co * t.real(k + l, s, j));
                   });
          }

  // E_{(k+1)d±a_i} E_{l d±a_j} - q^{±a_ij} E_{l d±a_j} E_{(k+1)d±a_i}
  //   = o(i)o(j) (q^{±a_ij} E_{k d±a_i} E_{(l+1)d±a_j} - E_{(l+1)d±a_j} E_{k d±a_i})
  for (Sign s : signs) {
    int lo = s == Sign::Plus ? 0 : 1;
    for (int k = lo; k <= K; ++k)
      for (int l = lo; k + l <= K; ++l)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            int a = sgn(s) * c.a(i, j);
            int oo = c.o(i) * c.o(j);
            std::string qa = "q^" + std::to_string(a);
            std::string lhs = root_name(k + 1, s, i) + root_name(l, s, j) + " - " + qa + " " + root_name(l, s, j) +
                              root_name(k + 1, s, i);
            std::string rhs = std::string(oo < 0 ? "-" : "") + "(" + qa + " " + root_name(k, s, i) +
                              root_name(l + 1, s, j) + " - " + root_name(l + 1, s, j) + root_name(k, s, i) + ")";
            pl.add("real-vectors-exchange", P({{"n", n}, {"sign", sgn(s)}, {"k", k}, {"l", l}, {"i", i}, {"j", j}}),
                   cx.ht(cx.root(k + 1, s, i) + cx.root(l, s, j)), lhs, rhs, [&t, k, l, i, j, s, a, oo](CheckRecord& r) {
                     const UElem &x1 = t.real(k + 1, s, i), &y0 = t.real(l, s, j);
                     const UElem &x0 = t.real(k, s, i), &y1 = t.real(l + 1, s, j);
                     UElem left = x1 * y0 - qp(a) * (y0 * x1);
                     UElem right = qp(a) * (x0 * y1) - y1 * x0;
                     set_equal(r, left, RationalFunction(oo) * right);
                   });
          }
  }

  for (int k = 1; k <= K; ++k)
    for (int l = 1; k + l <= K; ++l)
      for (int i = 1; i <= n; ++i)
        pl.add("psi-from-real-pair", P({{"n", n}, {"k", k}, {"l", l}, {"i", i}}), cx.ht(cx.d(k + l)),
               psi_name(k + l, i),
               root_name(k, Sign::Minus, i) + root_name(l, Sign::Plus, i) + " - q^-2 " + root_name(l, Sign::Plus, i) +
                   root_name(k, Sign::Minus, i),
               [&t, k, l, i](CheckRecord& r) {
                 set_equal(r, t.psi_tilde(k + l, i), qcomm(t.real(k, Sign::Minus, i), t.real(l, Sign::Plus, i), -2));
               });
}

// ---------------------------------------------------------------- derivations

void derivation_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), K = pl.caps.max_delta;
  RationalFunction pre = qp(1) * one_minus_qm(2) * one_minus_qm(4);
  auto em = [&t](int k, int i) -> const UElem& { return t.real(k, Sign::Minus, i); };

  for (int i = 1; i <= n; ++i) {
    pl.add("right-derivation-first-minus-root", P({{"n", n}, {"i", i}}), cx.ht(cx.root(1, Sign::Minus, i)),
           "r_" + std::to_string(i) + " " + root_name(1, Sign::Minus, i), "0",
           [&t, i](CheckRecord& r) { set_zero(r, t.real(1, Sign::Minus, i).r(i)); });
    pl.add("right-derivation-first-imaginary", P({{"n", n}, {"i", i}}), cx.ht(cx.d(1)),
           "r_" + std::to_string(i) + " " + imag_name(1, i), "(1-q^-4) " + root_name(1, Sign::Minus, i),
           [&t, i](CheckRecord& r) { set_equal(r, t.imag(1, i).r(i), one_minus_qm(4) * t.real(1, Sign::Minus, i)); });
    for (int m = 1; 2 * m <= K; ++m) {
      std::string rhs = "q(1-q^-2)(1-q^-4)(sum_{s<=" + std::to_string(m - 2) + "} q^{2s} E((2m-s-1)d-a)E((s+1)d-a) + q^" +
                        std::to_string(2 * m - 3) + " " + div_name(root_name(m, Sign::Minus, i), 2) + ")";
      pl.add("right-derivation-even-minus-root", P({{"n", n}, {"i", i}, {"m", m}}),
             cx.ht(cx.root(2 * m, Sign::Minus, i)), "r_" + std::to_string(i) + " " + root_name(2 * m, Sign::Minus, i),
             rhs, [&t, em, i, m, pre](CheckRecord& r) {
               UElem acc = qp(2 * m - 3) * divided_power(em(m, i), 2);
               for (int s = 0; s <= m - 2; ++s) acc += qp(2 * s) * (em(2 * m - s - 1, i) * em(s + 1, i));
               set_equal(r, em(2 * m, i).r(i), pre * acc);
             });
    }
    for (int m = 1; 2 * m + 1 <= K; ++m) {
      std::string rhs = "q(1-q^-2)(1-q^-4) sum_{s<=" + std::to_string(m - 1) + "} q^{2s} E((2m-s)d-a)E((s+1)d-a)";
      pl.add("right-derivation-odd-minus-root", P({{"n", n}, {"i", i}, {"m", m}}),
             cx.ht(cx.root(2 * m + 1, Sign::Minus, i)),
             "r_" + std::to_string(i) + " " + root_name(2 * m + 1, Sign::Minus, i), rhs,
             [&t, em, i, m, pre](CheckRecord& r) {
               UElem acc;
               for (int s = 0; s <= m - 1; ++s) acc += qp(2 * s) * (em(2 * m - s, i) * em(s + 1, i));
               set_equal(r, em(2 * m + 1, i).r(i), pre * acc);
             });
    }
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::string si = std::to_string(i);
      if (c.a(i, j) == -1) {
        for (int k = 1; k <= K; ++k) {
          Params p = P({{"n", n}, {"i", i}, {"j", j}, {"k", k}});
          pl.add("left-derivation-adjacent-minus-root", p, cx.ht(cx.root(k, Sign::Minus, j)),
                 "_r" + si + " " + root_name(k, Sign::Minus, j), "0",
                 [&t, i, j, k](CheckRecord& r) { set_zero(r, t.real(k, Sign::Minus, j).ir(i)); });
          pl.add("left-derivation-adjacent-psi", p, cx.ht(cx.d(k)), "_r" + si + " " + psi_name(k, j), "0",
                 [&t, i, j, k](CheckRecord& r) { set_zero(r, t.psi_tilde(k, j).ir(i)); });
          pl.add("left-derivation-adjacent-imaginary", p, cx.ht(cx.d(k)), "_r" + si + " " + imag_name(k, j), "0",
                 [&t, i, j, k](CheckRecord& r) { set_zero(r, t.imag(k, j).ir(i)); });
          pl.add("right-derivation-adjacent-imaginary", p, cx.ht(cx.d(k)),
                 "r_" + si + " (k/[k]) " + imag_name(k, j),
                 std::string(k % 2 ? "" : "-") + "q^-1(1-q^-2) " + root_name(k, Sign::Minus, i),
                 [&t, &c, i, j, k](CheckRecord& r) {
                   // -(o(i)o(j))^k: the o-factor of the imaginary-real bracket
                   int sign = (k % 2 ? c.o(i) * c.o(j) : 1);
                   UElem x = (RationalFunction(k) / qi(k)) * t.imag(k, j);
                   set_equal(r, x.r(i), RationalFunction(-sign) * (qp(-1) * one_minus_qm(2)) * t.real(k, Sign::Minus, i));
                 });
        }
      } else if (c.a(i, j) == 0) {
        for (int k = 1; k <= K; ++k) {
          Params p = P({{"n", n}, {"i", i}, {"j", j}, {"k", k}});
          pl.add("right-derivation-orthogonal-minus-root", p, cx.ht(cx.root(k, Sign::Minus, j)),
                 "r_" + si + " " + root_name(k, Sign::Minus, j), "0",
                 [&t, i, j, k](CheckRecord& r) { set_zero(r, t.real(k, Sign::Minus, j).r(i)); });
          pl.add("right-derivation-orthogonal-imaginary", p, cx.ht(cx.d(k)), "r_" + si + " " + imag_name(k, j), "0",
                 [&t, i, j, k](CheckRecord& r) { set_zero(r, t.imag(k, j).r(i)); });
        }
      }
    }
}

// ---------------------------------------------------------------- great identity

void great_identity_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), R = pl.caps.max_delta;
  for (int i = 1; i <= n; ++i)
    for (int r = 1; r <= R; ++r)
      for (int s = 1; s <= R; ++s) {
        Weight w = s * c.delta() + (r - s) * c.alpha(i);
        std::string a = div_name(root_name(0, Sign::Plus, i), r), b = div_name(root_name(1, Sign::Minus, i), s);
        Params p = P({{"n", n}, {"i", i}, {"r", r}, {"s", s}});
        pl.add("divided-powers-reorder", p, cx.ht(w), a + " " + b,
               "sum_t sum_{m+k=t} q^{2rs-tr-ts+t} D-_m(xi^(s-t)) bD_k(xi^(r-t))", [&t, &c, i, r, s](CheckRecord& rec) {
                 UElem lhs = divided_power(UElem::generator(c, i), r) * divided_power(t.real(1, Sign::Minus, i), s);
                 UElem rhs;
                 for (int u = 0; u <= std::min(r, s); ++u)
                   for (int m = 0; m <= u; ++m)
                     rhs += qp(2 * r * s - u * r - u * s + u) *
                            (t.D(Sign::Minus, m, i, s - u) * t.bold_D(u - m, i, r - u));
                 set_equal(rec, lhs, rhs);
               });
        pl.add("divided-powers-reorder-opposite", p, cx.ht(w), b + " " + a,
               "sum_t sum_{m+k=t} q^{rt+st-2sr+t} bD~_k(xi^(r-t)) D-_m(xi^(s-t))", [&t, &c, i, r, s](CheckRecord& rec) {
                 UElem lhs = divided_power(t.real(1, Sign::Minus, i), s) * divided_power(UElem::generator(c, i), r);
                 UElem rhs;
                 for (int u = 0; u <= std::min(r, s); ++u)
                   for (int m = 0; m <= u; ++m)
                     rhs += qp(r * u + s * u - 2 * s * r + u) *
                            (t.bold_D_tilde(u - m, i, r - u) * t.D(Sign::Minus, m, i, s - u));
                 set_equal(rec, lhs, rhs);
               });
      }

  // Coefficient of E_{kd+a}^(r) when D+_{kr}(xi^(r)) is written on the
  // ordered products E_a^(s0) E_{d+a}^(s1) ... with sum s = r, sum t s_t = kr.
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= std::max(1, R - 1); ++k)
      for (int r = 1; r <= R; ++r) {
        RationalFunction want = qp(k * r * (r - 1));
        pl.add("d-operator-leading-coefficient", P({{"n", n}, {"i", i}, {"k", k}, {"r", r}}),
               cx.ht(cx.d(k * r) + r * c.alpha(i)),
               "coefficient of " + div_name(root_name(k, Sign::Plus, i), r) + " in D+_" + std::to_string(k * r) +
                   "(xi^(" + std::to_string(r) + "))",
               rf(want), [&t, &c, i, k, r, want](CheckRecord& rec) {
                 std::vector<std::vector<int>> shapes;  // s_0..s_{kr}
                 std::vector<int> cur(k * r + 1, 0);
                 auto gen = [&](auto&& self, int tt, int left, int deg) -> void {
                   if (tt < 0) {
                     if (left == 0 && deg == 0) shapes.push_back(cur);
                     return;
                   }
                   for (int m = 0; m <= left && m * tt <= deg; ++m) {
                     cur[tt] = m;
                     self(self, tt - 1, left - m, deg - m * tt);
                   }
                   cur[tt] = 0;
                 };
                 gen(gen, k * r, r, k * r);
                 std::sort(shapes.begin(), shapes.end());
                 std::vector<UElem> basis;
                 size_t target = 0;
                 for (size_t b = 0; b < shapes.size(); ++b) {
                   UElem acc = UElem::one(c);
                   for (int tt = 0; tt <= k * r; ++tt)
                     if (shapes[b][tt]) acc = acc * divided_power(t.real(tt, Sign::Plus, i), shapes[b][tt]);
                   if (shapes[b][k] == r) target = b;
                   basis.push_back(acc);
                 }
                 auto co = coords(t.D(Sign::Plus, k * r, i, r), basis);
                 set_value(rec, co[target], want);
               });
      }
}

// ---------------------------------------------------------------- commute

// o(i)^s o(j)^s [a][a+1]...[a+s-1] / [s]!
RationalFunction commute_coeff(const CartanDatum& c, int i, int j, int s) {
  RationalFunction co(s % 2 ? c.o(i) * c.o(j) : 1);
  for (int u = 0; u < s; ++u) co = co * qi(c.a(j, i) + u);
  return co / qfact(s);
}

void commute_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), K = pl.caps.max_delta;
  const int R = 2, S = 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::string kind = pair_kind(c, i, j);
      for (int k = 1; k <= K; ++k)
        for (int r = 0; r <= R; ++r) {
          Params p = {{"n", std::to_string(n)}, {"pair", kind}, {"i", std::to_string(i)}, {"j", std::to_string(j)},
                      {"k", std::to_string(k)}, {"r", std::to_string(r)}};
          pl.add("tilde-p-past-plus-root", p, cx.ht(cx.d(k) + cx.root(r, Sign::Plus, i)),
                 pt_name(k, j) + root_name(r, Sign::Plus, i),
                 "sum_s c_s E((r+s)d+a" + std::to_string(i) + ") " + pt_name(k, j) + "[k-s]",
                 [&t, &c, i, j, k, r](CheckRecord& rec) {
                   UElem rhs;
                   for (int s = 0; s <= k; ++s) {
                     RationalFunction co = commute_coeff(c, i, j, s);
                     if (!co.is_zero()) rhs += co * (t.real(r + s, Sign::Plus, i) * t.P_tilde(k - s, j));
                   }
                   set_equal(rec, t.P_tilde(k, j) * t.real(r, Sign::Plus, i), rhs);
                 });
          pl.add("minus-root-past-tilde-p", p, cx.ht(cx.d(k) + cx.root(r + 1, Sign::Minus, i)),
                 root_name(r + 1, Sign::Minus, i) + pt_name(k, j),
                 "sum_s c_s " + pt_name(k, j) + "[k-s] E((r+s+1)d-a" + std::to_string(i) + ")",
                 [&t, &c, i, j, k, r](CheckRecord& rec) {
                   UElem rhs;
                   for (int s = 0; s <= k; ++s) {
                     RationalFunction co = commute_coeff(c, i, j, s);
                     if (!co.is_zero()) rhs += co * (t.P_tilde(k - s, j) * t.real(r + s + 1, Sign::Minus, i));
                   }
                   set_equal(rec, t.real(r + 1, Sign::Minus, i) * t.P_tilde(k, j), rhs);
                 });
          if (i == j) continue;
          for (int s = 1; s <= S; ++s) {
            Params ps = p;
            ps.emplace_back("s", std::to_string(s));
            Weight w = cx.d(k) + s * cx.root(r, Sign::Plus, i);
            std::string lhs = pt_name(k, j) + div_name(root_name(r, Sign::Plus, i), s);
            if (c.a(i, j) == 0) {
              pl.add("tilde-p-commutes-orthogonal", ps, cx.ht(w), lhs,
                     div_name(root_name(r, Sign::Plus, i), s) + pt_name(k, j), [&t, i, j, k, r, s](CheckRecord& rec) {
                       UElem e = divided_power(t.real(r, Sign::Plus, i), s);
                       set_equal(rec, t.P_tilde(k, j) * e, e * t.P_tilde(k, j));
                     });
            } else if (c.a(j, i) == -1) {
              pl.add("tilde-p-past-divided-plus-root", ps, cx.ht(w), lhs,
                     "sum_m q^{m(s-m)} E(rd+a)^(s-m) E((r+1)d+a)^(m) " + pt_name(k, j) + "[k-m]",
                     [&t, i, j, k, r, s](CheckRecord& rec) {
                       UElem rhs;
                       for (int m = 0; m <= std::min(k, s); ++m)
                         rhs += qp(m * (s - m)) * (divided_power(t.real(r, Sign::Plus, i), s - m) *
                                                   divided_power(t.real(r + 1, Sign::Plus, i), m) * t.P_tilde(k - m, j));
                       set_equal(rec, t.P_tilde(k, j) * divided_power(t.real(r, Sign::Plus, i), s), rhs);
                     });
            }
          }
        }
    }
}

// ---------------------------------------------------------------- inner

void serre_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  int n = c.rank(), H = pl.caps.max_height;
  const int serre_height = std::min(H, 6);

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      FreeElement s = serre_element(c, i, j);
      pl.add("serre-relation-vanishes", P({{"n", n}, {"i", i}, {"j", j}}), s.height(), s.to_string(), "0",
             [&c, s](CheckRecord& r) {
               bool z = is_zero_in_uplus(c, s);
               set_bool(r, z && is_zero_by_derivations(c, s), z ? "0" : "nonzero");
             });
      // a S b for pseudo-random words a, b
      for (int trial = 0; trial < 3; ++trial) {
        std::mt19937 gen(1000 * n + 100 * i + 10 * j + trial);
        int room = serre_height - s.height();
        if (room <= 0) break;
        int la = gen() % (room + 1), lb = gen() % (room - la + 1);
        Word a, b;
        for (int k = 0; k < la; ++k) a.push_back(gen() % c.nodes());
        for (int k = 0; k < lb; ++k) b.push_back(gen() % c.nodes());
        FreeElement x = FreeElement::monomial(a) * s * FreeElement::monomial(b);
        pl.add("serre-ideal-element-vanishes", P({{"n", n}, {"i", i}, {"j", j}, {"trial", trial}}), x.height(),
               a.to_string() + " * S(" + std::to_string(i) + "," + std::to_string(j) + ") * " + b.to_string(), "0",
               [&c, x](CheckRecord& r) {
                 bool z = is_zero_in_uplus(c, x);
                 set_bool(r, z, z ? "0" : "nonzero");
               });
      }
    }

  // Random combinations of words; the witness word comes from the word-level
  // pairing recursion, independent of the shuffle-based zero test.
  for (const Weight& nu : weights_upto(n, serre_height)) {
    if (nu.height() < 2) continue;
    auto sp = WordSpace::get(nu);
    uint32_t seed = 17;
    for (int v : nu.d) seed = seed * 31 + v;
    std::mt19937 gen(seed);
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<std::pair<Word, RationalFunction>> terms;
      for (int k = 0; k < 4; ++k)
        terms.emplace_back(sp->word(gen() % sp->size()), RationalFunction(static_cast<int>(gen() % 7) - 3));
      FreeElement x = FreeElement::from_terms(terms);
      if (x.is_zero()) continue;
      pl.add("non-ideal-element-nonzero", {{"n", std::to_string(n)}, {"weight", nu.to_string()}}, nu.height(),
             x.to_string(), "nonzero", [&c, x, sp](CheckRecord& r) {
               PairingCache pc(c);
               std::string witness;
               for (size_t w = 0; w < sp->size() && witness.empty(); ++w) {
                 RationalFunction acc(0);
                 for (const auto& [u, co] : x.expanded()) acc += co * pc.get(sp->word(w), u);
                 if (!acc.is_zero()) witness = sp->word(w).to_string();
               }
               bool z = is_zero_in_uplus(c, x);
               if (witness.empty()) {
                 set_bool(r, z, "in the ideal");
               } else {
                 set_bool(r, !z, "pairs nonzero with " + witness);
               }
             });
      break;
    }
  }

  // Word-space Gram matrices grow fast, so this runs to height 10 - 2n at most.
  for (const Weight& nu : weights_upto(n, std::min(H, 10 - 2 * n)))
    pl.add("gram-rank-equals-pbw-count", {{"n", std::to_string(n)}, {"weight", nu.to_string()}}, nu.height(),
           "rank of the Gram matrix on words", "PBW count", [&c, nu](CheckRecord& r) {
             GramRank g = gram_rank(c, nu);
             uint64_t want = dim_oracle(c, nu);
             set_bool(r, g.exact() && g.lower == want,
                      std::to_string(g.lower) + (g.exact() ? "" : ".." + std::to_string(g.upper)) + " of " +
                          std::to_string(want));
           });
}

void psi_pairing_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), K = pl.caps.max_delta;
  RationalFunction u = one_minus_qm(2);
  for (int k = 1; k <= K; ++k)
    for (int i = 1; i <= n; ++i) {
      int h = cx.ht(cx.d(k));
      RationalFunction w1 = qp(2 * k - 2) * one_minus_qm(4) / (u * u);
      pl.add("psi-norm", P({{"n", n}, {"k", k}, {"i", i}}), h, "(" + psi_name(k, i) + ", " + psi_name(k, i) + ")",
             rf(w1), [&t, k, i, w1](CheckRecord& r) { set_value(r, inner(t.psi_tilde(k, i), t.psi_tilde(k, i)), w1); });
      RationalFunction w4 = qp(k - 1) * one_minus_qm(2 * k + 2) / (u * u);
      pl.add("psi-against-tilde-p", P({{"n", n}, {"k", k}, {"i", i}}), h,
             "(" + psi_name(k, i) + ", " + pt_name(k, i) + ")", rf(w4),
             [&t, k, i, w4](CheckRecord& r) { set_value(r, inner(t.psi_tilde(k, i), t.P_tilde(k, i)), w4); });
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        Params p = P({{"n", n}, {"k", k}, {"i", i}, {"j", j}});
        if (c.a(i, j) == -1) {
          // sign -(o(i)o(j))^k, matching the adjacent right-derivation clause
          RationalFunction w2 = RationalFunction(k % 2 ? 1 : -1) * qp(-1) / u;
          pl.add("psi-against-imaginary-adjacent", p, h, "(" + psi_name(k, i) + ", (k/[k]) " + imag_name(k, j) + ")",
                 rf(w2), [&t, k, i, j, w2](CheckRecord& r) {
                   set_value(r, inner(t.psi_tilde(k, i), (RationalFunction(k) / qi(k)) * t.imag(k, j)), w2);
                 });
        }
        if (c.a(i, j) == 0)
          pl.add("psi-orthogonal-colors", p, h, "(" + psi_name(k, i) + ", " + psi_name(k, j) + ")", "0",
                 [&t, k, i, j](CheckRecord& r) {
                   set_value(r, inner(t.psi_tilde(k, i), t.psi_tilde(k, j)), RationalFunction(0));
                 });
        pl.add("psi-against-tilde-p-other-color", p, h, "(" + psi_name(k, i) + ", " + pt_name(k, j) + ")",
               "0 mod q^-1 A", [&t, k, i, j](CheckRecord& r) {
                 set_limit(r, inner(t.psi_tilde(k, i), t.P_tilde(k, j)), 0);
               });
      }
    }
}

// ---------------------------------------------------------------- orthonormality

void orthonormality_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), K = pl.caps.max_delta;
  for (int k = 1; k <= K; ++k)
    for (int kp = 1; kp <= K; ++kp)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          int want = (k == kp && i == j) ? 1 : 0;
          pl.add("tilde-p-limit-orthonormal", P({{"n", n}, {"k", k}, {"kp", kp}, {"i", i}, {"j", j}}),
                 cx.ht(cx.d(std::max(k, kp))), "(" + pt_name(k, i) + ", " + pt_name(kp, j) + ")",
                 std::to_string(want) + " mod q^-1 A", [&t, k, kp, i, j, want](CheckRecord& r) {
                   set_limit(r, inner(t.P_tilde(k, i), t.P_tilde(kp, j)), want);
                 });
        }

  // lim (x, y) = prod_i lim (x(i), y(i)) for monomials x, y in the P~.
  if (n >= 2)
    for (int m = 2; m <= K; ++m) {
      auto mons = pt_monomials(n, m);
      for (size_t a = 0; a < mons.size(); ++a)
        for (size_t b = a; b < mons.size(); ++b) {
          const PtMonomial &x = mons[a], &y = mons[b];
          pl.add("limit-form-factorizes-over-colors",
                 {{"n", std::to_string(n)}, {"x", monomial_name(x)}, {"y", monomial_name(y)}}, cx.ht(cx.d(m)),
                 "lim (" + monomial_name(x) + ", " + monomial_name(y) + ")", "prod_i lim (x(i), y(i))",
                 [&t, &c, x, y](CheckRecord& r) {
                   RationalFunction v = inner(pt_product(t, x), pt_product(t, y));
                   mpq_class want = 1;
                   for (int i = 1; i <= c.rank(); ++i) {
                     PtMonomial xi, yi;
                     for (const auto& [ki, e] : x)
                       if (ki.second == i) xi[ki] = e;
                     for (const auto& [ki, e] : y)
                       if (ki.second == i) yi[ki] = e;
                     RationalFunction f = inner(pt_product(t, xi), pt_product(t, yi));
                     if (!f.in_A()) throw std::runtime_error("color factor not in A");
                     want *= f.limit_at_infinity();
                   }
                   r.rhs = want.get_str();
                   set_limit(r, v, want);
                 });
        }
    }

  // (P~_{k,i}, y z) = sum_s (P~_{s,i}, y)(P~_{k-s,i}, z) for y, z in U+(0).
  for (int k = 2; k <= K; ++k)
    for (int i = 1; i <= n; ++i)
      for (int a = 1; a < k; ++a)
        for (const PtMonomial& y : pt_monomials(n, a))
          for (const PtMonomial& z : pt_monomials(n, k - a)) {
            pl.add("tilde-p-coproduct-shape",
                   {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"i", std::to_string(i)},
                    {"y", monomial_name(y)}, {"z", monomial_name(z)}},
                   cx.ht(cx.d(k)), "(" + pt_name(k, i) + ", " + monomial_name(y) + " * " + monomial_name(z) + ")",
                   "(" + pt_name(a, i) + ", y)(" + pt_name(k - a, i) + ", z)", [&t, k, i, a, y, z](CheckRecord& r) {
                     UElem yy = pt_product(t, y), zz = pt_product(t, z);
                     RationalFunction want = inner(t.P_tilde(a, i), yy) * inner(t.P_tilde(k - a, i), zz);
                     r.rhs = rf(want);
                     set_value(r, inner(t.P_tilde(k, i), yy * zz), want);
                   });
          }
}

// ---------------------------------------------------------------- pbw

void pbw_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  int n = c.rank(), H = pl.caps.max_height;
  auto basis = std::make_shared<PBWBasis>(cx.t);
  std::vector<Weight> ws = pl.opt.weight ? std::vector<Weight>{*pl.opt.weight} : weights_upto(n, H);

  for (const Weight& nu : ws) {
    Params p = {{"n", std::to_string(n)}, {"weight", nu.to_string()}};
    int h = nu.height();
    auto idx = pbw_indices(c, nu);
    bool supported = std::all_of(idx.begin(), idx.end(), [&](const PBWIndex& x) { return basis->supported(x); });
    auto guard = [supported](CheckRecord& r) {
      if (supported) return true;
      r.status = CheckStatus::SkippedCap;
      r.value = "index involves a root vector outside the constructed family";
      return false;
    };

    pl.add("pbw-index-count", p, h, "#PBW indices", "rank of the Gram matrix on words", [&c, nu, idx](CheckRecord& r) {
      GramRank g = gram_rank(c, nu);
      set_bool(r, g.exact() && g.lower == idx.size(),
               std::to_string(idx.size()) + " indices, rank " + std::to_string(g.lower));
    });
    pl.add("pbw-monomials-independent", p, h, "rank of {E_c}", "#PBW indices", [basis, idx, guard](CheckRecord& r) {
      if (!guard(r)) return;
      std::vector<UElem> es;
      for (const auto& x : idx) es.push_back(basis->E(x));
      std::vector<const DualVec*> rows;
      for (const auto& e : es) rows.push_back(&e.dual());
      size_t rk = rank_specialized(rows, 1000003, 2147483647ULL);
      set_bool(r, rk == idx.size(), std::to_string(rk));
    });
    pl.add("crystal-basis-limit-gram", p, h, "lim (B_c, B_c')", "identity", [basis, nu, guard](CheckRecord& r) {
      if (!guard(r)) return;
      OrthonormalityTable tab = basis->orthonormality_table(nu);
      std::string m;
      bool in_a = true;
      for (size_t a = 0; a < tab.limits.size(); ++a) {
        m += a ? ";" : "";
        for (size_t b = 0; b < tab.limits.size(); ++b) {
          m += b ? "," : "";
          if (tab.limits[a][b]) {
            m += tab.limits[a][b]->get_str();
          } else {
            m += "*";
            in_a = false;
          }
        }
      }
      r.limit = m;
      set_bool(r, tab.pass && in_a, std::to_string(tab.indices.size()) + "x" + std::to_string(tab.indices.size()));
    });
    pl.add("crystal-basis-in-lattice", p, h, "B_c", "in the lattice", [basis, idx, guard](CheckRecord& r) {
      if (!guard(r)) return;
      std::string bad;
      for (const auto& x : idx)
        if (!in_lattice(basis->B(x))) bad += (bad.empty() ? "" : " ") + x.to_string();
      set_bool(r, bad.empty(), bad.empty() ? "all" : "outside: " + bad);
    });
    pl.add("pbw-form-splits", p, h, "(E_c, E_c')", "(E_c0, E_c'0) prod of divided-power norms",
           [basis, idx, guard](CheckRecord& r) {
             if (!guard(r)) return;
             size_t bad = 0;
             for (const auto& x : idx)
               for (const auto& y : idx)
                 if (!basis->luinner_check(x, y)) ++bad;
             set_bool(r, bad == 0, std::to_string(idx.size() * idx.size() - bad) + " of " +
                                       std::to_string(idx.size() * idx.size()) + " pairs");
           });
    if (nu.delta_multiple() * c.delta() == nu)
      pl.add("imaginary-projection-fixes-schur", p, h, "pi0(S_c0)", "S_c0", [basis, idx, guard](CheckRecord& r) {
        if (!guard(r)) return;
        bool ok = true;
        for (const auto& x : idx) {
          if (!x.is_imaginary()) continue;
          ImaginaryElement s = S(x.imaginary_exponents());
          if (!(basis->pi0(s.materialize(basis->table())) == s)) ok = false;
        }
        set_bool(r, ok, ok ? "fixed" : "moved");
      });
  }

  // E_c E_c' has integral coordinates on the E basis.
  for (size_t a = 0; a < ws.size(); ++a)
    for (size_t b = a; b < ws.size(); ++b) {
      if (pl.opt.weight) break;
      Weight sum = ws[a] + ws[b];
      if (sum.height() > H) continue;
      Weight wa = ws[a], wb = ws[b];
      pl.add("pbw-products-integral", {{"n", std::to_string(n)}, {"left", wa.to_string()}, {"right", wb.to_string()}},
             sum.height(), "E_c E_c'", "Z[q,q^-1]-combination of E_c''", [basis, &c, wa, wb](CheckRecord& r) {
               auto bad = basis->integrality_check(wa, wb);
               if (bad) {
                 set_bool(r, false, "not integral for " + bad->first.to_string() + " " + bad->second.to_string());
                 return;
               }
               size_t pairs = pbw_indices(c, wa).size() * pbw_indices(c, wb).size();
               set_bool(r, true, std::to_string(wa == wb ? pairs : 2 * pairs) + " products");
             });
    }
}

// ---------------------------------------------------------------- schur

void schur_checks(Plan& pl, Context& cx) {
  const CartanDatum& c = cx.c;
  RootVectorTable& t = cx.t;
  int n = c.rank(), K = pl.caps.max_delta;

  for (int m = 1; m <= K; ++m)
    for (const Partition& lam : partitions_of(m))
      for (int i = 1; i <= n; ++i) {
        Params p = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"lambda", lam.to_string()}};
        int h = cx.ht(cx.d(m));
        pl.add("jacobi-trudi-matches-dual-form", p, h, "s_lambda by the h determinant",
               "h_k -> P~_k applied to the e determinant of lambda'", [&t, lam, i](CheckRecord& r) {
                 AbstractSymFn f = AbstractSymFn::schur_dual(lam);
                 bool abstract_ok = f == AbstractSymFn::schur(lam);
                 ImaginaryElement x = schur(lam, i);
                 bool ok = abstract_ok && equals_in_uplus(x.materialize(t), hom_to_U0(f, i).materialize(t));
                 set_bool(r, ok, x.to_string());
               });
        pl.add("jacobi-trudi-size-independent", p, 0, "t x t determinant, t = length", "t = length + 2",
               [lam, i](CheckRecord& r) {
                 ImaginaryElement a = schur(lam, i), b = schur(lam, i, lam.length() + 2);
                 set_bool(r, a == b, a == b ? "equal" : b.to_string());
               });
        // inner-product row against every Schur element of the same degree
        pl.add("schur-limit-row", p, h, "lim (s_lambda,i, s_mu,j) over |mu| = |lambda|, all j", "delta",
               [&t, lam, i, m, n](CheckRecord& r) {
                 UElem x = schur(lam, i).materialize(t);
                 std::string row;
                 bool ok = true;
                 for (const Partition& mu : partitions_of(m))
                   for (int j = 1; j <= n; ++j) {
                     RationalFunction v = inner(x, schur(mu, j).materialize(t));
                     row += row.empty() ? "" : ",";
                     if (!v.in_A()) {
                       row += "*";
                       ok = false;
                       continue;
                     }
                     mpq_class l = v.limit_at_infinity();
                     row += l.get_str();
                     if (l != ((mu == lam && i == j) ? 1 : 0)) ok = false;
                   }
                 r.limit = row;
                 set_bool(r, ok, schur(lam, i).to_string());
               });
      }

  for (int k = 1; k <= K; ++k)
    for (int m = 0; m + k <= K; ++m)
      for (const Partition& mu : partitions_of(m))
        for (int i = 1; i <= n; ++i) {
          Params p = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"k", std::to_string(k)},
                      {"mu", mu.to_string()}};
          pl.add("pieri-rule", p, cx.ht(cx.d(k + m)), "s_(k) s_mu", "sum of s_lambda over horizontal k-strips",
                 [&t, k, mu, i](CheckRecord& r) {
                   bool abstract_ok =
                       AbstractSymFn::schur(Partition({k})) * AbstractSymFn::schur(mu) == abstract_pieri(k, mu);
                   UElem lhs = schur(Partition({k}), i).materialize(t) * schur(mu, i).materialize(t);
                   ImaginaryElement sum;
                   for (const Partition& lam : pieri_shapes(k, mu)) sum = sum + schur(lam, i);
                   bool ok = abstract_ok && equals_in_uplus(lhs, sum.materialize(t));
                   set_bool(r, ok, std::to_string(pieri_shapes(k, mu).size()) + " shapes");
                 });
        }

  for (int k = 1; k <= K; ++k)
    for (int i = 1; i <= n; ++i) {
      Params p = P({{"n", n}, {"k", k}, {"i", i}});
      int h = cx.ht(cx.d(k));
      pl.add("tilde-p-generating-function", p, h, "P_m, P~_m for m <= k from the psi~ recursions",
             "coefficients of exp(-+ sum E(md,i) u^m / [m])",
             [&t, k, i](CheckRecord& r) { set_bool(r, generating_function_crosscheck(t, k, i), "series"); });
      pl.add("tilde-p-newton-form", p, h, pt_name(k, i), "(1/k) sum_s (s/[s]) E(sd,i) P~(k-s,i)",
             [&t, k, i](CheckRecord& r) { set_bool(r, newton_crosscheck(t, k, i), "newton"); });
    }
}

// ---------------------------------------------------------------- dispatch

using Builder = void (*)(Plan&, Context&);

std::vector<Builder> builders(const std::string& name) {
  if (name == "weyl") return {weyl_checks};
  if (name == "relations") return {relation_checks};
  if (name == "derivations") return {derivation_checks};
  if (name == "greatidentity") return {great_identity_checks};
  if (name == "commute") return {commute_checks};
  if (name == "inner") return {serre_checks, psi_pairing_checks};
  if (name == "orthonormality") return {orthonormality_checks};
  if (name == "pbw") return {pbw_checks};
  if (name == "schur") return {schur_checks};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Caps& caps, const SuiteOptions& opt) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  if (caps.rank < 1 || caps.rank > 6 || caps.max_delta < 1 || caps.max_height < 1 || caps.max_height > Word::kMax)
    throw std::invalid_argument("caps out of range");
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.caps = caps;
  std::vector<std::string> parts;
  if (name == "all") {
    for (const auto& s : suite_names())
      if (s != "all") parts.push_back(s);
  } else {
    parts.push_back(name);
  }
  std::vector<int> ranks = opt.ranks;
  if (ranks.empty())
    for (int n = 1; n <= caps.rank; ++n) ranks.push_back(n);

  for (int n : ranks) {
    // Degrees reached: k + l + 1 in relations, k r in the D operators, k + r + 2 in commute.
    int k_max = std::max(caps.max_delta * caps.max_delta, caps.max_delta + 3) + 2;
    Context cx(n, k_max);
    for (const auto& s : parts) {
      Plan pl{s, caps, opt, {}};
      // pbw needs a table whose root order window matches the height cap
      std::unique_ptr<Context> own;
      Context* use = &cx;
      if (s == "pbw") {
        own = std::make_unique<Context>(n, caps.max_height / (n + 1) + 1);
        use = own.get();
      }
      for (Builder b : builders(s)) b(pl, *use);
      auto recs = execute(pl.tasks, caps, opt.threads);
      rep.checks.insert(rep.checks.end(), recs.begin(), recs.end());
    }
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qaffine
