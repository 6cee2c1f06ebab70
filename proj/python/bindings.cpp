#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <set>

#include "qaffine/form.hpp"
#include "qaffine/report.hpp"
#include "qaffine/rootvec.hpp"
#include "qaffine/suites.hpp"
#include "qaffine/weyl.hpp"

namespace py = pybind11;
using namespace qaffine;

namespace {

// Owns the datum and the root vector table; elements keep their algebra alive
// because UElem holds a raw pointer to the datum.
struct Algebra {
  std::unique_ptr<CartanDatum> c;
  std::unique_ptr<RootVectorTable> t;
  Algebra(int n, int k_max) : c(std::make_unique<CartanDatum>(n)), t(std::make_unique<RootVectorTable>(*c, k_max)) {}
};

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw py::value_error("sign must be '+' or '-'");
}

py::object to_fraction(const mpq_class& v) {
  return py::module_::import("fractions").attr("Fraction")(v.get_str());
}

}  // namespace

PYBIND11_MODULE(_qaffine, m) {
  m.doc() = "Root vectors, PBW bases and identity checks in the positive part of quantum affine sl(n+1)";

  py::class_<RationalFunction>(m, "RationalFunction")
      .def(py::init([](long v) { return RationalFunction(v); }))
      .def(py::init([](const std::string& s) { return RationalFunction::parse(s); }))
      .def_static("q_pow", &RationalFunction::q_pow)
      .def("is_zero", &RationalFunction::is_zero)
      .def("inverse", &RationalFunction::inverse)
      .def("bar", &RationalFunction::bar)
      .def("limit_at_infinity", [](const RationalFunction& r) { return to_fraction(r.limit_at_infinity()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& r) { return "RationalFunction('" + r.to_string() + "')"; });
  py::implicitly_convertible<long, RationalFunction>();
  py::implicitly_convertible<std::string, RationalFunction>();

  py::class_<Weight>(m, "Weight")
      .def(py::init([](std::vector<int> d) {
        Weight w;
        w.d = std::move(d);
        return w;
      }))
      .def_static("parse", &Weight::parse)
      .def_property_readonly("coords", [](const Weight& w) { return w.d; })
      .def("height", &Weight::height)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__str__", &Weight::to_string)
      .def("__repr__", [](const Weight& w) { return "Weight(" + w.to_string() + ")"; });

  py::class_<CartanDatum>(m, "CartanDatum")
      .def(py::init<int>())
      .def_property_readonly("rank", &CartanDatum::rank)
      .def_property_readonly("nodes", &CartanDatum::nodes)
      .def("a", &CartanDatum::a)
      .def("o", &CartanDatum::o)
      .def("alpha", &CartanDatum::alpha)
      .def("delta", &CartanDatum::delta);

  m.def("translation_word", [](int n) { return t_two_rho_word(CartanDatum(n)).letters; },
        "Reduced word for the translation by twice the finite Weyl vector.");

  py::class_<UElem>(m, "UElem")
      .def_property_readonly("weight", &UElem::weight)
      .def_property_readonly("height", &UElem::height)
      .def("is_zero", &UElem::is_zero)
      .def("r", &UElem::r, py::keep_alive<0, 1>(), "Right derivation r_i.")
      .def("ir", &UElem::ir, py::keep_alive<0, 1>(), "Left derivation _ir.")
      .def("__add__", [](const UElem& x, const UElem& y) { return x + y; }, py::keep_alive<0, 1>())
      .def("__sub__", [](const UElem& x, const UElem& y) { return x - y; }, py::keep_alive<0, 1>())
      .def("__mul__", [](const UElem& x, const UElem& y) { return x * y; }, py::keep_alive<0, 1>())
      .def("__rmul__", [](const UElem& x, const RationalFunction& s) { return s * x; }, py::keep_alive<0, 1>())
      .def("__neg__", [](const UElem& x) { return -x; }, py::keep_alive<0, 1>())
      .def("__eq__", [](const UElem& x, const UElem& y) { return equals_in_uplus(x, y); });

  py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
      .def(py::init<int, int>(), py::arg("n"), py::arg("k_max") = 6)
      .def_property_readonly("datum", [](const Algebra& a) { return *a.c; })
      .def("generator", [](Algebra& a, int i) { return UElem::generator(*a.c, i); }, py::keep_alive<0, 1>())
      .def("one", [](Algebra& a) { return UElem::one(*a.c); }, py::keep_alive<0, 1>())
      .def("real", [](Algebra& a, int k, const std::string& s, int i) { return a.t->real(k, parse_sign(s), i); },
           py::keep_alive<0, 1>(), py::arg("k"), py::arg("sign"), py::arg("i"), "E_{k delta +- alpha_i}.")
      .def("psi_tilde", [](Algebra& a, int k, int i) { return a.t->psi_tilde(k, i); }, py::keep_alive<0, 1>())
      .def("imag", [](Algebra& a, int k, int i) { return a.t->imag(k, i); }, py::keep_alive<0, 1>())
      .def("P", [](Algebra& a, int k, int i) { return a.t->P(k, i); }, py::keep_alive<0, 1>())
      .def("P_tilde", [](Algebra& a, int k, int i) { return a.t->P_tilde(k, i); }, py::keep_alive<0, 1>());

  m.def("inner", py::overload_cast<const UElem&, const UElem&>(&inner), "Lusztig's bilinear form.");
  m.def("divided_power", [](const UElem& x, int r) { return divided_power(x, r); }, py::keep_alive<0, 1>());
  m.def("commutator", [](const UElem& x, const UElem& y) { return commutator(x, y); }, py::keep_alive<0, 1>());
  m.def("qcomm", [](const UElem& x, const UElem& y, int k) { return qcomm(x, y, k); }, py::keep_alive<0, 1>(), "x y - q^k y x.");

  py::enum_<CheckStatus>(m, "CheckStatus")
      .value("PASS", CheckStatus::Pass)
      .value("FAIL", CheckStatus::Fail)
      .value("SKIPPED_CAP", CheckStatus::SkippedCap);

  py::class_<Caps>(m, "Caps")
      .def(py::init([](int rank, int max_delta, int max_height) { return Caps{rank, max_delta, max_height}; }),
           py::arg("rank") = 2, py::arg("max_delta") = 3, py::arg("max_height") = 8)
      .def_readwrite("rank", &Caps::rank)
      .def_readwrite("max_delta", &Caps::max_delta)
      .def_readwrite("max_height", &Caps::max_height)
      .def_static("profile", &profile)
      .def(py::self == py::self);

  py::class_<CheckRecord>(m, "CheckRecord")
      .def_readonly("id", &CheckRecord::id)
      .def_readonly("anchor", &CheckRecord::anchor)
      .def_property_readonly("params",
                             [](const CheckRecord& r) {
                               py::dict d;
                               for (const auto& [k, v] : r.params) d[py::str(k)] = v;
                               return d;
                             })
      .def_readonly("status", &CheckRecord::status)
      .def_readonly("lhs", &CheckRecord::lhs)
      .def_readonly("rhs", &CheckRecord::rhs)
      .def_readonly("value", &CheckRecord::value)
      .def_readonly("limit", &CheckRecord::limit);

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("suite", &SuiteReport::suite)
      .def_readonly("caps", &SuiteReport::caps)
      .def_readonly("checks", &SuiteReport::checks)
      .def_readonly("wall_time", &SuiteReport::wall_time)
      .def("count", &SuiteReport::count)
      .def("ok", &SuiteReport::ok)
      .def("emit", [](const SuiteReport& r, const std::string& fmt) { return emit(r, parse_format(fmt)); },
           py::arg("format") = "json");

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, const Caps& caps, int threads, std::vector<int> ranks,
         std::optional<std::set<std::string>> anchors) {
        SuiteOptions opt;
        opt.threads = threads;
        opt.ranks = std::move(ranks);
        if (anchors) opt.select = [a = *anchors](const CheckRecord& r) { return a.count(r.anchor) > 0; };
        py::gil_scoped_release release;
        return run_suite(name, caps, opt);
      },
      py::arg("name"), py::arg("caps") = Caps{}, py::arg("threads") = 1, py::arg("ranks") = std::vector<int>{},
      py::arg("anchors") = py::none());
  m.def("parse_json_report", &parse_json_report);
}
