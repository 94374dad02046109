#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "frobpow/cli.hpp"
#include "frobpow/closedform.hpp"
#include "frobpow/errors.hpp"
#include "frobpow/fppoly.hpp"
#include "frobpow/multiplier.hpp"
#include "frobpow/oracle.hpp"
#include "frobpow/parse.hpp"
#include "frobpow/report.hpp"

namespace py = pybind11;
using namespace frobpow;

namespace {

using Point = std::vector<std::int64_t>;

ExponentVector point(const Point& v) {
  if (v.size() > ExponentVector::kMaxVars) throw ValidationError("too many coordinates");
  ExponentVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::vector<Point> generators(const MonomialIdeal& i) {
  std::vector<Point> out;
  for (const auto& g : i.generators()) out.emplace_back(g.begin(), g.end());
  return out;
}

std::pair<std::string, std::string> fraction(const Rational& r) { return {r.get_num().get_str(), r.get_den().get_str()}; }

std::string family(const std::string& ideal, const std::string& cls, std::int64_t at_p, const std::string& window) {
  std::vector<std::string> args{"family", "--ideal", ideal, "--json"};
  if (!cls.empty()) args.insert(args.end(), {"--class", cls});
  if (at_p > 0) args.insert(args.end(), {"--at-p", std::to_string(at_p)});
  if (!window.empty()) args.insert(args.end(), {"--window", window});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code == cli::kValidation) throw ValidationError(err.str());
  if (code == cli::kResource) throw ResourceError(err.str());
  if (code != cli::kOk) throw InternalError(err.str());
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frobenius powers and critical exponents of monomial ideals";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  m.def("lpr", &lpr, py::arg("m"), py::arg("d"));
  m.def("carry_free", [](const Point& s, std::int64_t p) { return carry_free(point(s), p); }, py::arg("s"), py::arg("p"));
  m.def("base_p_digits", &base_p_digits, py::arg("m"), py::arg("p"));

  py::class_<closedform::SymbolicCrit>(m, "SymbolicCrit")
      .def_property_readonly("k", &closedform::SymbolicCrit::k)
      .def_property_readonly("d", &closedform::SymbolicCrit::d)
      .def_property_readonly("s", [](const closedform::SymbolicCrit& c) -> std::optional<std::int64_t> {
        if (c.s().is_infinite()) return std::nullopt;
        return c.s().value();
      })
      .def_property_readonly("r", &closedform::SymbolicCrit::r)
      .def("is_one", &closedform::SymbolicCrit::is_one)
      .def("eval", [](const closedform::SymbolicCrit& c, std::int64_t p) { return fraction(c.eval(p)); }, py::arg("p"))
      .def("__str__", &closedform::SymbolicCrit::to_string)
      .def("__repr__", [](const closedform::SymbolicCrit& c) { return "SymbolicCrit(" + c.to_string() + ")"; });

  m.def("crit_md",
        [](std::int64_t k, std::int64_t d, std::size_t n, const std::string& cls) {
          return closedform::crit_md(k, d, n, ResidueClass::parse(cls));
        },
        py::arg("k"), py::arg("d"), py::arg("n"), py::arg("cls"));
  m.def("crit_diag",
        [](const Point& u, const Point& dvec, const std::string& cls) {
          return closedform::crit_diag(point(u), point(dvec), ResidueClass::parse(cls));
        },
        py::arg("u"), py::arg("dvec"), py::arg("cls"));
  m.def("family_json", &family, py::arg("ideal"), py::arg("cls") = "", py::arg("at_p") = 0, py::arg("window") = "");

  m.def("parse_ideal", [](const std::string& text) { return generators(parse_ideal(text).ideal); }, py::arg("text"));
  m.def("frob_power",
        [](const std::string& ideal, std::int64_t m, std::int64_t q, std::int64_t p) {
          return generators(frob_power_rational(parse_ideal(ideal).ideal, m, q, p));
        },
        py::arg("ideal"), py::arg("m"), py::arg("q"), py::arg("p"));

  m.def("mu",
        [](const std::string& a, const std::string& b, std::int64_t q, std::int64_t p, std::int64_t cap) {
          const auto ai = parse_ideal(a).ideal;
          return oracle::mu(oracle::InvariantQuery(ai, parse_ideal(b, ai.nvars()).ideal, q, p), oracle::OracleConfig{cap});
        },
        py::arg("a"), py::arg("b"), py::arg("q"), py::arg("p"), py::arg("cap") = 0);
  m.def("nu",
        [](const std::string& a, const std::string& b, std::int64_t q, std::int64_t p, std::int64_t cap) {
          const auto ai = parse_ideal(a).ideal;
          return oracle::nu(oracle::InvariantQuery(ai, parse_ideal(b, ai.nvars()).ideal, q, p), oracle::OracleConfig{cap});
        },
        py::arg("a"), py::arg("b"), py::arg("q"), py::arg("p"), py::arg("cap") = 0);
  m.def("mu_diag_fast", [](const Point& u, std::int64_t q, std::int64_t d, std::int64_t p) {
        return oracle::mu_diag_fast(point(u), q, d, p);
      },
        py::arg("u"), py::arg("q"), py::arg("d"), py::arg("p"));

  m.def("test_ideal",
        [](const std::string& poly, std::int64_t p, std::int64_t m, std::int64_t q) -> std::optional<std::vector<Point>> {
          const auto tau = test_ideal(parse_polynomial(poly, p), m, q);
          if (!tau.monomial) return std::nullopt;
          return generators(*tau.monomial);
        },
        py::arg("poly"), py::arg("p"), py::arg("m"), py::arg("q"));

  m.def("multiplier_ideal",
        [](const Point& dvec, const std::string& t) {
          return generators(multiplier::multiplier_ideal(multiplier::NewtonMembership::diagonal(point(dvec)), parse_rational(t)));
        },
        py::arg("dvec"), py::arg("t"));
  m.def("compare_thm64",
        [](const Point& dvec, std::int64_t p) { return multiplier::compare_thm64(point(dvec), p).mismatches; },
        py::arg("dvec"), py::arg("p"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
