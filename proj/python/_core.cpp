#include "qproj/error.hpp"
#include "qproj/fenceposet.hpp"
#include "qproj/qrat.hpp"
#include "qproj/qseries.hpp"
#include "qproj/qtrace.hpp"
#include "qproj/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qproj;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_py(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.get_str()); }

/// {exponent: coefficient} of a Laurent polynomial.
py::dict coeff_dict(const LaurentPoly& p) {
  py::dict d;
  if (p.is_zero()) return d;
  for (long e = p.valuation(); e <= p.degree(); ++e) {
    Integer c = p.coeff(e);
    if (c != 0) d[py::int_(e)] = to_py(c);
  }
  return d;
}

py::dict point_dict(const ProjPoint& p) {
  py::dict d;
  d["infinite"] = p.is_infinity();
  d["num"] = coeff_dict(p.num());
  d["den"] = coeff_dict(p.den());
  d["text"] = p.to_string();
  return d;
}

py::dict series_dict(const QSeries& s) {
  py::dict terms;
  for (const auto& [e, c] : s.terms()) terms[py::int_(e)] = to_py(c);
  py::dict d;
  d["terms"] = terms;
  d["precision"] = s.is_exact() ? py::object(py::none()) : py::object(py::int_(s.precision()));
  d["text"] = s.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-deformed rationals and reals";

  static py::exception<Error> error_type(m, "QprojError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  m.def(
      "quantize",
      [](const std::string& x, const std::string& flavor) {
        return point_dict(quantize(ExtRational::parse(x), flavor_from_name(flavor)).point);
      },
      py::arg("x"), py::arg("flavor") = "sharp", "[x]^flavor as numerator and denominator coefficients");

  m.def(
      "act",
      [](const std::string& word, const std::string& x, const std::string& flavor, bool twisted) {
        GroupWord w = GroupWord::parse(word);
        QRational q = quantize(ExtRational::parse(x), flavor_from_name(flavor));
        QRational r = twisted ? act_twisted(w, q) : act(w, q);
        py::dict d = point_dict(r.point);
        d["value"] = r.value.to_string();
        d["flavor"] = flavor_name(r.flavor);
        return d;
      },
      py::arg("word"), py::arg("x"), py::arg("flavor") = "sharp", py::arg("twisted") = false);

  m.def(
      "qtrace",
      [](const std::string& word) {
        TraceResult t = qtrace(GroupWord::parse(word));
        py::dict d;
        d["normalized"] = coeff_dict(t.normalized);
        d["text"] = trace_to_string(t.normalized);
        d["unit"] = t.unit.to_string();
        d["palindromic"] = t.normalized.is_palindromic();
        return d;
      },
      py::arg("word"), "Normalized trace of the q-matrix of a word");

  m.def(
      "fence_gf",
      [](const std::vector<long>& shape) { return coeff_dict(generating_function(build_fence(shape))); },
      py::arg("shape"), "Rank generating function of the admissible ideals of a circular fence");

  m.def(
      "fence_ideal_count",
      [](const std::vector<long>& shape) { return admissible_ideals(build_fence(shape)).size(); },
      py::arg("shape"));

  m.def(
      "qreal",
      [](const std::vector<long>& digits, const std::vector<long>& period, long order, const std::string& flavor) {
        QRealResult r;
        if (period.empty()) {
          ListDigits s(digits);
          r = quantize_real_detailed(s, order, flavor_from_name(flavor));
        } else {
          PeriodicDigits s(digits, period);
          r = quantize_real_detailed(s, order, flavor_from_name(flavor));
        }
        py::dict d = series_dict(r.series);
        d["digits_used"] = r.digits;
        d["exact"] = r.exact;
        return d;
      },
      py::arg("digits"), py::arg("period") = std::vector<long>{}, py::arg("order") = 20,
      py::arg("flavor") = "sharp", "Series of the quantized continued fraction [a0; a1, ...] (periodic tail optional)");

  m.def("suite_names", &suite_names);

  m.def(
      "verify",
      [](const std::string& suite, unsigned long long seed, const std::string& digits_path) {
        return to_json(run_suite(suite, seed, digits_path)).dump();
      },
      py::arg("suite"), py::arg("seed"), py::arg("digits_path"), "Property suite report as a JSON string");
}
