#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <sstream>

#include "critline/elem.hpp"
#include "critline/errors.hpp"
#include "critline/gamma.hpp"
#include "critline/report_json.hpp"
#include "critline/rootscan.hpp"
#include "critline/verify.hpp"
#include "critline/xi.hpp"
#include "critline/zeta.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// critline::Complex <-> native Python complex
template <>
struct type_caster<critline::Complex> {
 public:
  PYBIND11_TYPE_CASTER(critline::Complex, const_name("complex"));

  bool load(handle src, bool) {
    const Py_complex c = PyComplex_AsCComplex(src.ptr());
    if (PyErr_Occurred()) {
      PyErr_Clear();
      return false;
    }
    value = {c.real, c.imag};
    return true;
  }

  static handle cast(critline::Complex z, return_value_policy, handle) {
    return PyComplex_FromDoubles(z.re, z.im);
  }
};

}  // namespace pybind11::detail

namespace {

critline::ScanFunction scan_function_from_name(const std::string& name) {
  if (name == "exp") return critline::ScanFunction::EXP;
  if (name == "cos") return critline::ScanFunction::COS;
  if (name == "gamma") return critline::ScanFunction::GAMMA;
  if (name == "xi") return critline::ScanFunction::XI;
  throw critline::DomainError("unknown function '" + name + "' (expected exp, cos, gamma, xi)");
}

}  // namespace

PYBIND11_MODULE(_critline, m) {
  using namespace critline;

  m.doc() = "Critical-strip numerics: zeta, gamma and completed-xi evaluation, "
            "identity verification and zero scanning.";

  // exception hierarchy
  auto base = py::register_exception<Error>(m, "CritlineError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("abs_error_estimate", &EvalResult::abs_error_estimate)
      .def_readonly("terms_used", &EvalResult::terms_used)
      .def("__repr__", [](const EvalResult& r) {
        std::ostringstream s;
        s << "EvalResult(value=(" << r.value.re << (r.value.im < 0 ? "" : "+") << r.value.im
          << "j), abs_error_estimate=" << r.abs_error_estimate
          << ", terms_used=" << r.terms_used << ")";
        return s.str();
      });

  py::class_<Bracket>(m, "Bracket")
      .def(py::init([](double t_lo, double t_hi, double f_lo, double f_hi) {
             return Bracket{t_lo, t_hi, f_lo, f_hi};
           }),
           py::arg("t_lo"), py::arg("t_hi"), py::arg("f_lo"), py::arg("f_hi"))
      .def_readonly("t_lo", &Bracket::t_lo)
      .def_readonly("t_hi", &Bracket::t_hi)
      .def_readonly("f_lo", &Bracket::f_lo)
      .def_readonly("f_hi", &Bracket::f_hi)
      .def("__repr__", [](const Bracket& b) {
        std::ostringstream s;
        s << "Bracket(t_lo=" << b.t_lo << ", t_hi=" << b.t_hi << ", f_lo=" << b.f_lo
          << ", f_hi=" << b.f_hi << ")";
        return s.str();
      });

  py::class_<ZeroRecord>(m, "ZeroRecord")
      .def_readonly("t", &ZeroRecord::t)
      .def_readonly("residual", &ZeroRecord::residual)
      .def_readonly("iterations", &ZeroRecord::iterations)
      .def_readonly("bracket", &ZeroRecord::bracket)
      .def("__repr__", [](const ZeroRecord& r) {
        std::ostringstream s;
        s << "ZeroRecord(t=" << r.t << ", residual=" << r.residual
          << ", iterations=" << r.iterations << ")";
        return s.str();
      });

  py::class_<Region>(m, "Region")
      .def(py::init([](double re_lo, double re_hi, double t_lo, double t_hi) {
             return Region{re_lo, re_hi, t_lo, t_hi};
           }),
           py::arg("re_lo"), py::arg("re_hi"), py::arg("t_lo"), py::arg("t_hi"))
      .def_readonly("re_lo", &Region::re_lo)
      .def_readonly("re_hi", &Region::re_hi)
      .def_readonly("t_lo", &Region::t_lo)
      .def_readonly("t_hi", &Region::t_hi);

  py::class_<GridReport>(m, "GridReport")
      .def_readonly("region", &GridReport::region)
      .def_readonly("step", &GridReport::step)
      .def_readonly("min_abs_xi_offline", &GridReport::min_abs_xi_offline)
      .def_readonly("argmin_point", &GridReport::argmin_point)
      .def_readonly("max_sym_residual", &GridReport::max_sym_residual)
      .def_readonly("candidate_cells", &GridReport::candidate_cells)
      .def("__repr__", [](const GridReport& g) {
        std::ostringstream s;
        s << "GridReport(min_abs_xi_offline=" << g.min_abs_xi_offline
          << ", max_sym_residual=" << g.max_sym_residual
          << ", candidates=" << g.candidate_cells.size() << ")";
        return s.str();
      });

  py::class_<CurveSegment>(m, "CurveSegment")
      .def_property_readonly("locus",
                             [](const CurveSegment& s) {
                               return std::string(locus_kind_name(s.locus_kind));
                             })
      .def_readonly("points", &CurveSegment::points)
      .def("__repr__", [](const CurveSegment& s) {
        std::ostringstream o;
        o << "CurveSegment(locus=" << locus_kind_name(s.locus_kind)
          << ", points=" << s.points.size() << ")";
        return o.str();
      });

  py::class_<CurveReport>(m, "CurveReport")
      .def_readonly("segments", &CurveReport::segments)
      .def_readonly("candidates", &CurveReport::candidates);

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("suite", &SuiteResult::suite)
      .def_readonly("samples", &SuiteResult::samples)
      .def_readonly("max_residual", &SuiteResult::max_residual)
      .def_readonly("tolerance", &SuiteResult::tolerance)
      .def_readonly("pass_", &SuiteResult::pass)
      .def("__repr__", [](const SuiteResult& r) {
        std::ostringstream s;
        s << "SuiteResult(suite=" << r.suite << ", max_residual=" << r.max_residual
          << ", pass=" << (r.pass ? "True" : "False") << ")";
        return s.str();
      });

  // elementary functions
  m.def("cexp", &cexp, py::arg("z"), "e^{a+ib} = e^a (cos b + i sin b)");
  m.def("ccos", &ccos, py::arg("z"), "cos(x+iy) = cos x cosh y - i sin x sinh y");
  m.def("csin", &csin, py::arg("z"));
  m.def("ccosh", &ccosh, py::arg("z"));
  m.def("csinh", &csinh, py::arg("z"));
  m.def("clog", &clog, py::arg("z"), "Principal branch, im in (-pi, pi]");
  m.def("cpow_real_base", &cpow_real_base, py::arg("n"), py::arg("z"),
        "n^z for integer n >= 1");

  // gamma
  m.def("cgamma", &cgamma, py::arg("z"), "Complex gamma (Lanczos + reflection)");
  m.def("reflection_residual", &reflection_residual, py::arg("z"),
        "Relative residual of gamma(z)gamma(1-z) = pi/sin(pi z)");

  // zeta
  m.def("zeta_direct", &zeta_direct, py::arg("z"), py::arg("tail_tol") = 1e-12,
        "Dirichlet-series route, re z >= 1.1");
  m.def("zeta_eta", &zeta_eta, py::arg("z"), "Eta-form route, re z > 0");
  m.def("zeta_strip", &zeta_strip, py::arg("z"), "Single entry point on re z in (-10, 10]");
  m.def("is_trivial_zero", &is_trivial_zero, py::arg("z"));

  // xi
  m.def("xi_eval", &xi_eval, py::arg("z"), "Completed xi, z(1-z) numerator convention");
  m.def("xi_on_line", &xi_on_line, py::arg("t"), "Real value xi(1/2 + it), |t| <= 60");
  m.def("functional_eq_residual", &functional_eq_residual, py::arg("z"));
  m.def("symmetry_residuals",
        [](double d, double t) { return symmetry_residuals({d, t}); }, py::arg("d"),
        py::arg("t"));

  // rootscan
  m.def("bracket_line", &bracket_line, py::arg("t_lo"), py::arg("t_hi"), py::arg("step"),
        "Sign-change brackets of xi on the critical line");
  m.def("refine", &refine, py::arg("bracket"), "Bisect a bracket down to a ZeroRecord");
  m.def(
      "scan_strip",
      [](double re_lo, double re_hi, double t_lo, double t_hi, double step, double margin,
         unsigned threads) {
        return scan_strip({re_lo, re_hi, t_lo, t_hi}, step, margin, threads);
      },
      py::arg("re_lo"), py::arg("re_hi"), py::arg("t_lo"), py::arg("t_hi"),
      py::arg("step") = 0.05, py::arg("offline_margin") = 0.05, py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "extract_curves",
      [](const std::string& fn, double re_lo, double re_hi, double im_lo, double im_hi,
         double step) {
        return extract_curves(scan_function_from_name(fn), {re_lo, re_hi, im_lo, im_hi}, step);
      },
      py::arg("fn"), py::arg("re_lo"), py::arg("re_hi"), py::arg("im_lo"), py::arg("im_hi"),
      py::arg("step"));

  // verification suites
  m.def("verify_functional_eq", &verify_functional_eq, py::arg("samples") = 1000,
        py::arg("seed") = 1729);
  m.def("verify_reflection", &verify_reflection, py::arg("samples") = 1000,
        py::arg("seed") = 1729);
  m.def("verify_line_real", &verify_line_real, py::arg("t_max") = 50.0);
  m.def("verify_symmetry", &verify_symmetry);

#ifdef CRITLINE_VERSION
  m.attr("__version__") = CRITLINE_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
