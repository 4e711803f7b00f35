// Python bindings: matrices cross as complex128 numpy arrays, reports as dicts.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "logmaj/error.hpp"
#include "logmaj/harness.hpp"
#include "logmaj/inequalities.hpp"
#include "logmaj/io.hpp"
#include "logmaj/matrix.hpp"
#include "logmaj/spectral.hpp"
#include "logmaj/step_function.hpp"
#include "logmaj/submajorisation.hpp"

namespace py = pybind11;
using namespace logmaj;
using Array = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using Intervals = std::vector<std::pair<double, double>>;

namespace {

ComplexMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

Array to_array(const ComplexMatrix& x) {
  const auto n = static_cast<py::ssize_t>(x.dim());
  Array out({n, n});
  std::copy(x.entries().begin(), x.entries().end(), out.mutable_data());
  return out;
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list to_python(const Reports& reports) {
  py::list out;
  for (const auto& r : reports) out.append(to_python(to_json(r)));
  return out;
}

py::dict to_python(const RelationReport& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["worst_t"] = r.worst_t;
  d["lhs_at_worst"] = r.lhs_at_worst;
  d["rhs_at_worst"] = r.rhs_at_worst;
  d["slack"] = r.slack;
  return d;
}

CheckOptions options(double atol, double rtol, double delta) { return {Tolerance{atol, rtol}, delta}; }

StepFunction make_step_function(std::vector<double> breaks, std::vector<double> vals) {
  return StepFunction(std::move(breaks), std::move(vals));
}

#define TOL_ARGS py::arg("atol") = 1e-9, py::arg("rtol") = 1e-9, py::arg("delta") = kDefaultDelta

}  // namespace

PYBIND11_MODULE(_logmaj, m) {
  m.doc() = "Singular-value step functions, determinants and randomized inequality checks";

  static PyObject* error = PyErr_NewException("logmaj.LogmajError", PyExc_RuntimeError, nullptr);
  m.attr("LogmajError") = py::handle(error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_steal<py::object>(PyObject_CallFunction(error, "s", e.what()));
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error, exc.ptr());
    }
  });

  py::class_<StepFunction>(m, "StepFunction")
      .def(py::init(&make_step_function), py::arg("breakpoints"), py::arg("values"))
      .def_property_readonly("breakpoints",
                             [](const StepFunction& f) {
                               return std::vector<double>(f.breakpoints().begin(), f.breakpoints().end());
                             })
      .def_property_readonly("values",
                             [](const StepFunction& f) {
                               return std::vector<double>(f.values().begin(), f.values().end());
                             })
      .def("eval_right", [](const StepFunction& f, double t) { return eval_right(f, t); }, py::arg("t"))
      .def("eval_left", [](const StepFunction& f, double t) { return eval_left(f, t); }, py::arg("t"))
      .def(
          "integrate_log",
          [](const StepFunction& f, const Intervals& k) { return integrate_log(f, IntervalSet(k)).value(); },
          py::arg("intervals"))
      .def(py::self == py::self)
      .def("__repr__", [](const StepFunction& f) { return "StepFunction(" + to_json(f).dump() + ")"; });

  m.def("mu", [](const Array& x) { return mu(to_matrix(x)); }, "Singular values as a step function on [0,1)");
  m.def("lambda_scale", [](const Array& h) { return lambda_scale(to_matrix(h)); },
        "Eigenvalues of a Hermitian matrix as a step function");
  m.def("fk_det", [](const Array& x) { return fk_det(to_matrix(x)); }, "Normalized determinant (det|x|)^(1/n)");
  m.def("log_fk_det", [](const Array& x) { return log_fk_det(to_matrix(x)).value(); });
  m.def("big_lambda", [](const Array& x, double t) { return big_lambda(to_matrix(x), t); }, py::arg("x"),
        py::arg("t"));
  m.def("cayley", [](const Array& x) { return to_array(cayley(to_matrix(x))); });
  m.def("inverse", [](const Array& x) { return to_array(inverse(to_matrix(x))); });
  m.def("haar_unitary", [](std::size_t n, std::uint64_t seed) { return to_array(haar_unitary(n, seed)); },
        py::arg("n"), py::arg("seed"));
  m.def("svd", [](const Array& x) {
    const SingularData d = svd(to_matrix(x));
    return py::make_tuple(to_array(d.left), d.sigma, to_array(d.right));
  });
  m.def("herm_eig", [](const Array& h) {
    const SpectralData d = herm_eig(to_matrix(h));
    return py::make_tuple(d.eigenvalues, to_array(d.basis));
  });
  m.def(
      "dyadic_approx",
      [](const Array& x, unsigned k, bool from_below) {
        const DyadicApprox a =
            dyadic_approx(to_matrix(x), k, from_below ? DyadicMode::kFromBelow : DyadicMode::kFromAbove);
        return py::make_tuple(to_array(a.matrix), a.offset, a.range);
      },
      py::arg("x"), py::arg("k"), py::arg("from_below") = false);

  m.def(
      "log_submaj",
      [](const Array& x, const Array& y, double tol) {
        return to_python(log_submaj(to_matrix(x), to_matrix(y), RelationOptions{tol}));
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);
  m.def(
      "p_submaj",
      [](const Array& x, const Array& y, double p, double tol) {
        return to_python(p_submaj(to_matrix(x), to_matrix(y), p, RelationOptions{tol}));
      },
      py::arg("x"), py::arg("y"), py::arg("p"), py::arg("tol") = 1e-9);

  m.def(
      "check_harnack_middle",
      [](const Array& x, double atol, double rtol, double delta) {
        return to_python(check_harnack_middle(to_matrix(x), options(atol, rtol, delta)));
      },
      py::arg("x"), TOL_ARGS);
  m.def(
      "check_harnack_upper",
      [](const Array& x, const Intervals& k, double atol, double rtol, double delta) {
        return to_python(check_harnack_upper(to_matrix(x), IntervalSet(k), options(atol, rtol, delta)));
      },
      py::arg("x"), py::arg("intervals"), TOL_ARGS);
  m.def(
      "check_harnack_lower",
      [](const Array& x, const Intervals& k, double atol, double rtol, double delta) {
        return to_python(to_json(check_harnack_lower(to_matrix(x), IntervalSet(k), options(atol, rtol, delta))));
      },
      py::arg("x"), py::arg("intervals"), TOL_ARGS);
  m.def(
      "check_cayley",
      [](const Array& x, const Array& y, const Intervals& k, double atol, double rtol, double delta) {
        return to_python(check_cayley(to_matrix(x), to_matrix(y), IntervalSet(k), options(atol, rtol, delta)));
      },
      py::arg("x"), py::arg("y"), py::arg("intervals"), TOL_ARGS);
  m.def(
      "check_tung_matrix",
      [](const Array& z, const Array& u, const std::vector<std::size_t>& index_set, double atol, double rtol,
         double delta) {
        return to_python(check_tung_matrix(to_matrix(z), to_matrix(u), index_set, options(atol, rtol, delta)));
      },
      py::arg("z"), py::arg("u"), py::arg("index_set"), TOL_ARGS);

  m.def("checker_ids", &checker_ids);
  m.def(
      "run_trial",
      [](const std::string& checker, std::size_t dim, std::uint64_t seed) {
        const TrialResult t = run_trial(checker, dim, seed, TrialConfig{}, true);
        py::dict d;
        d["checker"] = t.checker;
        d["dim"] = t.dim;
        d["seed"] = t.seed;
        d["outcome"] = to_string(t.outcome);
        d["reports"] = to_python(t.reports);
        d["inputs"] = to_python(t.inputs);
        if (!t.error.empty()) d["error"] = t.error;
        return d;
      },
      py::arg("checker"), py::arg("dim"), py::arg("seed"), "Regenerate and rerun one trial of the suite");
  m.def(
      "run_suite",
      [](const std::vector<std::string>& suite, std::size_t trials, const std::vector<std::size_t>& dims,
         std::uint64_t seed, std::size_t threads) {
        TrialConfig cfg;
        cfg.suite = suite;
        cfg.trials = trials;
        cfg.dims = dims;
        cfg.seed = seed;
        cfg.threads = threads;
        SuiteReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(cfg);
        }
        return to_python(to_json(report));
      },
      py::arg("suite") = std::vector<std::string>{"all"}, py::arg("trials") = 100,
      py::arg("dims") = std::vector<std::size_t>{1, 2, 4, 8}, py::arg("seed") = 0, py::arg("threads") = 0,
      "Run the randomized suite and return the JSON report as a dict");
}
