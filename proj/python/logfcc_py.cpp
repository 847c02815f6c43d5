#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logfcc/log_weights.hpp"
#include "logfcc/oracle.hpp"
#include "logfcc/osc_weights.hpp"
#include "logfcc/quadrature.hpp"

namespace py = pybind11;
using namespace logfcc;

namespace {

template <class T>
py::array_t<T> to_array(const std::vector<T>& v) {
  return py::array_t<T>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::dict result_dict(const QuadResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["est_error"] = r.est_error ? py::cast(*r.est_error) : py::none();
  d["n_used"] = r.n_used;
  d["path"] = std::string(to_string(r.path));
  d["evaluations"] = r.evaluations;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Filon-Clenshaw-Curtis quadrature of f(x) log((x - alpha)^2) exp(ikx) on [-1, 1].";

  m.def(
      "weights",
      [](double alpha, double k, int n) {
        const auto t = weights(alpha, k, n);
        return py::make_tuple(to_array(t.xi), to_array(t.eta));
      },
      py::arg("alpha"), py::arg("k"), py::arg("n"), "Returns (xi, eta) for n = 0..N as complex arrays.");

  m.def(
      "nonosc_weights",
      [](double alpha, int n) {
        const auto t = xi_nonosc(alpha, n);
        return py::make_tuple(to_array(t.xi), to_array(t.eta));
      },
      py::arg("alpha"), py::arg("n"));

  m.def(
      "integrate",
      [](const Integrand& f, double alpha, double k, int n) { return result_dict(fcc_integrate(f, {alpha, k, n})); },
      py::arg("f"), py::arg("alpha"), py::arg("k"), py::arg("n") = 16);

  m.def(
      "integrate_samples",
      [](const std::vector<cplx>& samples, double alpha, double k) {
        return result_dict(fcc_from_samples(samples, alpha, k));
      },
      py::arg("samples"), py::arg("alpha"), py::arg("k"), "Samples at cos(j pi / N), j = 0..N.");

  m.def(
      "refine",
      [](const Integrand& f, double alpha, double k, int n, double tol, int n_max) {
        return result_dict(fcc_refine(f, {alpha, k, n}, tol, n_max));
      },
      py::arg("f"), py::arg("alpha"), py::arg("k"), py::arg("n") = 8, py::arg("tol") = 1e-12,
      py::arg("n_max") = 1 << 16);

  m.def(
      "reference_integral",
      [](const Integrand& f, double alpha, double k, std::vector<double> singular_points, double bandwidth) {
        oracle::Options opt;
        opt.singular_points = std::move(singular_points);
        opt.bandwidth = bandwidth;
        const auto r = oracle::reference_integral(f, alpha, k, opt);
        return py::make_tuple(r.value, r.achieved, r.converged);
      },
      py::arg("f"), py::arg("alpha"), py::arg("k"), py::arg("singular_points") = std::vector<double>{},
      py::arg("bandwidth") = 0.0, "Graded-mesh reference; returns (value, achieved, converged).");
}
