#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace logfcc {

using cplx = std::complex<double>;
using Integrand = std::function<cplx(double)>;

struct QuadParams {
  double alpha = 0.0;
  double k = 0.0;
  int n = 16;  // interpolation degree N; N + 1 samples
};

enum class Path { oscillatory, folded_nonoscillatory };

const char* to_string(Path p);

struct QuadResult {
  cplx value;
  std::optional<double> est_error;  // set by fcc_refine only
  int n_used = 0;
  Path path = Path::oscillatory;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// sum_n c_n w_n, compensated when the length exceeds 1000.
cplx contract(std::span<const cplx> coeffs, std::span<const cplx> weights);

/// FCC approximation of int_{-1}^{1} f(x) log((x - alpha)^2) exp(ikx) dx.
/// |k| <= 2 multiplies exp(ikx) into f and uses the k = 0 weights; otherwise
/// the oscillatory weights are used.
QuadResult fcc_integrate(const Integrand& f, const QuadParams& params);

/// Forces the folded route regardless of k.
QuadResult fcc_integrate_folded(const Integrand& f, const QuadParams& params);

/// Forces the oscillatory weights regardless of k (k != 0).
QuadResult fcc_integrate_oscillatory(const Integrand& f, const QuadParams& params);

/// Same rules from samples f(cos(j pi / N)), j = 0..N.
QuadResult fcc_from_samples(std::span<const cplx> samples, double alpha, double k);

/// Doubles N from params.n until |I_{2N} - I_N| <= tol or N would exceed
/// n_max (>= 2 params.n). Samples of the coarser grid are reused.
QuadResult fcc_refine(const Integrand& f, const QuadParams& params, double tol, int n_max = 1 << 16);

/// Least-squares slope p of log(error) against -log(N). Errors at or below
/// `floor` (round-off level) are dropped; needs two remaining points.
double empirical_order(std::span<const int> ns, std::span<const double> errors, double floor = 1e-15);

/// Runs fcc_integrate for each N and compares against `reference`.
double empirical_order(const Integrand& f, double alpha, double k, std::span<const int> ns, cplx reference,
                       double floor = 1e-15);

}  // namespace logfcc
