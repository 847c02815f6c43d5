#include "logfcc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "logfcc/chebyshev.hpp"
#include "logfcc/log_weights.hpp"
#include "logfcc/osc_weights.hpp"

namespace logfcc {
namespace {

constexpr std::size_t kCompensatedMin = 1000;
constexpr double kFoldedMaxK = 2.0;

void check_params(const QuadParams& p) {
  if (!(std::abs(p.alpha) <= 1.0)) throw std::domain_error("fcc: alpha must lie in [-1, 1]");
  if (p.n < 1) throw std::invalid_argument("fcc: N must be at least 1");
  if (!std::isfinite(p.k)) throw std::domain_error("fcc: k must be finite");
}

std::vector<cplx> sample(const Integrand& f, int n) {
  const NodeGrid grid(n);
  std::vector<cplx> s(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) s[j] = f(grid[j]);
  return s;
}

QuadResult folded_from_samples(std::span<const cplx> samples, double alpha, double k) {
  const int n = static_cast<int>(samples.size()) - 1;
  const NodeGrid grid(n);
  std::vector<cplx> folded(samples.begin(), samples.end());
  if (k != 0.0) {
    for (std::size_t j = 0; j < folded.size(); ++j) folded[j] *= std::polar(1.0, k * grid[j]);
  }
  const auto interp = interpolate(std::span<const cplx>(folded));
  const auto xi = xi_nonosc(alpha, n).xi;
  const std::vector<cplx> w(xi.begin(), xi.end());
  QuadResult r;
  r.value = contract(interp.coeffs(), w);
  r.n_used = n;
  r.path = Path::folded_nonoscillatory;
  r.evaluations = samples.size();
  return r;
}

QuadResult oscillatory_from_samples(std::span<const cplx> samples, double alpha, double k) {
  if (k == 0.0) throw std::invalid_argument("fcc: the oscillatory route needs k != 0");
  const int n = static_cast<int>(samples.size()) - 1;
  const auto interp = interpolate(samples);
  const auto table = weights(alpha, k, n);
  QuadResult r;
  r.value = contract(interp.coeffs(), table.xi);
  r.n_used = n;
  r.path = Path::oscillatory;
  r.evaluations = samples.size();
  return r;
}

}  // namespace

const char* to_string(Path p) {
  return p == Path::oscillatory ? "oscillatory" : "folded_nonoscillatory";
}

cplx contract(std::span<const cplx> coeffs, std::span<const cplx> weights) {
  const std::size_t n = std::min(coeffs.size(), weights.size());
  if (n <= kCompensatedMin) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += coeffs[i] * weights[i];
    return sum;
  }
  // Kahan summation on each component.
  double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx term = coeffs[i] * weights[i];
    const double yr = term.real() - cr;
    const double tr = sr + yr;
    cr = (tr - sr) - yr;
    sr = tr;
    const double yi = term.imag() - ci;
    const double ti = si + yi;
    ci = (ti - si) - yi;
    si = ti;
  }
  return {sr, si};
}

QuadResult fcc_from_samples(std::span<const cplx> samples, double alpha, double k) {
  if (samples.size() < 2) throw std::invalid_argument("fcc: need at least 2 samples");
  if (std::abs(k) <= kFoldedMaxK) return folded_from_samples(samples, alpha, k);
  return oscillatory_from_samples(samples, alpha, k);
}

QuadResult fcc_integrate(const Integrand& f, const QuadParams& params) {
  check_params(params);
  return fcc_from_samples(sample(f, params.n), params.alpha, params.k);
}

QuadResult fcc_integrate_folded(const Integrand& f, const QuadParams& params) {
  check_params(params);
  return folded_from_samples(sample(f, params.n), params.alpha, params.k);
}

QuadResult fcc_integrate_oscillatory(const Integrand& f, const QuadParams& params) {
  check_params(params);
  return oscillatory_from_samples(sample(f, params.n), params.alpha, params.k);
}

QuadResult fcc_refine(const Integrand& f, const QuadParams& params, double tol, int n_max) {
  check_params(params);
  if (!(tol > 0.0)) throw std::invalid_argument("fcc_refine: tol must be positive");
  if (n_max < 2 * params.n) throw std::invalid_argument("fcc_refine: n_max must be at least 2 N");
  int n = params.n;
  auto samples = sample(f, n);
  std::size_t evaluations = samples.size();
  QuadResult coarse = fcc_from_samples(samples, params.alpha, params.k);

  while (true) {
    if (2 * n > n_max) {
      coarse.converged = false;
      coarse.evaluations = evaluations;
      return coarse;
    }
    const int n2 = 2 * n;
    const NodeGrid fine(n2);
    std::vector<cplx> refined(fine.size());
    for (std::size_t j = 0; j < samples.size(); ++j) refined[NodeGrid::refined_index(j)] = samples[j];
    for (std::size_t j = 1; j < fine.size(); j += 2) refined[j] = f(fine[j]);
    evaluations += samples.size() - 1;

    QuadResult next = fcc_from_samples(refined, params.alpha, params.k);
    const double diff = std::abs(next.value - coarse.value);
    next.est_error = diff;
    next.evaluations = evaluations;
    samples = std::move(refined);
    n = n2;
    if (diff <= tol) {
      next.converged = true;
      return next;
    }
    coarse = next;
  }
}

double empirical_order(std::span<const int> ns, std::span<const double> errors, double floor) {
  if (ns.size() != errors.size()) throw std::invalid_argument("empirical_order: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (errors[i] > floor && ns[i] > 0) {
      xs.push_back(std::log(static_cast<double>(ns[i])));
      ys.push_back(std::log(errors[i]));
    }
  }
  if (xs.size() < 2) throw std::invalid_argument("empirical_order: fewer than two usable points");
  const double m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return -sxy / sxx;
}

double empirical_order(const Integrand& f, double alpha, double k, std::span<const int> ns, cplx reference,
                       double floor) {
  std::vector<double> errors;
  errors.reserve(ns.size());
  for (const int n : ns) errors.push_back(std::abs(fcc_integrate(f, {alpha, k, n}).value - reference));
  return empirical_order(ns, errors, floor);
}

}  // namespace logfcc
