#include "logfcc/log_weights.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logfcc {
namespace {

void check_alpha(double alpha) {
  if (!(std::abs(alpha) <= 1.0)) throw std::domain_error("log weights: alpha must lie in [-1, 1]");
}

// x log x, extended by its limit 0 at x = 0.
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

}  // namespace

double eta0_nonosc(double alpha) {
  check_alpha(alpha);
  // (1-alpha) log((1-alpha)^2) + (1+alpha) log((1+alpha)^2) - 4
  return 2.0 * (xlogx(1.0 - alpha) + xlogx(1.0 + alpha)) - 4.0;
}

double gamma_nonosc(double alpha, int n) {
  if (n < 1) throw std::invalid_argument("gamma_nonosc: n must be positive");
  const double minus = xlogx(1.0 - alpha);
  const double plus = xlogx(1.0 + alpha);
  const double scale = 4.0 / (n + 1.0);
  if (n % 2 == 0) {
    const double nn = n;
    return scale * (minus + plus + 2.0 / (nn * nn - 1.0));
  }
  return scale * (minus - plus);
}

std::vector<double> eta_nonosc_perturbed(double alpha, int degree, std::span<const double> perturbations) {
  check_alpha(alpha);
  if (degree < 0) throw std::invalid_argument("eta_nonosc: negative degree");
  auto bump = [&](int n) { return static_cast<std::size_t>(n) < perturbations.size() ? perturbations[n] : 0.0; };

  // Carried in extended precision: at alpha = +-1 the homogeneous solutions
  // grow linearly and double rounding shows up in the differences xi_n.
  using ext = long double;
  auto xlogx_ext = [](ext x) -> ext { return x == 0 ? 0 : x * std::log(x); };
  const ext a = alpha;
  const ext minus = xlogx_ext(1 - a);
  const ext plus = xlogx_ext(1 + a);
  std::vector<double> eta(static_cast<std::size_t>(degree) + 1);
  ext cur = 2 * (minus + plus) - 4 + bump(0);  // eta_{n-1}
  ext prev2 = 0;                               // eta_{n-2}
  eta[0] = static_cast<double>(cur);
  for (int n = 1; n <= degree; ++n) {
    const ext nn = n;
    const ext scale = 4 / (nn + 1);
    const ext gamma = (n % 2 == 0) ? scale * (minus + plus + 2 / (nn * nn - 1)) : scale * (minus - plus);
    const ext next = (2 * a * nn / (nn + 1)) * cur - ((nn - 1) / (nn + 1)) * prev2 + gamma + bump(n);
    prev2 = cur;
    cur = next;
    eta[n] = static_cast<double>(cur);
  }
  return eta;
}

std::vector<double> eta_nonosc(double alpha, int degree) { return eta_nonosc_perturbed(alpha, degree, {}); }

std::vector<double> eta_nonosc_even(int degree) {
  if (degree < 0) throw std::invalid_argument("eta_nonosc_even: negative degree");
  std::vector<double> eta(static_cast<std::size_t>(degree) + 1, 0.0);
  eta[0] = -4.0;
  for (int m = 1; 2 * m <= degree; ++m) {
    const double mm = m;
    eta[2 * m] = -((2.0 * mm - 1.0) / (2.0 * mm + 1.0)) * eta[2 * m - 2] +
                 8.0 / ((2.0 * mm + 1.0) * (4.0 * mm * mm - 1.0));
  }
  return eta;
}

LogWeightTable xi_nonosc(double alpha, int degree) {
  LogWeightTable table;
  table.alpha = alpha;
  table.degree = degree;
  table.eta = eta_nonosc(alpha, degree);
  table.xi = xi_from_eta<double>(table.eta);
  return table;
}

}  // namespace logfcc
