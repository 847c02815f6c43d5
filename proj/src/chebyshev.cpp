#include "logfcc/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "logfcc/fft.hpp"

namespace logfcc {
namespace {

constexpr double kDomainSlack = 1e-14;
constexpr int kRecurrenceLimit = 32;

double checked_arg(double x, const char* who) {
  if (!(std::abs(x) <= 1.0 + kDomainSlack)) {
    throw std::domain_error(std::string(who) + ": argument outside [-1, 1]");
  }
  return std::clamp(x, -1.0, 1.0);
}

template <class Scalar>
ChebInterpolant<Scalar> from_dct(std::vector<Scalar> y, std::size_t n_samples) {
  const double degree = static_cast<double>(n_samples - 1);
  for (auto& c : y) c /= degree;
  y.front() *= 0.5;
  y.back() *= 0.5;
  return ChebInterpolant<Scalar>(std::move(y));
}

}  // namespace

double chebyshev_t(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_t: negative degree");
  x = checked_arg(x, "chebyshev_t");
  if (x == 1.0) return 1.0;
  if (x == -1.0) return (n % 2 == 0) ? 1.0 : -1.0;
  if (n <= kRecurrenceLimit) {
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int m = 1; m < n; ++m) {
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  return std::cos(n * std::acos(x));
}

double chebyshev_u(int n, double x) {
  if (n < -1) throw std::invalid_argument("chebyshev_u: degree below -1");
  x = checked_arg(x, "chebyshev_u");
  if (n == -1) return 0.0;
  if (x == 1.0) return n + 1.0;
  if (x == -1.0) return (n % 2 == 0) ? n + 1.0 : -(n + 1.0);
  // sin((n+1)t)/sin(t) loses accuracy near the endpoints.
  if (n <= kRecurrenceLimit || std::abs(x) > 0.999) {
    double prev = 0.0, cur = 1.0;
    for (int m = 0; m < n; ++m) {
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  const double theta = std::acos(x);
  return std::sin((n + 1) * theta) / std::sin(theta);
}

std::vector<double> chebyshev_t_sequence(double x, int n_max) {
  x = checked_arg(x, "chebyshev_t_sequence");
  std::vector<double> t(static_cast<std::size_t>(std::max(n_max, -1) + 1));
  if (x == 1.0 || x == -1.0 || x == 0.0) {
    for (std::size_t n = 0; n < t.size(); ++n) {
      if (x == 1.0) t[n] = 1.0;
      else if (x == -1.0) t[n] = (n % 2 == 0) ? 1.0 : -1.0;
      else t[n] = (n % 2 == 1) ? 0.0 : ((n / 2) % 2 == 0 ? 1.0 : -1.0);
    }
    return t;
  }
  const double theta = std::acos(x);
  for (std::size_t n = 0; n < t.size(); ++n) t[n] = std::cos(static_cast<double>(n) * theta);
  return t;
}

double integral_t(int n) {
  if (n < 0) throw std::invalid_argument("integral_t: negative degree");
  if (n % 2 != 0) return 0.0;
  const double nn = n;
  return -2.0 / (nn * nn - 1.0);
}

double integral_u(int n) {
  if (n < 0 || n % 2 != 0) return 0.0;
  return 2.0 / (n + 1.0);
}

std::vector<double> difference_quotient_coeffs(int n, double y) {
  if (n < 1) throw std::invalid_argument("difference_quotient_coeffs: n must be positive");
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int j = 0; j + 2 <= n; ++j) c[j] = 2.0 * chebyshev_t(n - 1 - j, y);
  c[n - 1] = 1.0;
  return c;
}

NodeGrid::NodeGrid(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("NodeGrid: negative degree");
  nodes_.resize(static_cast<std::size_t>(degree) + 1);
  if (degree == 0) {
    nodes_[0] = 1.0;
    return;
  }
  // sin form keeps the grid symmetric to the last bit and pins the centre at 0.
  for (int j = 0; j <= degree; ++j) {
    nodes_[j] = std::sin(std::numbers::pi * (degree - 2.0 * j) / (2.0 * degree));
  }
}

template <class Scalar>
ChebInterpolant<Scalar>::ChebInterpolant(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("ChebInterpolant: empty coefficient list");
}

template <class Scalar>
Scalar ChebInterpolant<Scalar>::operator()(double x) const {
  Scalar b1{}, b2{};
  for (std::size_t n = coeffs_.size(); n-- > 1;) {
    const Scalar b0 = coeffs_[n] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

template class ChebInterpolant<double>;
template class ChebInterpolant<cplx>;

ChebInterpolant<double> interpolate(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("interpolate: need N + 1 >= 2 samples");
  return from_dct(fft::dct1(samples), samples.size());
}

ChebInterpolant<cplx> interpolate(std::span<const cplx> samples) {
  if (samples.size() < 2) throw std::invalid_argument("interpolate: need N + 1 >= 2 samples");
  std::vector<double> re(samples.size()), im(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    re[j] = samples[j].real();
    im[j] = samples[j].imag();
  }
  const auto cr = fft::dct1(re);
  const auto ci = fft::dct1(im);
  std::vector<cplx> y(samples.size());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = {cr[j], ci[j]};
  return from_dct(std::move(y), samples.size());
}

}  // namespace logfcc
