#include "logfcc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace logfcc::oracle {
namespace {

using ld = long double;
using cld = std::complex<ld>;

constexpr ld kPi = std::numbers::pi_v<ld>;

// Smooth part of the theta integrand, given theta; includes the sin(theta)
// Jacobian.
using ThetaFunction = std::function<cld(ld theta)>;

template <unsigned Points>
cld gauss_panel(const GradedMesh::Panel& p, ld lo, ld hi, const std::function<cld(ld, ld)>& g) {
  using rule = boost::math::quadrature::gauss<ld, Points>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  const ld c = (lo + hi) / 2, h = (hi - lo) / 2;
  cld sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      sum += w[i] * g(p.anchor, c);
    } else {
      sum += w[i] * (g(p.anchor, c + h * x[i]) + g(p.anchor, c - h * x[i]));
    }
  }
  return sum * h;
}

void add_graded(std::vector<GradedMesh::Panel>& out, ld anchor, ld length, int direction, double ratio,
                double min_width) {
  // Offsets measured away from the anchor; direction = +1 grows toward larger theta.
  ld outer = length;
  while (outer > min_width) {
    const ld inner = outer * ratio;
    if (direction > 0) out.push_back({anchor, inner, outer});
    else out.push_back({anchor, -outer, -inner});
    outer = inner;
  }
  if (direction > 0) out.push_back({anchor, 0, outer});
  else out.push_back({anchor, -outer, 0});
}

}  // namespace

GradedMesh::GradedMesh(std::vector<double> anchors, double ratio, double min_width, double max_width) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("GradedMesh: ratio must lie in (0, 1)");
  if (!(min_width > 0.0) || !(max_width > 0.0)) throw std::invalid_argument("GradedMesh: widths must be positive");
  std::vector<ld> singular;
  for (double a : anchors) {
    if (a < 0.0 || a > std::numbers::pi) throw std::domain_error("GradedMesh: anchor outside [0, pi]");
    singular.push_back(a);
  }
  std::sort(singular.begin(), singular.end());
  singular.erase(std::unique(singular.begin(), singular.end()), singular.end());

  std::vector<ld> breaks = singular;
  breaks.push_back(0);
  breaks.push_back(kPi);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto is_singular = [&](ld t) { return std::binary_search(singular.begin(), singular.end(), t); };

  std::vector<Panel> coarse;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const ld a = breaks[i], b = breaks[i + 1];
    const bool sa = is_singular(a), sb = is_singular(b);
    if (sa && sb) {
      const ld half = (b - a) / 2;
      add_graded(coarse, a, half, +1, ratio, min_width);
      add_graded(coarse, b, half, -1, ratio, min_width);
    } else if (sa) {
      add_graded(coarse, a, b - a, +1, ratio, min_width);
    } else if (sb) {
      add_graded(coarse, b, b - a, -1, ratio, min_width);
    } else {
      coarse.push_back({a, 0, b - a});
    }
  }
  for (const auto& p : coarse) {
    const ld width = p.hi - p.lo;
    const auto pieces = static_cast<std::size_t>(std::ceil(width / static_cast<ld>(max_width)));
    if (pieces <= 1) {
      panels_.push_back(p);
      continue;
    }
    const ld step = width / static_cast<ld>(pieces);
    for (std::size_t j = 0; j < pieces; ++j) {
      const ld lo = p.lo + step * static_cast<ld>(j);
      const ld hi = (j + 1 == pieces) ? p.hi : lo + step;
      panels_.push_back({p.anchor, lo, hi});
    }
  }
}

double GradedMesh::smallest_width() const {
  ld w = INFINITY;
  for (const auto& p : panels_) w = std::min(w, p.hi - p.lo);
  return static_cast<double>(w);
}

namespace {

ReferenceValue integrate_theta(const ThetaFunction& smooth, double alpha, double k, std::vector<double> anchors,
                               double bandwidth, double tol, double ratio, double min_width) {
  if (!(std::abs(alpha) <= 1.0)) throw std::domain_error("oracle: alpha must lie in [-1, 1]");
  const ld theta_alpha = std::acos(static_cast<ld>(alpha));
  anchors.push_back(static_cast<double>(theta_alpha));
  const double max_width = std::min(0.5, 4.0 * std::numbers::pi / (std::abs(k) + bandwidth + 1.0));
  const GradedMesh mesh(anchors, ratio, min_width, max_width);

  const ld kk = k;
  auto g = [&](ld anchor, ld delta) -> cld {
    const ld theta = anchor + delta;
    // cos(theta) - alpha = -2 sin((theta + theta_alpha)/2) sin((theta - theta_alpha)/2)
    const ld offset = (anchor - theta_alpha) + delta;
    const ld diff = -2 * std::sin(theta_alpha + offset / 2) * std::sin(offset / 2);
    const ld logterm = 2 * std::log(std::abs(diff));
    const ld phase = kk * std::cos(theta);
    return smooth(theta) * logterm * cld(std::cos(phase), std::sin(phase));
  };

  cld low = 0, high = 0;
  for (const auto& p : mesh.panels()) {
    low += gauss_panel<20>(p, p.lo, p.hi, g);
    const ld mid = (p.lo + p.hi) / 2;
    high += gauss_panel<30>(p, p.lo, mid, g) + gauss_panel<30>(p, mid, p.hi, g);
  }
  ReferenceValue r;
  r.value = cplx(static_cast<double>(high.real()), static_cast<double>(high.imag()));
  r.achieved = static_cast<double>(std::abs(high - low));
  r.converged = r.achieved <= tol * std::max(std::abs(r.value), 1e-300);
  r.panels = mesh.panels().size();
  return r;
}

}  // namespace

ReferenceValue reference_integral(const Integrand& f, double alpha, double k, const Options& options) {
  std::vector<double> anchors;
  for (double s : options.singular_points) {
    if (std::abs(s) > 1.0) throw std::domain_error("oracle: singular point outside [-1, 1]");
    anchors.push_back(std::acos(s));
  }
  auto smooth = [&f](ld theta) -> cld {
    const cplx v = f(static_cast<double>(std::cos(theta)));
    return cld(v.real(), v.imag()) * std::sin(theta);
  };
  return integrate_theta(smooth, alpha, k, anchors, options.bandwidth, options.tol, options.ratio,
                         options.min_width);
}

ReferenceValue reference_weight(double alpha, double k, int n, WeightKind kind, double tol) {
  if (n < 0) throw std::invalid_argument("oracle: negative index");
  const ld nn = n;
  ThetaFunction smooth;
  if (kind == WeightKind::xi) {
    smooth = [nn](ld theta) -> cld { return std::cos(nn * theta) * std::sin(theta); };
  } else {
    // U_n(cos theta) sin(theta) = sin((n+1) theta)
    smooth = [nn](ld theta) -> cld { return std::sin((nn + 1) * theta); };
  }
  const Options defaults;
  return integrate_theta(smooth, alpha, k, {}, static_cast<double>(n) + 1.0, tol, defaults.ratio,
                         defaults.min_width);
}

Replay highprec_recurrence_replay(double alpha, int degree) {
  using mp = boost::multiprecision::cpp_bin_float_50;
  if (!(std::abs(alpha) <= 1.0)) throw std::domain_error("oracle: alpha must lie in [-1, 1]");
  if (degree < 0) throw std::invalid_argument("oracle: negative degree");
  const mp a = alpha;
  auto xlogx = [](const mp& x) -> mp { return x == 0 ? mp(0) : mp(x * log(x)); };
  const mp minus = xlogx(1 - a), plus = xlogx(1 + a);

  std::vector<mp> eta(static_cast<std::size_t>(degree) + 1);
  eta[0] = 2 * (minus + plus) - 4;
  for (int n = 1; n <= degree; ++n) {
    const mp nn = n;
    const mp scale = 4 / (nn + 1);
    const mp gamma = (n % 2 == 0) ? mp(scale * (minus + plus + 2 / (nn * nn - 1))) : mp(scale * (minus - plus));
    const mp prev2 = n >= 2 ? eta[n - 2] : mp(0);
    eta[n] = (2 * a * nn / (nn + 1)) * eta[n - 1] - ((nn - 1) / (nn + 1)) * prev2 + gamma;
  }
  Replay out;
  out.eta.resize(eta.size());
  out.xi.resize(eta.size());
  for (std::size_t n = 0; n < eta.size(); ++n) {
    out.eta[n] = static_cast<double>(eta[n]);
    const mp xi = (n == 0) ? eta[0] : mp((eta[n] - (n >= 2 ? eta[n - 2] : mp(0))) / 2);
    out.xi[n] = static_cast<double>(xi);
  }
  return out;
}

}  // namespace logfcc::oracle
