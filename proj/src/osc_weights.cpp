#include "logfcc/osc_weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "logfcc/chebyshev.hpp"
#include "logfcc/fft.hpp"
#include "logfcc/log_weights.hpp"
#include "logfcc/special_functions.hpp"

namespace logfcc {
namespace {

constexpr int kFftConvolutionMin = 64;

// z / (ik), keeping real and imaginary parts separate so that purely real or
// purely imaginary inputs stay that way.
cplx div_ik(cplx z, double k) { return {z.imag() / k, -z.real() / k}; }

// i^m
cplx i_pow(int m) {
  switch (m % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int floor_k(double k) { return static_cast<int>(std::floor(k)); }

void check_alpha(double alpha) {
  if (!(std::abs(alpha) <= 1.0)) throw std::domain_error("osc weights: alpha must lie in [-1, 1]");
}

void check_k(double k) {
  if (!(k > 2.0)) throw std::invalid_argument("osc weights: k must exceed 2");
}

// int U_n(x) e^{ikx} v(x) dx from the Jacobi-Anger expansion
//   e^{ikx} = J_0(k) + 2 sum_m i^m J_m(k) T_m(x)
// and T_m U_n = (U_{n+m} + U_{n-m})/2 for m <= n+1, (U_{n+m} - U_{m-n-2})/2 otherwise,
// given moments[j] = int U_j v dx.
cplx jacobi_anger_moment(int n, std::span<const double> moments, std::span<const double> bessel) {
  auto moment = [&](int j) { return j < 0 ? 0.0 : moments[static_cast<std::size_t>(j)]; };
  const int terms = static_cast<int>(bessel.size()) - 1;
  cplx sum = 0.0;
  // Smallest terms first.
  for (int m = terms; m >= 1; --m) {
    const double pair = (m <= n + 1) ? moment(n + m) + moment(n - m) : moment(n + m) - moment(m - n - 2);
    sum += i_pow(m) * (bessel[m] * pair);
  }
  return sum + bessel[0] * moment(n);
}

// Fills y[floor(k)..N-1] for y_n + (2n/(ik)) y_{n-1} - y_{n-2} = g[n], given
// y[floor(k)-1] (or y_{-1} = 0) and y[N].
// Solves the rows of oliver_system in place over y[K..N-1]. The off-diagonals
// are -1 and 1 and |diag| = 2n/k > 2 for n > k, so only the pivots are stored.
template <class Gamma>
void oliver_fill(std::vector<cplx>& y, double k, Gamma gamma) {
  const int n_top = static_cast<int>(y.size()) - 1;
  const int kf = floor_k(k);
  if (n_top <= kf) return;
  const auto size = static_cast<std::size_t>(n_top - kf);
  std::vector<cplx> inv_pivot(size);
  cplx carry = kf >= 1 ? y[kf - 1] : cplx{};
  for (std::size_t i = 0; i < size; ++i) {
    const int n = kf + 1 + static_cast<int>(i);
    const cplx diag(0.0, -2.0 * n / k);
    inv_pivot[i] = 1.0 / (i == 0 ? diag : diag + inv_pivot[i - 1]);
    cplx r = gamma(n) + carry;
    if (i + 1 == size) r -= y[n_top];
    carry = r * inv_pivot[i];
    y[kf + i] = carry;
  }
  for (std::size_t i = size - 1; i-- > 0;) y[kf + i] -= inv_pivot[i] * y[kf + i + 1];
}

std::vector<double> u_moments(int n_max) {
  std::vector<double> mu(static_cast<std::size_t>(n_max) + 1);
  for (int j = 0; j <= n_max; ++j) mu[j] = integral_u(j);
  return mu;
}

std::vector<cplx> rho_with_bessel(double k, int degree, std::span<const double> bessel) {
  std::vector<cplx> rho(static_cast<std::size_t>(degree) + 1);
  const cplx ep = std::polar(1.0, k);
  const cplx em = std::conj(ep);
  const int kf = floor_k(k);

  auto rhs = [&](int n) { return 2.0 * div_ik(n % 2 == 0 ? ep - em : ep + em, k); };

  rho[0] = 2.0 * std::sin(k) / k;
  const int forward_top = std::min(degree, kf - 1);
  for (int n = 1; n <= forward_top; ++n) {
    const cplx prev2 = n >= 2 ? rho[n - 2] : cplx{};
    rho[n] = rhs(n) - 2.0 * static_cast<double>(n) * div_ik(rho[n - 1], k) + prev2;
  }
  if (degree <= kf - 1) return rho;

  const int terms = static_cast<int>(bessel.size()) - 1;
  const auto mu = u_moments(degree + terms);
  rho[degree] = jacobi_anger_moment(degree, mu, bessel);

  oliver_fill(rho, k, rhs);
  return rho;
}

// sum_{j=0}^{n-2} T_{n-1-j}(alpha) rho_j for n = 1..N, stored at index n.
std::vector<cplx> chebyshev_rho_sums(double alpha, std::span<const cplx> rho, ConvolutionPath path) {
  const int degree = static_cast<int>(rho.size());  // rho holds 0..N-1
  std::vector<cplx> s(static_cast<std::size_t>(degree) + 1);
  if (degree == 0) return s;

  const bool structured = alpha == 1.0 || alpha == -1.0 || alpha == 0.0;
  if (path == ConvolutionPath::automatic) {
    path = structured ? ConvolutionPath::structured
                      : (degree < kFftConvolutionMin ? ConvolutionPath::direct : ConvolutionPath::fft);
  }
  if (path == ConvolutionPath::structured && !structured) path = ConvolutionPath::direct;

  switch (path) {
    case ConvolutionPath::structured: {
      if (alpha == 0.0) {
        // S_{n+2} = -S_n - rho_{n-1}, S_1 = S_2 = 0.
        for (int n = 3; n <= degree; ++n) s[n] = -s[n - 2] - rho[n - 3];
      } else {
        const double sign = alpha;  // T_m(+-1) = (+-1)^m
        cplx acc = 0.0;
        double pj = 1.0;  // sign^j
        for (int n = 2; n <= degree; ++n) {
          acc += pj * rho[n - 2];
          pj *= sign;
          // sum_j sign^{n-1-j} rho_j = sign^{n-1} sum_j sign^j rho_j
          s[n] = ((n - 1) % 2 == 0 || sign > 0.0) ? acc : -acc;
        }
      }
      break;
    }
    case ConvolutionPath::direct: {
      const auto t = chebyshev_t_sequence(alpha, degree);
      for (int n = 2; n <= degree; ++n) {
        cplx acc = 0.0;
        for (int j = 0; j <= n - 2; ++j) acc += t[n - 1 - j] * rho[j];
        s[n] = acc;
      }
      break;
    }
    case ConvolutionPath::fft:
    default: {
      auto t = chebyshev_t_sequence(alpha, degree - 1);
      t[0] = 0.0;
      const auto conv = fft::convolve(t, rho, static_cast<std::size_t>(degree));
      for (int n = 1; n <= degree; ++n) s[n] = conv[n - 1];
      s[1] = 0.0;
      break;
    }
  }
  return s;
}

// gamma indexed 0..N with gamma[0] unused.
std::vector<cplx> gamma_indexed(double alpha, double k, std::span<const cplx> rho, cplx eta0, ConvolutionPath path) {
  const int degree = static_cast<int>(rho.size());
  std::vector<cplx> gamma(static_cast<std::size_t>(degree) + 1);
  if (degree == 0) return gamma;

  const auto t = chebyshev_t_sequence(alpha, degree);
  const auto sums = chebyshev_rho_sums(alpha, rho, path);
  const cplx ep = std::polar(1.0, k);
  const cplx em = std::conj(ep);
  const double log_minus = 1.0 - alpha == 0.0 ? 0.0 : 2.0 * std::log(1.0 - alpha);
  const double log_plus = 1.0 + alpha == 0.0 ? 0.0 : 2.0 * std::log(1.0 + alpha);

  for (int n = 1; n <= degree; ++n) {
    const double parity = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
    // (T_n(x) - T_n(alpha)) log((x-alpha)^2) vanishes at an endpoint that coincides with alpha.
    const double right = 1.0 - alpha == 0.0 ? 0.0 : (1.0 - t[n]) * log_minus;
    const double left = 1.0 + alpha == 0.0 ? 0.0 : (parity + t[n]) * log_plus;
    const cplx boundary = right * ep + left * em;
    gamma[n] = 2.0 * div_ik(boundary, k) - 4.0 * div_ik(2.0 * sums[n] + rho[n - 1], k) + 2.0 * t[n] * eta0;
  }
  return gamma;
}

struct OscInputs {
  std::vector<double> bessel;
  std::vector<cplx> rho;
  cplx eta0;
  std::vector<cplx> gamma;  // 0..N
};

OscInputs osc_inputs(double alpha, double k, int degree, ConvolutionPath path = ConvolutionPath::automatic) {
  OscInputs in;
  in.bessel = bessel_j_sequence(k, tail_terms(k));
  in.rho = rho_with_bessel(k, std::max(degree - 1, 0), in.bessel);
  if (degree == 0) in.rho.clear();
  in.eta0 = eta0_osc(alpha, k);
  in.gamma = gamma_indexed(alpha, k, in.rho, in.eta0, path);
  return in;
}

void forward_fill(std::vector<cplx>& eta, double k, int top, std::span<const cplx> gamma,
                  std::span<const cplx> perturbations) {
  auto bump = [&](int n) { return static_cast<std::size_t>(n) < perturbations.size() ? perturbations[n] : cplx{}; };
  eta[0] += bump(0);
  for (int n = 1; n <= top; ++n) {
    const cplx prev2 = n >= 2 ? eta[n - 2] : cplx{};
    eta[n] = gamma[n] - 2.0 * static_cast<double>(n) * div_ik(eta[n - 1], k) + prev2 + bump(n);
  }
}

cplx eta_tail_with(double alpha, int degree, std::span<const double> bessel) {
  const int terms = static_cast<int>(bessel.size()) - 1;
  const auto eta = eta_nonosc(alpha, degree + terms);
  return jacobi_anger_moment(degree, eta, bessel);
}

std::vector<cplx> eta_pipeline(double alpha, double k, int degree, std::span<const cplx> perturbations) {
  check_alpha(alpha);
  check_k(k);
  if (degree < 0) throw std::invalid_argument("osc weights: negative degree");
  const auto in = osc_inputs(alpha, k, degree);
  std::vector<cplx> eta(static_cast<std::size_t>(degree) + 1);
  eta[0] = in.eta0;
  const int kf = floor_k(k);
  forward_fill(eta, k, std::min(degree, kf - 1), in.gamma, perturbations);
  if (degree >= kf) {
    eta[degree] = eta_tail_with(alpha, degree, in.bessel);
    oliver_fill(eta, k, [&](int n) { return in.gamma[n]; });
  }
  return eta;
}

OscWeightTable make_table(double alpha, double k, std::vector<cplx> eta) {
  OscWeightTable table;
  table.alpha = alpha;
  table.k = k;
  table.degree = static_cast<int>(eta.size()) - 1;
  table.xi = xi_from_eta<cplx>(eta);
  table.eta = std::move(eta);
  return table;
}

}  // namespace

int tail_terms(double k) { return 25 + static_cast<int>(std::ceil(std::numbers::e * std::abs(k) / 2.0)); }

std::vector<cplx> rho_sequence(double k, int degree) {
  if (!(k > 0.0)) throw std::domain_error("rho_sequence: k must be positive");
  if (degree < 0) throw std::invalid_argument("rho_sequence: negative degree");
  const auto bessel = bessel_j_sequence(k, tail_terms(k));
  return rho_with_bessel(k, degree, bessel);
}

cplx eta0_osc(double alpha, double k) {
  check_alpha(alpha);
  if (!(k > 0.0)) throw std::domain_error("eta0_osc: k must be positive");
  // eta_0 = 2 e^{ik alpha} (F(1 - alpha) + conj F(1 + alpha)), F(b) = int_0^b log t e^{ikt} dt.
  auto half = [k](double b) -> cplx {
    if (b == 0.0) return 0.0;
    const double kb = k * b;
    const cplx bracket = std::log(b) * (std::polar(1.0, kb) - 1.0) + (euler_gamma - ci_minus_log(kb)) -
                         cplx(0.0, si(kb).value);
    return div_ik(bracket, k);
  };
  return 2.0 * std::polar(1.0, k * alpha) * (half(1.0 - alpha) + std::conj(half(1.0 + alpha)));
}

std::vector<cplx> gamma_osc(double alpha, double k, std::span<const cplx> rho, cplx eta0, ConvolutionPath path) {
  check_alpha(alpha);
  auto g = gamma_indexed(alpha, k, rho, eta0, path);
  return {g.begin() + 1, g.end()};
}

std::vector<cplx> gamma_osc(double alpha, double k, int degree, ConvolutionPath path) {
  check_alpha(alpha);
  check_k(k);
  if (degree < 1) return {};
  const auto in = osc_inputs(alpha, k, degree, path);
  return {in.gamma.begin() + 1, in.gamma.end()};
}

std::vector<cplx> eta_forward_perturbed(double alpha, double k, int m, std::span<const cplx> perturbations) {
  check_alpha(alpha);
  check_k(k);
  if (m < 0 || m > floor_k(k) - 1) {
    throw std::invalid_argument("eta_forward: the forward recurrence is only used up to floor(k) - 1");
  }
  const auto in = osc_inputs(alpha, k, m);
  std::vector<cplx> eta(static_cast<std::size_t>(m) + 1);
  eta[0] = in.eta0;
  forward_fill(eta, k, m, in.gamma, perturbations);
  return eta;
}

std::vector<cplx> eta_forward(double alpha, double k, int m) { return eta_forward_perturbed(alpha, k, m, {}); }

cplx eta_tail(double alpha, double k, int degree, int terms) {
  check_alpha(alpha);
  if (!(k > 0.0)) throw std::domain_error("eta_tail: k must be positive");
  if (degree < 0) throw std::invalid_argument("eta_tail: negative degree");
  const auto bessel = bessel_j_sequence(k, terms > 0 ? terms : tail_terms(k));
  return eta_tail_with(alpha, degree, bessel);
}

TridiagonalSystem<cplx> oliver_system(double k, int degree, std::span<const cplx> gamma, cplx eta_below, cplx eta_top) {
  // Unknowns y_{K}..y_{N-1}; row i is the recurrence at n = K + 1 + i:
  //   -y_{n-2} + (2n/(ik)) y_{n-1} + y_n = gamma_n.
  const int kf = floor_k(k);
  const auto size = static_cast<std::size_t>(std::max(degree - kf, 0));
  if (gamma.size() < size) throw std::invalid_argument("oliver_system: too few gamma terms");
  TridiagonalSystem<cplx> sys(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double n = kf + 1.0 + static_cast<double>(i);
    sys.sub[i] = -1.0;
    sys.diag[i] = cplx(0.0, -2.0 * n / k);
    sys.super[i] = 1.0;
    sys.rhs[i] = gamma[i];
  }
  if (size > 0) {
    sys.rhs[0] += eta_below;
    sys.rhs[size - 1] -= eta_top;
  }
  return sys;
}

OscWeightTable eta_oliver(double alpha, double k, int degree) {
  if (degree < floor_k(k)) throw std::invalid_argument("eta_oliver: needs N >= floor(k)");
  return make_table(alpha, k, eta_pipeline(alpha, k, degree, {}));
}

std::vector<cplx> eta_osc_perturbed(double alpha, double k, int degree, std::span<const cplx> perturbations) {
  return eta_pipeline(alpha, k, degree, perturbations);
}

OscWeightTable osc_weights(double alpha, double k, int degree) {
  return make_table(alpha, k, eta_pipeline(alpha, k, degree, {}));
}

OscWeightTable weights(double alpha, double k, int degree) {
  check_alpha(alpha);
  if (degree < 0) throw std::invalid_argument("weights: negative degree");
  if (k < 0.0) {
    auto table = weights(alpha, -k, degree);
    for (auto& v : table.eta) v = std::conj(v);
    for (auto& v : table.xi) v = std::conj(v);
    table.k = k;
    return table;
  }
  if (k > 2.0) return osc_weights(alpha, k, degree);
  if (k == 0.0) {
    const auto eta = eta_nonosc(alpha, degree);
    return make_table(alpha, k, std::vector<cplx>(eta.begin(), eta.end()));
  }
  const auto bessel = bessel_j_sequence(k, tail_terms(k));
  const auto moments = eta_nonosc(alpha, degree + static_cast<int>(bessel.size()));
  std::vector<cplx> eta(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) eta[n] = jacobi_anger_moment(n, moments, bessel);
  return make_table(alpha, k, std::move(eta));
}

}  // namespace logfcc
