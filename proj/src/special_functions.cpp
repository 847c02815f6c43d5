#include "logfcc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "logfcc/tridiagonal.hpp"

namespace logfcc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Si/Ci branch points. The Taylor series loses about log10(max term) digits,
// which stays below one digit up to t = 4; the asymptotic series has its
// smallest term near 2n = t, below 1e-17 from t = 40 on.
constexpr double kSiCiSeriesMax = 4.0;
constexpr double kSiCiAsymptoticMin = 40.0;

// J0/J1 branch points: power series up to 4, Hankel expansion from 25,
// Miller's backward recurrence in between.
constexpr double kBesselSeriesMax = 4.0;
constexpr double kBesselAsymptoticMin = 25.0;

double si_series(double t) {
  const double t2 = t * t;
  double term = t;  // (-1)^n t^{2n+1} / (2n+1)!
  double sum = t;
  for (int n = 1; n < 200; ++n) {
    term *= -t2 / ((2.0 * n) * (2.0 * n + 1.0));
    const double add = term / (2.0 * n + 1.0);
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum) * 0.1) break;
  }
  return sum;
}

// sum_{n>=1} (-1)^n t^{2n} / (2n (2n)!) = int_0^t (cos x - 1)/x dx
double cin_series(double t) {
  const double t2 = t * t;
  double term = 1.0;  // (-1)^n t^{2n} / (2n)!
  double sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    term *= -t2 / ((2.0 * n - 1.0) * (2.0 * n));
    const double add = term / (2.0 * n);
    sum += add;
    if (std::abs(add) < kEps * std::max(std::abs(sum), 1e-300) * 0.1) break;
  }
  return sum;
}

// E1(i t) = -Ci(t) + i (Si(t) - pi/2), by the modified Lentz method.
std::complex<double> e1_imag_cf(double t) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, t);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 10000; ++i) {
    const double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  return C(std::cos(t), -std::sin(t)) * h;
}

// Auxiliary functions f, g with Si = pi/2 - f cos t - g sin t, Ci = f sin t - g cos t.
void fg_asymptotic(double t, double& f, double& g) {
  const double inv2 = 1.0 / (t * t);
  double fsum = 1.0, gsum = 1.0;
  double fterm = 1.0, gterm = 1.0;
  double last = INFINITY;
  for (int n = 1; n < 100; ++n) {
    const double fnext = -fterm * (2.0 * n - 1.0) * (2.0 * n) * inv2;
    const double gnext = -gterm * (2.0 * n) * (2.0 * n + 1.0) * inv2;
    const double size = std::abs(fnext) + std::abs(gnext);
    if (size > last) break;
    last = size;
    fterm = fnext;
    gterm = gnext;
    fsum += fterm;
    gsum += gterm;
    if (size < kEps * 1e-2) break;
  }
  f = fsum / t;
  g = gsum / (t * t);
}

double bessel_series(int nu, double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = (nu == 0) ? 1.0 : h;
  double sum = term;
  for (int m = 1; m < 300; ++m) {
    term *= -h2 / (static_cast<double>(m) * (m + nu));
    sum += term;
    if (std::abs(term) < kEps * 0.01 * std::max(std::abs(sum), 1e-300)) break;
  }
  return sum;
}

// Hankel's expansion, J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - (nu/2 + 1/4) pi.
double bessel_hankel(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0;  // a_k(nu) / x^k
  double last = INFINITY;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) > last) break;
    last = std::abs(term);
    // P collects even k with sign (-1)^{k/2}; Q odd k with sign (-1)^{(k-1)/2}.
    const int r = k % 4;
    if (r == 0) p += term;
    else if (r == 2) p -= term;
    else if (r == 1) q += term;
    else q -= term;
    if (last < kEps * 1e-2) break;
  }
  const double c = std::cos(x), s = std::sin(x);
  const double root_half = std::numbers::sqrt2 / 2.0;
  double cos_chi, sin_chi;
  if (nu == 0) {  // chi = x - pi/4
    cos_chi = root_half * (c + s);
    sin_chi = root_half * (s - c);
  } else {  // chi = x - 3 pi/4
    cos_chi = root_half * (s - c);
    sin_chi = -root_half * (s + c);
  }
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

// Miller's algorithm: backward recurrence from well above x, normalized by
// J_0 + 2 sum_m J_{2m} = 1. Returns J_0 and J_1.
std::pair<double, double> bessel_miller01(double x) {
  int start = static_cast<int>(x) + 40;
  if (start % 2 != 0) ++start;
  double next = 0.0, cur = 1e-30;
  double norm = 0.0;
  double j0 = 0.0, j1 = 0.0;
  for (int n = start; n > 0; --n) {
    const double prev = (2.0 * n / x) * cur - next;
    next = cur;
    cur = prev;  // cur now holds order n-1
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
    }
    if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * cur;
    if (n - 1 == 1) j1 = cur;
  }
  j0 = cur;
  norm += j0;
  return {j0 / norm, j1 / norm};
}

// Uniform asymptotic form J_nu(nu sech a) ~ exp(nu (tanh a - a)) / sqrt(2 pi nu tanh a), nu > x.
double bessel_debye_tail(double nu, double x) {
  const double a = std::acosh(nu / x);
  const double th = std::tanh(a);
  return std::exp(nu * (th - a)) / std::sqrt(2.0 * std::numbers::pi * nu * th);
}

SpecialValue bessel_j(int nu, double x) {
  if (x < 0.0) {
    const auto v = bessel_j(nu, -x);
    return {nu == 0 ? v.value : -v.value, v.method};
  }
  if (x <= kBesselSeriesMax) return {bessel_series(nu, x), Method::series};
  if (x >= kBesselAsymptoticMin) return {bessel_hankel(nu, x), Method::asymptotic};
  const auto [j0, j1] = bessel_miller01(x);
  return {nu == 0 ? j0 : j1, Method::recurrence};
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::asymptotic: return "asymptotic";
    case Method::recurrence: return "recurrence";
    case Method::oliver: return "oliver";
    case Method::continued_fraction: return "continued_fraction";
  }
  return "unknown";
}

SpecialValue si(double t) {
  if (std::isnan(t)) return {t, Method::series};
  if (t < 0.0) {
    const auto v = si(-t);
    return {-v.value, v.method};
  }
  if (t <= kSiCiSeriesMax) return {si_series(t), Method::series};
  if (t >= kSiCiAsymptoticMin) {
    double f, g;
    fg_asymptotic(t, f, g);
    return {std::numbers::pi / 2.0 - f * std::cos(t) - g * std::sin(t), Method::asymptotic};
  }
  return {std::numbers::pi / 2.0 + e1_imag_cf(t).imag(), Method::continued_fraction};
}

SpecialValue ci(double t) {
  if (!(t > 0.0)) throw std::domain_error("ci: argument must be positive");
  if (t <= kSiCiSeriesMax) return {euler_gamma + std::log(t) + cin_series(t), Method::series};
  if (t >= kSiCiAsymptoticMin) {
    double f, g;
    fg_asymptotic(t, f, g);
    return {f * std::sin(t) - g * std::cos(t), Method::asymptotic};
  }
  return {-e1_imag_cf(t).real(), Method::continued_fraction};
}

double ci_minus_log(double t) {
  if (!(t > 0.0)) throw std::domain_error("ci_minus_log: argument must be positive");
  if (t <= kSiCiSeriesMax) return euler_gamma + cin_series(t);
  return ci(t).value - std::log(t);
}

SpecialValue bessel_j0(double x) { return bessel_j(0, x); }
SpecialValue bessel_j1(double x) { return bessel_j(1, x); }

std::vector<double> bessel_j_sequence(double k, int m) {
  if (!(k > 0.0)) throw std::domain_error("bessel_j_sequence: k must be positive");
  if (m < 0) throw std::invalid_argument("bessel_j_sequence: negative order count");

  const int kfloor = static_cast<int>(std::floor(k));
  const int tail_terms = 25 + static_cast<int>(std::ceil(std::numbers::e * k / 2.0));
  const int top = std::max(m, tail_terms);

  std::vector<double> j(static_cast<std::size_t>(top) + 1);
  j[0] = bessel_j0(k).value;
  if (top >= 1) j[1] = bessel_j1(k).value;

  // Forward recurrence while the order does not exceed the argument.
  const int forward_top = std::min(kfloor, top);
  for (int n = 1; n < forward_top; ++n) j[n + 1] = (2.0 * n / k) * j[n] - j[n - 1];

  // Orders floor(k)+1 .. top from the row dominant system
  //   J_{n-1} - (2n/k) J_n + J_{n+1} = 0,  n = floor(k)+1 .. top.
  const int first = std::max(kfloor + 1, 2);
  if (first <= top) {
    const auto size = static_cast<std::size_t>(top - first + 1);
    TridiagonalSystem<double> sys(size);
    for (std::size_t i = 0; i < size; ++i) {
      const double n = first + static_cast<double>(i);
      sys.sub[i] = 1.0;
      sys.diag[i] = -2.0 * n / k;
      sys.super[i] = 1.0;
      sys.rhs[i] = 0.0;
    }
    sys.rhs[0] -= j[first - 1];
    sys.rhs[size - 1] -= bessel_debye_tail(top + 1.0, k);
    const auto sol = sys.solve();
    std::copy(sol.begin(), sol.end(), j.begin() + first);
  }

  j.resize(static_cast<std::size_t>(m) + 1);
  return j;
}

}  // namespace logfcc
