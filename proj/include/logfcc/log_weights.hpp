#pragma once

#include <span>
#include <vector>

namespace logfcc {

/// Weights of the logarithmic kernel without oscillation, for n = 0..N:
///   eta_n = int_{-1}^{1} U_n(x) log((x - alpha)^2) dx,
///   xi_n  = int_{-1}^{1} T_n(x) log((x - alpha)^2) dx.
struct LogWeightTable {
  double alpha = 0.0;
  int degree = 0;
  std::vector<double> eta;
  std::vector<double> xi;
};

/// Closed form of eta_0 = xi_0.
double eta0_nonosc(double alpha);

/// Inhomogeneous term of the eta recurrence, n >= 1.
double gamma_nonosc(double alpha, int n);

/// eta_0..eta_N by the forward three-term recurrence
///   eta_n = (2 alpha n/(n+1)) eta_{n-1} - ((n-1)/(n+1)) eta_{n-2} + gamma_n.
/// Throws std::domain_error when |alpha| > 1.
std::vector<double> eta_nonosc(double alpha, int degree);

/// Same recurrence with perturbations[n] added right after eta_n is formed
/// (missing entries count as zero). Used by the stability studies.
std::vector<double> eta_nonosc_perturbed(double alpha, int degree, std::span<const double> perturbations);

/// alpha = 0 shortcut over even indices only; odd entries are exactly zero.
std::vector<double> eta_nonosc_even(int degree);

/// xi_0 = eta_0, xi_n = (eta_n - eta_{n-2})/2 with eta_{-1} = 0.
template <class Scalar>
std::vector<Scalar> xi_from_eta(std::span<const Scalar> eta) {
  std::vector<Scalar> xi(eta.size());
  for (std::size_t n = 0; n < eta.size(); ++n) {
    xi[n] = (n == 0) ? eta[0] : 0.5 * (eta[n] - (n >= 2 ? eta[n - 2] : Scalar{}));
  }
  return xi;
}

LogWeightTable xi_nonosc(double alpha, int degree);

}  // namespace logfcc
