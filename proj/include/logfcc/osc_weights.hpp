#pragma once

#include <complex>
#include <span>
#include <vector>

#include "logfcc/tridiagonal.hpp"

namespace logfcc {

using cplx = std::complex<double>;

/// Weights of the oscillatory logarithmic kernel for n = 0..N:
///   eta_n(k) = int U_n(x) log((x - alpha)^2) exp(ikx) dx,
///   xi_n(k)  = int T_n(x) log((x - alpha)^2) exp(ikx) dx.
struct OscWeightTable {
  double alpha = 0.0;
  double k = 0.0;
  int degree = 0;
  std::vector<cplx> eta;
  std::vector<cplx> xi;
};

/// Number of Bessel terms kept in the Jacobi-Anger tail, 25 + ceil(e k / 2).
int tail_terms(double k);

/// rho_j(k) = int U_j(x) exp(ikx) dx for j = 0..N, in O(N + k).
///
/// Uses rho_n + (2n/(ik)) rho_{n-1} - rho_{n-2} = (2/(ik)) (e^{ik} - (-1)^n e^{-ik})
/// forward below floor(k) and as a tridiagonal system above it.
std::vector<cplx> rho_sequence(double k, int degree);

/// Closed form of eta_0(k) = xi_0(k) in terms of Si and Ci. k > 0.
cplx eta0_osc(double alpha, double k);

enum class ConvolutionPath { automatic, direct, fft, structured };

/// gamma_1(k)..gamma_N(k), the inhomogeneous terms of
///   eta_n + (2n/(ik)) eta_{n-1} - eta_{n-2} = gamma_n.
/// The sums sum_j T_{n-1-j}(alpha) rho_j are one convolution for all n.
std::vector<cplx> gamma_osc(double alpha, double k, int degree, ConvolutionPath path = ConvolutionPath::automatic);

/// Same, with rho_0..rho_{N-1} and eta_0(k) supplied by the caller.
std::vector<cplx> gamma_osc(double alpha, double k, std::span<const cplx> rho, cplx eta0,
                            ConvolutionPath path = ConvolutionPath::automatic);

/// eta_0(k)..eta_M(k) by the forward recurrence, valid for M <= floor(k) - 1.
/// Throws std::invalid_argument when M is beyond that range or k <= 2.
std::vector<cplx> eta_forward(double alpha, double k, int m);

/// As eta_forward, adding perturbations[n] to eta_n right after it is formed.
std::vector<cplx> eta_forward_perturbed(double alpha, double k, int m, std::span<const cplx> perturbations);

/// eta_N(k) from the Jacobi-Anger expansion of exp(ikx) against the
/// non-oscillatory eta_n, truncated after `terms` Bessel functions
/// (0 selects tail_terms(k)).
cplx eta_tail(double alpha, double k, int degree, int terms = 0);

/// The tridiagonal system for eta_{floor(k)}..eta_{N-1}; exposed for inspection.
TridiagonalSystem<cplx> oliver_system(double k, int degree, std::span<const cplx> gamma, cplx eta_below, cplx eta_top);

/// Full table for N >= floor(k): forward segment, tridiagonal solve, tail.
OscWeightTable eta_oliver(double alpha, double k, int degree);

/// Full eta pipeline with perturbations injected into the forward segment
/// entries eta_0..eta_{floor(k)-1}. Any N, k > 2.
std::vector<cplx> eta_osc_perturbed(double alpha, double k, int degree, std::span<const cplx> perturbations);

/// Table for k > 2 and any N; picks the forward-only path when N < floor(k).
OscWeightTable osc_weights(double alpha, double k, int degree);

/// Table for any real k: k = 0 is the plain logarithmic case, 0 < |k| <= 2
/// expands exp(ikx) in Chebyshev polynomials against the non-oscillatory
/// weights, |k| > 2 runs the oscillatory algorithm, and k < 0 is the complex
/// conjugate of the table at |k|.
OscWeightTable weights(double alpha, double k, int degree);

}  // namespace logfcc
