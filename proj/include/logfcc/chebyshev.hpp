#pragma once

#include <complex>
#include <span>
#include <vector>

namespace logfcc {

using cplx = std::complex<double>;

/// T_n(x) = cos(n arccos x). Throws std::domain_error for |x| > 1 + 1e-14.
double chebyshev_t(int n, double x);

/// U_n(x) = T'_{n+1}(x)/(n+1), with U_{-1} = 0.
double chebyshev_u(int n, double x);

/// T_0(x), ..., T_{n_max}(x).
std::vector<double> chebyshev_t_sequence(double x, int n_max);

/// Integral of T_n over [-1, 1].
double integral_t(int n);

/// Integral of U_n over [-1, 1]: 2/(n+1) for even n, 0 otherwise.
double integral_u(int n);

// Coefficients of (T_n(x) - T_n(y))/(x - y) in the basis U_0(x), ..., U_{n-1}(x).
std::vector<double> difference_quotient_coeffs(int n, double y);

/// Clenshaw-Curtis nodes cos(j pi / N), j = 0..N, stored from x = 1 down to x = -1.
class NodeGrid {
 public:
  explicit NodeGrid(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t j) const { return nodes_[j]; }
  std::span<const double> nodes() const { return nodes_; }

  /// Index in the 2N grid of node j of this grid.
  static std::size_t refined_index(std::size_t j) { return 2 * j; }

 private:
  int degree_;
  std::vector<double> nodes_;
};

/// Interpolant Q_N f = sum_n c_n T_n. Coefficients carry no halving convention.
template <class Scalar>
class ChebInterpolant {
 public:
  ChebInterpolant() = default;
  explicit ChebInterpolant(std::vector<Scalar> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  /// Clenshaw evaluation.
  Scalar operator()(double x) const;

 private:
  std::vector<Scalar> coeffs_;
};

extern template class ChebInterpolant<double>;
extern template class ChebInterpolant<cplx>;

/// Samples are f(cos(j pi / N)), j = 0..N. Uses a type-I discrete cosine
/// transform, O(N log N). Throws std::invalid_argument for fewer than 2 samples.
ChebInterpolant<double> interpolate(std::span<const double> samples);
ChebInterpolant<cplx> interpolate(std::span<const cplx> samples);

}  // namespace logfcc
