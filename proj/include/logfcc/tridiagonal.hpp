#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace logfcc {

/// Tridiagonal system with row i reading
///   sub[i] x[i-1] + diag[i] x[i] + super[i] x[i+1] = rhs[i].
/// sub[0] and super[n-1] are ignored.
template <class T>
struct TridiagonalSystem {
  std::vector<T> sub, diag, super, rhs;

  explicit TridiagonalSystem(std::size_t n = 0) : sub(n), diag(n), super(n), rhs(n) {}

  std::size_t size() const { return diag.size(); }

  /// Smallest |diag[i]| - |sub[i]| - |super[i]| over the rows.
  double dominance_margin() const {
    double margin = INFINITY;
    for (std::size_t i = 0; i < size(); ++i) {
      double off = 0.0;
      if (i > 0) off += std::abs(sub[i]);
      if (i + 1 < size()) off += std::abs(super[i]);
      margin = std::min(margin, std::abs(diag[i]) - off);
    }
    return margin;
  }

  /// Thomas algorithm without pivoting; only valid for row dominant systems.
  std::vector<T> solve() const {
    const std::size_t n = size();
    std::vector<T> c(n), x(n);
    if (n == 0) return x;
    T denom = diag[0];
    if (denom == T{}) throw std::logic_error("TridiagonalSystem: zero pivot");
    c[0] = super[0] / denom;
    x[0] = rhs[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - sub[i] * c[i - 1];
      if (denom == T{}) throw std::logic_error("TridiagonalSystem: zero pivot");
      c[i] = (i + 1 < n) ? super[i] / denom : T{};
      x[i] = (rhs[i] - sub[i] * x[i - 1]) / denom;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
  }
};

}  // namespace logfcc
