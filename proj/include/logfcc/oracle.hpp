#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "logfcc/quadrature.hpp"

// Brute-force reference values, independent of the weight recurrences.
namespace logfcc::oracle {

/// Composite mesh on [0, pi] in theta = arccos x. Panels are stored as an
/// anchor point plus offsets, so that the distance to a singular anchor is
/// exact even when it is far below the spacing of doubles near the anchor.
class GradedMesh {
 public:
  struct Panel {
    long double anchor;
    long double lo, hi;  // offsets from anchor, lo < hi
  };

  /// anchors: singular points in [0, pi]. Intervals next to an anchor are
  /// cut geometrically with `ratio` until the innermost panel is at most
  /// `min_width`; every panel is at most `max_width`.
  GradedMesh(std::vector<double> anchors, double ratio, double min_width, double max_width);

  const std::vector<Panel>& panels() const { return panels_; }
  double smallest_width() const;

 private:
  std::vector<Panel> panels_;
};

struct ReferenceValue {
  cplx value;
  double achieved = 0.0;  // |difference| between the two rules on the mesh
  bool converged = false;
  std::size_t panels = 0;
};

struct Options {
  std::vector<double> singular_points;  // extra singular points of f in [-1, 1]
  double bandwidth = 0.0;               // extra angular frequency of f(cos theta)
  double tol = 1e-13;                   // relative target for `converged`
  double ratio = 0.25;
  double min_width = 1e-20;
};

/// int_{-1}^{1} f(x) log((x - alpha)^2) exp(ikx) dx.
ReferenceValue reference_integral(const Integrand& f, double alpha, double k, const Options& options = {});

enum class WeightKind { xi, eta };

/// xi_n(k) or eta_n(k) by direct quadrature of T_n or U_n.
ReferenceValue reference_weight(double alpha, double k, int n, WeightKind kind = WeightKind::xi, double tol = 1e-13);

struct Replay {
  std::vector<double> eta;
  std::vector<double> xi;
};

/// The k = 0 three-term recurrence replayed in 50-digit arithmetic.
Replay highprec_recurrence_replay(double alpha, int degree);

}  // namespace logfcc::oracle
