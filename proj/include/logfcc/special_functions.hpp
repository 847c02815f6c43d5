#pragma once

#include <string_view>
#include <vector>

namespace logfcc {

inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

enum class Method { series, asymptotic, recurrence, oliver, continued_fraction };

std::string_view to_string(Method m);

/// A scalar special-function value tagged with the branch that produced it.
struct SpecialValue {
  double value;
  Method method;
};

/// Sine integral Si(t) for t >= 0. Callers extend to t < 0 by oddness.
SpecialValue si(double t);

/// Cosine integral Ci(t) = gamma + log t + int_0^t (cos x - 1)/x dx, t > 0.
SpecialValue ci(double t);

/// Ci(t) - log(t), which stays finite as t -> 0+.
double ci_minus_log(double t);

SpecialValue bessel_j0(double x);
SpecialValue bessel_j1(double x);

/// J_0(k), ..., J_m(k) for k > 0.
///
/// Orders n <= floor(k) come from the forward recurrence started at J_0, J_1;
/// the remaining ones solve the diagonally dominant tridiagonal system of the
/// same recurrence, closed at an order well past both m and 25 + ceil(e k / 2)
/// with a uniform asymptotic seed for the first order beyond it.
std::vector<double> bessel_j_sequence(double k, int m);

}  // namespace logfcc
