#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>

#include "logfcc/special_functions.hpp"

using namespace logfcc;

namespace {

using mp = boost::multiprecision::cpp_bin_float_100;

// Taylor series summed with 100 digits; cancellation costs about t/ln(10)
// digits, so this is accurate to double precision well beyond t = 100.
double si_oracle(double t) {
  const mp x = t, x2 = x * x;
  mp term = x, sum = x;
  for (int n = 1; n < 2000; ++n) {
    term *= -x2 / ((2 * n) * (2 * n + 1));
    const mp add = term / (2 * n + 1);
    sum += add;
    if (abs(add) < mp(1e-60)) break;
  }
  return static_cast<double>(sum);
}

double ci_oracle(double t) {
  const mp x = t, x2 = x * x;
  mp term = 1, sum = 0;
  for (int n = 1; n < 2000; ++n) {
    term *= -x2 / ((2 * n - 1) * (2 * n));
    const mp add = term / (2 * n);
    sum += add;
    if (abs(add) < mp(1e-60)) break;
  }
  sum += boost::math::constants::euler<mp>() + log(x);
  return static_cast<double>(sum);
}

double bessel_oracle(int n, double x) {
  return static_cast<double>(boost::math::cyl_bessel_j(n, boost::multiprecision::cpp_bin_float_50(x)));
}

}  // namespace

TEST_CASE("si examples") {
  CHECK(si(0.0).value == 0.0);
  CHECK(std::abs(si(std::numbers::pi).value - 1.851937051982466) <= 1e-13);
  CHECK(std::abs(si(1000.0).value - std::numbers::pi / 2) <= 1e-3);
  CHECK(si(-2.5).value == -si(2.5).value);
}

TEST_CASE("ci examples") {
  CHECK(std::abs(ci(1.0).value - 0.337403922900968) <= 1e-13);
  const double t = 1e-8;
  CHECK(std::abs(ci(t).value - (euler_gamma + std::log(t))) <= 1e-15);
  CHECK(std::abs(ci(1000.0).value) <= 1e-2);
  CHECK_THROWS_AS(ci(0.0), std::domain_error);
  CHECK_THROWS_AS(ci(-1.0), std::domain_error);
}

TEST_CASE("si and ci against extended precision series") {
  double worst_si = 0.0, worst_ci = 0.0;
  for (double t = 0.01; t < 120.0; t *= 1.05) {
    worst_si = std::max(worst_si, std::abs(si(t).value - si_oracle(t)));
    worst_ci = std::max(worst_ci, std::abs(ci(t).value - ci_oracle(t)));
  }
  CHECK(worst_si <= 1e-13);
  CHECK(worst_ci <= 1e-13);
}

TEST_CASE("si and ci are continuous across branch switches") {
  for (double edge : {4.0, 40.0}) {
    for (double d : {-1e-9, 0.0, 1e-9}) {
      const double t = edge + d;
      CHECK(std::abs(si(t).value - si_oracle(t)) <= 1e-13);
      CHECK(std::abs(ci(t).value - ci_oracle(t)) <= 1e-13);
    }
    CHECK(si(edge * 0.99).method != si(edge * 1.01).method);
  }
  CHECK(si(2.0).method == Method::series);
  CHECK(si(20.0).method == Method::continued_fraction);
  CHECK(si(200.0).method == Method::asymptotic);
}

TEST_CASE("ci minus log is smooth at the origin") {
  CHECK(std::abs(ci_minus_log(1e-300) - euler_gamma) <= 1e-16);
  for (double t : {1e-6, 0.1, 3.9, 4.1, 50.0}) {
    CHECK(std::abs(ci_minus_log(t) - (ci_oracle(t) - std::log(t))) <= 1e-13 * std::max(1.0, std::log(t)));
  }
}

TEST_CASE("bessel J0 and J1") {
  CHECK(std::abs(bessel_j0(1e-12).value - 1.0) <= 1e-12);
  CHECK(std::abs(bessel_j1(2.0).value - 0.5767248077568734) <= 1e-15);
  double worst = 0.0;
  for (double x = 0.01; x < 300.0; x *= 1.09) {
    worst = std::max(worst, std::abs(bessel_j0(x).value - bessel_oracle(0, x)));
    worst = std::max(worst, std::abs(bessel_j1(x).value - bessel_oracle(1, x)));
  }
  CHECK(worst <= 1e-14);
  CHECK(bessel_j0(1.0).method == Method::series);
  CHECK(bessel_j0(10.0).method == Method::recurrence);
  CHECK(bessel_j0(100.0).method == Method::asymptotic);
}

TEST_CASE("bessel sequence") {
  CHECK_THROWS_AS(bessel_j_sequence(0.0, 5), std::domain_error);
  for (double k : {0.3, 1.0, 2.0, 7.5, 10.0, 40.0, 160.0, 1000.0}) {
    const int m = 25 + static_cast<int>(std::ceil(std::numbers::e * k / 2));
    const auto j = bessel_j_sequence(k, m);
    REQUIRE(j.size() == static_cast<std::size_t>(m) + 1);

    double norm = j[0] * j[0], jmax = 0.0;
    for (int n = 1; n <= m; ++n) norm += 2 * j[n] * j[n];
    for (double v : j) jmax = std::max(jmax, std::abs(v));
    CHECK(std::abs(1.0 - norm) <= 1e-10);

    double residual = 0.0;
    for (int n = 1; n < m; ++n) residual = std::max(residual, std::abs(j[n + 1] - (2.0 * n / k) * j[n] + j[n - 1]));
    CHECK(residual <= 1e-12 * jmax);

    double err = 0.0;
    for (int n = 0; n <= m; n += 1 + m / 60) err = std::max(err, std::abs(j[n] - bessel_oracle(n, k)));
    CHECK(err <= 1e-14);
  }
}

TEST_CASE("bessel sequence example k=10, 40 orders") {
  const auto j = bessel_j_sequence(10.0, 40);
  double norm = j[0] * j[0];
  for (int n = 1; n <= 40; ++n) norm += 2 * j[n] * j[n];
  CHECK(std::abs(norm - 1.0) <= 1e-12);
}
