#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logfcc/log_weights.hpp"
#include "logfcc/oracle.hpp"

using namespace logfcc;

TEST_CASE("eta_0 closed form") {
  CHECK(eta0_nonosc(0.0) == -4.0);
  CHECK(std::abs(eta0_nonosc(1.0) - (4 * std::log(2.0) - 4)) <= 1e-15);
  CHECK(std::abs(eta0_nonosc(-1.0) - (4 * std::log(2.0) - 4)) <= 1e-15);
  CHECK_THROWS_AS(eta0_nonosc(1.5), std::domain_error);
  CHECK_THROWS_AS(eta_nonosc(-1.01, 3), std::domain_error);
}

TEST_CASE("first entries") {
  const auto eta = eta_nonosc(0.0, 4);
  CHECK(eta[1] == 0.0);
  CHECK(eta[3] == 0.0);
  const auto table = xi_nonosc(0.0, 0);
  CHECK(table.xi[0] == -4.0);
}

TEST_CASE("forward recurrence re-substitution") {
  for (double alpha : {-1.0, -0.6, 0.0, 0.3, 0.9, 1.0}) {
    const int n_max = 400;
    const auto eta = eta_nonosc(alpha, n_max);
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      const double nn = n;
      const double prev2 = n >= 2 ? eta[n - 2] : 0.0;
      const double r = eta[n] - (2 * alpha * nn / (nn + 1)) * eta[n - 1] + ((nn - 1) / (nn + 1)) * prev2 -
                       gamma_nonosc(alpha, n);
      worst = std::max(worst, std::abs(r));
    }
    CHECK(worst <= 1e-14);
  }
}

TEST_CASE("even-index shortcut at alpha = 0") {
  const auto full = eta_nonosc(0.0, 300);
  const auto even = eta_nonosc_even(300);
  for (int n = 0; n <= 300; ++n) CHECK(std::abs(full[n] - even[n]) <= 4e-16);
}

TEST_CASE("reflection symmetry") {
  for (double alpha : {0.25, 0.7, 1.0}) {
    const auto plus = eta_nonosc(alpha, 200);
    const auto minus = eta_nonosc(-alpha, 200);
    for (int n = 0; n <= 200; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(minus[n] - sign * plus[n]) <= 1e-13);
    }
  }
}

TEST_CASE("extended precision replay") {
  SUBCASE("alpha = 0") {
    const auto replay = oracle::highprec_recurrence_replay(0.0, 400);
    const auto xi = xi_nonosc(0.0, 400).xi;
    double worst = 0.0;
    for (int n = 0; n <= 400; ++n) {
      if (n % 2 == 1) {
        CHECK(xi[n] == 0.0);
        CHECK(replay.xi[n] == 0.0);
        continue;
      }
      worst = std::max(worst, std::abs(xi[n] - replay.xi[n]) / std::abs(replay.xi[n]));
      if (n == 10) CHECK(worst <= 4.33e-16);
    }
    CHECK(worst <= 2e-15);
  }
  SUBCASE("alpha = 1") {
    const auto replay = oracle::highprec_recurrence_replay(1.0, 400);
    const auto xi = xi_nonosc(1.0, 400).xi;
    double worst = 0.0;
    for (int n = 0; n <= 400; ++n) {
      worst = std::max(worst, std::abs(xi[n] - replay.xi[n]) / std::abs(replay.xi[n]));
      if (n == 10) CHECK(worst <= 3.70e-14);
    }
    CHECK(worst <= 4e-13);
  }
}

TEST_CASE("agreement with direct quadrature") {
  for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const auto xi = xi_nonosc(alpha, 50).xi;
    for (int n = 0; n <= 50; n += 7) {
      const auto ref = oracle::reference_weight(alpha, 0.0, n);
      CHECK(std::abs(xi[n] - ref.value.real()) <= 1e-11);
    }
  }
}

TEST_CASE("perturbation growth") {
  const double eps = 1e-8;
  for (double alpha : {-1.0, -0.4, 0.0, 0.8, 1.0}) {
    for (int n_max : {10, 100, 400}) {
      const auto base = eta_nonosc(alpha, n_max);
      const auto pert = eta_nonosc_perturbed(alpha, n_max, std::vector<double>{eps});
      double amp = 0.0;
      for (int n = 0; n <= n_max; ++n) amp = std::max(amp, std::abs(pert[n] - base[n]) / eps);
      CHECK(amp <= (n_max + 2.0) * (n_max + 3.0) / 6.0);
      if (alpha == 0.0) {
        const double h = n_max / 2.0 + 1.0;
        CHECK(amp <= h * h / (n_max + 1.0));
      }
    }
  }
}
