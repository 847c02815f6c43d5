#include <doctest.h>

#include <cmath>
#include <vector>

#include "logfcc/chebyshev.hpp"
#include "logfcc/log_weights.hpp"
#include "logfcc/oracle.hpp"
#include "logfcc/osc_weights.hpp"
#include "logfcc/quadrature.hpp"

using namespace logfcc;

namespace {

cplx exp5(double x) { return std::cos(4 * x) / (x * x + x + 1); }

}  // namespace

TEST_CASE("constant integrand gives xi_0") {
  for (double alpha : {-1.0, 0.0, 0.4, 1.0}) {
    for (double k : {0.0, 7.0, 300.0}) {
      const auto r = fcc_integrate([](double) { return cplx(1.0); }, {alpha, k, 6});
      const auto t = weights(alpha, k, 6);
      CHECK(std::abs(r.value - t.xi[0]) <= 1e-14 * std::max(1.0, std::abs(t.xi[0])));
      CHECK(r.evaluations == 7);
      CHECK(r.n_used == 6);
      CHECK_FALSE(r.est_error.has_value());
    }
  }
  CHECK(std::abs(fcc_integrate([](double) { return cplx(1.0); }, {0.0, 0.0, 4}).value + 4.0) <= 1e-15);
}

TEST_CASE("polynomials of degree <= N are integrated exactly") {
  for (double alpha : {-0.8, 0.0, 1.0}) {
    for (double k : {0.0, 12.0}) {
      const auto t = weights(alpha, k, 10);
      for (int m = 0; m <= 10; ++m) {
        const auto r = fcc_integrate([m](double x) { return cplx(chebyshev_t(m, x)); }, {alpha, k, 10});
        CHECK(std::abs(r.value - t.xi[m]) <= 1e-13);
      }
    }
  }
}

TEST_CASE("path selection") {
  const auto f = [](double x) { return exp5(x); };
  CHECK(fcc_integrate(f, {0.2, 2.0, 20}).path == Path::folded_nonoscillatory);
  CHECK(fcc_integrate(f, {0.2, -1.0, 20}).path == Path::folded_nonoscillatory);
  CHECK(fcc_integrate(f, {0.2, 2.01, 20}).path == Path::oscillatory);
  CHECK(fcc_integrate(f, {0.2, -50.0, 20}).path == Path::oscillatory);
  CHECK(std::string(to_string(Path::oscillatory)) == "oscillatory");
  CHECK(std::string(to_string(Path::folded_nonoscillatory)) == "folded_nonoscillatory");
}

TEST_CASE("folded and oscillatory routes agree near the threshold") {
  const auto f = [](double x) { return exp5(x); };
  for (double alpha : {-1.0, 0.0, 0.6}) {
    const QuadParams p{alpha, 2.01, 64};
    const cplx a = fcc_integrate_folded(f, p).value;
    const cplx b = fcc_integrate_oscillatory(f, p).value;
    CHECK(std::abs(a - b) <= 1e-10);
  }
}

TEST_CASE("negative k is the conjugate for real f") {
  const auto f = [](double x) { return exp5(x); };
  for (double k : {1.0, 30.0, 1e4}) {
    const cplx plus = fcc_integrate(f, {0.3, k, 40}).value;
    const cplx minus = fcc_integrate(f, {0.3, -k, 40}).value;
    CHECK(std::abs(minus - std::conj(plus)) <= 1e-14);
  }
}

TEST_CASE("agreement with the oracle") {
  const auto f = [](double x) { return exp5(x); };
  for (double alpha : {-1.0, 0.0, 0.3, 1.0}) {
    for (double k : {0.0, 1.0, 10.0, 100.0}) {
      oracle::Options opt;
      opt.bandwidth = 8.0;
      const auto ref = oracle::reference_integral(f, alpha, k, opt);
      REQUIRE(ref.converged);
      const auto r = fcc_integrate(f, {alpha, k, 64});
      CHECK(std::abs(r.value - ref.value) <= 1e-12);
    }
  }
}

TEST_CASE("samples interface") {
  const int n = 24;
  const NodeGrid g(n);
  std::vector<cplx> s(g.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = exp5(g[j]);
  for (double k : {0.0, 1.0, 40.0}) {
    const auto a = fcc_from_samples(s, 0.5, k);
    const auto b = fcc_integrate([](double x) { return exp5(x); }, {0.5, k, n});
    CHECK(a.value == b.value);
  }
  CHECK_THROWS(fcc_from_samples(std::vector<cplx>{1.0}, 0.0, 0.0));
}

TEST_CASE("refinement") {
  SUBCASE("polynomial stops after one doubling") {
    std::size_t calls = 0;
    const auto f = [&calls](double x) {
      ++calls;
      return cplx(std::pow(x, 8) - 3 * x * x + 1);
    };
    const auto r = fcc_refine(f, {0.2, 0.0, 8}, 1e-13);
    CHECK(r.converged);
    CHECK(r.n_used == 16);
    CHECK(r.evaluations == 17);
    CHECK(calls == 17);
    CHECK(*r.est_error <= 1e-13);
  }
  SUBCASE("samples are reused across doublings") {
    std::size_t calls = 0;
    const auto f = [&calls](double x) {
      ++calls;
      return exp5(x);
    };
    const auto r = fcc_refine(f, {0.0, 0.0, 8}, 1e-12);
    CHECK(r.converged);
    CHECK(r.n_used <= 64);
    CHECK(r.evaluations == static_cast<std::size_t>(r.n_used) + 1);
    CHECK(calls == r.evaluations);
    const auto ref = oracle::reference_integral([](double x) { return exp5(x); }, 0.0, 0.0);
    CHECK(std::abs(r.value - ref.value) <= 1e-11);
  }
  SUBCASE("three levels") {
    const auto r = fcc_refine([](double x) { return exp5(x); }, {0.0, 0.0, 8}, 1e-300, 32);
    CHECK_FALSE(r.converged);
    CHECK(r.n_used == 32);
    CHECK(r.evaluations == 33);
  }
  SUBCASE("oscillatory") {
    const auto r = fcc_refine([](double x) { return exp5(x); }, {1.0, 500.0, 8}, 1e-14);
    CHECK(r.converged);
    CHECK(r.path == Path::oscillatory);
  }
  CHECK_THROWS_AS(fcc_refine([](double) { return cplx(1.0); }, {0.0, 0.0, 16}, 1e-10, 20), std::invalid_argument);
}

TEST_CASE("empirical order") {
  SUBCASE("synthetic errors") {
    const std::vector<int> ns{4, 8, 16, 32};
    const std::vector<double> errs{1.0, 1.0 / 8, 1.0 / 64, 1.0 / 512};
    CHECK(empirical_order(ns, errs) == doctest::Approx(3.0).epsilon(1e-12));
    const std::vector<double> floored{1e-3, 1e-5, 1e-16, 1e-17};
    CHECK(empirical_order(ns, floored) == doctest::Approx(std::log2(100.0)).epsilon(1e-12));
    const std::vector<double> bad{1e-3, 1e-16, 1e-17, 0.0};
    CHECK_THROWS(empirical_order(ns, bad));
  }
  SUBCASE("smooth integrand converges fast") {
    const auto f = [](double x) { return exp5(x); };
    const auto ref = fcc_refine(f, {0.3, 0.0, 128}, 1e-15).value;
    const std::vector<int> ns{8, 16, 24, 32, 40, 48};
    CHECK(empirical_order(f, 0.3, 0.0, ns, ref) >= 8.0);
  }
}
