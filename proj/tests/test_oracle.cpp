#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <numbers>
#include <utility>
#include <vector>

#include "logfcc/oracle.hpp"

using namespace logfcc;
using namespace logfcc::oracle;

TEST_CASE("graded mesh") {
  const double pi = std::numbers::pi;
  const GradedMesh mesh({0.0, pi / 3, pi}, 0.25, 1e-20, 0.5);
  CHECK(mesh.smallest_width() <= 1e-20);
  std::vector<std::pair<long double, long double>> spans;
  long double covered = 0.0L;
  for (const auto& p : mesh.panels()) {
    CHECK(p.lo < p.hi);
    CHECK(p.hi - p.lo <= 0.5L + 1e-15L);
    spans.emplace_back(p.anchor + p.lo, p.anchor + p.hi);
    covered += p.hi - p.lo;
  }
  std::sort(spans.begin(), spans.end());
  CHECK(spans.front().first == 0.0L);
  double gap = 0.0;
  for (std::size_t i = 1; i < spans.size(); ++i)
    gap = std::max(gap, static_cast<double>(std::abs(spans[i].first - spans[i - 1].second)));
  CHECK(gap <= 1e-15);
  CHECK(std::abs(static_cast<double>(covered) - pi) <= 1e-14);
  CHECK(std::abs(static_cast<double>(spans.back().second) - pi) <= 1e-15);
  CHECK_THROWS_AS(GradedMesh({4.0}, 0.25, 1e-20, 0.5), std::domain_error);
  CHECK_THROWS_AS(GradedMesh({0.0}, 1.5, 1e-20, 0.5), std::invalid_argument);
}

TEST_CASE("constant integrand") {
  const auto one = [](double) { return cplx(1.0); };
  const auto at_end = reference_integral(one, 1.0, 0.0);
  CHECK(at_end.converged);
  CHECK(std::abs(at_end.value - cplx(4 * std::log(2.0) - 4)) <= 1e-14);
  const auto mid = reference_integral(one, 0.0, 0.0);
  CHECK(std::abs(mid.value - cplx(-4.0)) <= 1e-14);
  CHECK(mid.achieved <= 1e-13);
  CHECK(mid.panels > 0);
}

TEST_CASE("T_2 weight") {
  // int (2x^2 - 1) log(x^2) dx = 2 (-4/9) + 4 = 28/9.
  const auto r = reference_weight(0.0, 0.0, 2);
  CHECK(std::abs(r.value - cplx(28.0 / 9.0)) <= 1e-14);
  const auto u = reference_weight(0.0, 0.0, 1, WeightKind::eta);
  CHECK(std::abs(u.value) <= 1e-14);
}

TEST_CASE("odd integrand at alpha 0 vanishes") {
  const auto r = reference_integral([](double x) { return cplx(x); }, 0.0, 0.0);
  CHECK(std::abs(r.value) <= 1e-14);
}

TEST_CASE("self-consistency under tighter settings") {
  const auto f = [](double x) { return cplx(std::exp(x)); };
  Options loose;
  Options tight;
  tight.ratio = 0.1;
  tight.min_width = 1e-25;
  const auto a = reference_integral(f, 0.5, 12.3, loose);
  const auto b = reference_integral(f, 0.5, 12.3, tight);
  CHECK(a.converged);
  CHECK(std::abs(a.value - b.value) <= 1e-12 * std::abs(b.value));
}

TEST_CASE("non-smooth integrand with extra singular point") {
  // With x = 2u - 1: 4 sqrt2 (2/3) (log 2 - (8/3 - 2 log 2)).
  Options opt;
  opt.singular_points = {-1.0};
  const auto r = reference_integral([](double x) { return cplx(std::sqrt(1 + x)); }, 1.0, 0.0, opt);
  const double exact = 8 * std::sqrt(2.0) / 3 * (3 * std::log(2.0) - 8.0 / 3.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - exact) <= 1e-13);
}

TEST_CASE("replay") {
  const auto z = highprec_recurrence_replay(0.0, 4);
  REQUIRE(z.xi.size() == 5);
  CHECK(z.eta[0] == -4.0);
  CHECK(std::abs(z.xi[2] - 28.0 / 9.0) <= 1e-15);
  CHECK(z.xi[1] == 0.0);
  CHECK(z.xi[3] == 0.0);
  const auto one = highprec_recurrence_replay(1.0, 2);
  CHECK(std::abs(one.xi[0] - (4 * std::log(2.0) - 4)) <= 1e-15);
  CHECK(std::abs(one.xi[1] - reference_weight(1.0, 0.0, 1).value.real()) <= 1e-13);
}
