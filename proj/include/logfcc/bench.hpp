#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logfcc/quadrature.hpp"

// Experiment drivers behind the command-line harness.
namespace logfcc::bench {

enum class TestFunction { exp5, beta_endpoint, beta_interior, poly };

struct FunctionSpec {
  TestFunction kind = TestFunction::exp5;
  double beta = 0.5;
  std::vector<double> coeffs;  // monomial coefficients for poly, lowest degree first
};

/// Parses "exp5", "beta_endpoint", "beta_interior" or "poly".
std::optional<TestFunction> parse_function(std::string_view name);
std::string_view to_string(TestFunction f);

/// exp5: cos(4x)/(x^2+x+1); beta_endpoint: (1+x)^beta; beta_interior: |1/2+x|^beta.
Integrand make_function(const FunctionSpec& spec);

/// Points of [-1, 1] where the function is not analytic.
std::vector<double> singular_points(const FunctionSpec& spec);

struct SweepSpec {
  FunctionSpec function;
  double alpha = 0.0;
  std::vector<double> ks;
  std::vector<int> ns;
  double tol = 1e-15;
};

/// Invalid sweep or function parameters.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void validate(const SweepSpec& spec);

struct WeightRow {
  int n;
  cplx xi, eta;
};
std::vector<WeightRow> weight_rows(double alpha, double k, int n);

struct IntegrateRow {
  double alpha, k;
  int n;
  cplx value;
  std::optional<double> est_error;
  std::string path;
  std::size_t evaluations;
};
/// fcc_integrate at N, or fcc_refine from N when tol is given.
IntegrateRow integrate_row(const FunctionSpec& f, double alpha, double k, int n, std::optional<double> tol);

struct Reference {
  cplx value;
  bool converged = false;
  std::string note;  // diagnostic when not converged
};

/// exp5 and poly: FCC at 4 max(N), refined, cross-checked against the
/// oracle. Non-smooth families: graded-mesh oracle.
Reference reference_value(const SweepSpec& spec, double k);

struct TableRow {
  int n;
  double k;
  double abs_err, rel_err;
};

struct TableResult {
  std::vector<TableRow> rows;               // (N, k) lexicographic
  std::vector<std::string> diagnostics;     // one per aborted column
};
TableResult table(const SweepSpec& spec);

struct StabilityRow {
  // nonosc, nonosc_alpha0, nonosc_each, forward, forward_each, full, max_full,
  // fit_k, fit_N. The *_each kinds inject epsilon at every step instead of eta_0 only.
  std::string kind;
  double k;
  int n_max;
  int n;  // index of the largest change; -1 for fits
  double value;
  double bound;
};

double nonosc_bound(int n_max);
double nonosc_alpha0_bound(int n_max);
double forward_bound(double k);
double full_bound(double k);

/// Injects epsilon at eta_0 and records max_n |change in eta_n| / epsilon.
std::vector<StabilityRow> stability(double alpha, const std::vector<double>& ks, const std::vector<int>& ns,
                                    double epsilon);

struct OrderRow {
  int n;
  double abs_err, rel_err;
  double slope;  // least-squares slope over all rows
};
std::vector<OrderRow> order(const SweepSpec& spec, double k);

// CSV writers; numbers use 17 significant digits.
std::string format_number(double v);
void write_csv(std::ostream& os, const std::vector<WeightRow>& rows);
void write_csv(std::ostream& os, const IntegrateRow& row);
void write_csv(std::ostream& os, const TableResult& result);
void write_csv(std::ostream& os, const std::vector<StabilityRow>& rows);
void write_csv(std::ostream& os, const std::vector<OrderRow>& rows);

}  // namespace logfcc::bench
