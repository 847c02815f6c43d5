#include "logfcc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "logfcc/log_weights.hpp"
#include "logfcc/oracle.hpp"
#include "logfcc/osc_weights.hpp"

namespace logfcc::bench {
namespace {

constexpr int kReferenceMaxN = 1 << 14;

bool is_smooth(TestFunction f) { return f == TestFunction::exp5 || f == TestFunction::poly; }

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return NAN;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(lx.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : NAN;
}

template <class V>
std::pair<double, int> max_change(const V& base, const V& pert, double epsilon) {
  double best = 0.0;
  int at = 0;
  for (std::size_t n = 0; n < base.size(); ++n) {
    const double d = std::abs(pert[n] - base[n]) / epsilon;
    if (d > best) {
      best = d;
      at = static_cast<int>(n);
    }
  }
  return {best, at};
}

std::string join_cells(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) line += ',';
    line += c;
    first = false;
  }
  return line;
}

}  // namespace

std::optional<TestFunction> parse_function(std::string_view name) {
  if (name == "exp5") return TestFunction::exp5;
  if (name == "beta_endpoint") return TestFunction::beta_endpoint;
  if (name == "beta_interior") return TestFunction::beta_interior;
  if (name == "poly") return TestFunction::poly;
  return std::nullopt;
}

std::string_view to_string(TestFunction f) {
  switch (f) {
    case TestFunction::exp5: return "exp5";
    case TestFunction::beta_endpoint: return "beta_endpoint";
    case TestFunction::beta_interior: return "beta_interior";
    case TestFunction::poly: return "poly";
  }
  return "unknown";
}

Integrand make_function(const FunctionSpec& spec) {
  switch (spec.kind) {
    case TestFunction::exp5:
      return [](double x) -> cplx { return std::cos(4.0 * x) / (x * x + x + 1.0); };
    case TestFunction::beta_endpoint:
      return [b = spec.beta](double x) -> cplx { return std::pow(1.0 + x, b); };
    case TestFunction::beta_interior:
      return [b = spec.beta](double x) -> cplx { return std::pow(std::abs(0.5 + x), b); };
    case TestFunction::poly:
      return [c = spec.coeffs](double x) -> cplx {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
      };
  }
  throw ParameterError("unknown test function");
}

std::vector<double> singular_points(const FunctionSpec& spec) {
  switch (spec.kind) {
    case TestFunction::beta_endpoint: return {-1.0};
    case TestFunction::beta_interior: return {-0.5};
    default: return {};
  }
}

void validate(const SweepSpec& spec) {
  if (!(std::abs(spec.alpha) <= 1.0)) throw ParameterError("alpha must lie in [-1, 1]");
  if (spec.ks.empty()) throw ParameterError("the k list is empty");
  if (spec.ns.empty()) throw ParameterError("the N list is empty");
  for (double k : spec.ks) {
    if (!std::isfinite(k) || k < 0.0) throw ParameterError("k values must be finite and nonnegative");
  }
  for (int n : spec.ns) {
    if (n < 1) throw ParameterError("N values must be positive");
  }
  if (!(spec.function.beta >= 0.0)) throw ParameterError("beta must be nonnegative");
  if (spec.function.kind == TestFunction::poly && spec.function.coeffs.empty()) {
    throw ParameterError("poly needs coefficients");
  }
  if (!(spec.tol > 0.0)) throw ParameterError("tol must be positive");
}

std::vector<WeightRow> weight_rows(double alpha, double k, int n) {
  if (!(std::abs(alpha) <= 1.0)) throw ParameterError("alpha must lie in [-1, 1]");
  if (n < 0) throw ParameterError("N must be nonnegative");
  if (!std::isfinite(k)) throw ParameterError("k must be finite");
  const auto table = weights(alpha, k, n);
  std::vector<WeightRow> rows;
  rows.reserve(table.xi.size());
  for (int j = 0; j <= n; ++j) rows.push_back({j, table.xi[j], table.eta[j]});
  return rows;
}

IntegrateRow integrate_row(const FunctionSpec& f, double alpha, double k, int n, std::optional<double> tol) {
  if (!(std::abs(alpha) <= 1.0)) throw ParameterError("alpha must lie in [-1, 1]");
  if (n < 1) throw ParameterError("N must be positive");
  if (!std::isfinite(k)) throw ParameterError("k must be finite");
  const auto fn = make_function(f);
  const QuadParams p{alpha, k, n};
  const QuadResult r = tol ? fcc_refine(fn, p, *tol) : fcc_integrate(fn, p);
  return {alpha, k, r.n_used, r.value, r.est_error, to_string(r.path), r.evaluations};
}

Reference reference_value(const SweepSpec& spec, double k) {
  const auto fn = make_function(spec.function);
  oracle::Options opts;
  opts.singular_points = singular_points(spec.function);
  const auto orc = oracle::reference_integral(fn, spec.alpha, k, opts);

  Reference ref;
  if (!is_smooth(spec.function.kind)) {
    ref.value = orc.value;
    ref.converged = orc.achieved <= spec.tol * std::max(1.0, std::abs(orc.value));
    if (!ref.converged) {
      std::ostringstream os;
      os << "oracle reached only " << format_number(orc.achieved) << " at k=" << format_number(k);
      ref.note = os.str();
    }
    return ref;
  }

  const int n_max = *std::max_element(spec.ns.begin(), spec.ns.end());
  const auto refined = fcc_refine(fn, {spec.alpha, k, 4 * n_max}, spec.tol, std::max(kReferenceMaxN, 8 * n_max));
  ref.value = refined.value;
  ref.converged = refined.converged;
  const double gap = std::abs(refined.value - orc.value);
  const double allowed = std::max(1e-12, 10.0 * orc.achieved) * std::max(1.0, std::abs(refined.value));
  std::ostringstream os;
  if (!refined.converged) {
    os << "refinement stopped at N=" << refined.n_used << " with estimate "
       << format_number(refined.est_error.value_or(NAN)) << " at k=" << format_number(k);
  } else if (gap > allowed) {
    ref.converged = false;
    os << "refined reference and oracle differ by " << format_number(gap) << " at k=" << format_number(k);
  }
  ref.note = os.str();
  return ref;
}

TableResult table(const SweepSpec& spec) {
  validate(spec);
  const auto fn = make_function(spec.function);
  std::vector<double> ks = spec.ks;
  std::vector<int> ns = spec.ns;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  TableResult result;
  std::vector<std::optional<cplx>> refs(ks.size());
  for (std::size_t c = 0; c < ks.size(); ++c) {
    const auto ref = reference_value(spec, ks[c]);
    if (ref.converged) refs[c] = ref.value;
    else result.diagnostics.push_back(ref.note);
  }
  for (int n : ns) {
    for (std::size_t c = 0; c < ks.size(); ++c) {
      if (!refs[c]) continue;
      const cplx approx = fcc_integrate(fn, {spec.alpha, ks[c], n}).value;
      const double abs_err = std::abs(approx - *refs[c]);
      const double mag = std::abs(*refs[c]);
      result.rows.push_back({n, ks[c], abs_err, mag > 0.0 ? abs_err / mag : abs_err});
    }
  }
  return result;
}

double nonosc_bound(int n_max) { return (n_max + 2.0) * (n_max + 3.0) / 6.0; }

double nonosc_alpha0_bound(int n_max) {
  const double h = n_max / 2.0 + 1.0;
  return h * h / (n_max + 1.0);
}

double forward_bound(double k) { return 4.0 + std::pow(2.0, 1.75) * std::pow(k, 1.25); }

double full_bound(double k) { return 10.0 * std::pow(k, 2.25); }

std::vector<StabilityRow> stability(double alpha, const std::vector<double>& ks, const std::vector<int>& ns,
                                    double epsilon) {
  if (!(std::abs(alpha) <= 1.0)) throw ParameterError("alpha must lie in [-1, 1]");
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  if (ns.empty()) throw ParameterError("the N list is empty");
  for (int n : ns) {
    if (n < 1) throw ParameterError("N values must be positive");
  }
  for (double k : ks) {
    if (!std::isfinite(k) || k < 0.0) throw ParameterError("k values must be finite and nonnegative");
  }

  std::vector<StabilityRow> rows;
  const std::vector<double> bump_real{epsilon};
  const std::vector<cplx> bump{cplx(epsilon, 0.0)};

  for (int n : ns) {
    const auto base = eta_nonosc(alpha, n);
    const auto pert = eta_nonosc_perturbed(alpha, n, bump_real);
    const auto [value, at] = max_change(base, pert, epsilon);
    rows.push_back({"nonosc", 0.0, n, at, value, nonosc_bound(n)});
    if (alpha == 0.0) rows.push_back({"nonosc_alpha0", 0.0, n, at, value, nonosc_alpha0_bound(n)});
    const std::vector<double> each(static_cast<std::size_t>(n) + 1, epsilon);
    const auto [each_value, each_at] = max_change(base, eta_nonosc_perturbed(alpha, n, each), epsilon);
    rows.push_back({"nonosc_each", 0.0, n, each_at, each_value, nonosc_bound(n)});
  }

  std::vector<double> osc_ks;
  for (double k : ks) {
    if (k > 2.0) osc_ks.push_back(k);
  }
  for (double k : osc_ks) {
    const int m = static_cast<int>(std::floor(k)) - 1;
    const auto base = eta_forward(alpha, k, m);
    const auto pert = eta_forward_perturbed(alpha, k, m, bump);
    const auto [value, at] = max_change(base, pert, epsilon);
    rows.push_back({"forward", k, m, at, value, forward_bound(k)});
    const std::vector<cplx> each(static_cast<std::size_t>(m) + 1, cplx(epsilon, 0.0));
    const auto [each_value, each_at] = max_change(base, eta_forward_perturbed(alpha, k, m, each), epsilon);
    rows.push_back({"forward_each", k, m, each_at, each_value, forward_bound(k)});
  }

  std::vector<std::vector<double>> full(osc_ks.size(), std::vector<double>(ns.size()));
  StabilityRow worst{"max_full", 0.0, 0, 0, -1.0, 0.0};
  for (std::size_t i = 0; i < osc_ks.size(); ++i) {
    const double k = osc_ks[i];
    for (std::size_t j = 0; j < ns.size(); ++j) {
      const auto base = eta_osc_perturbed(alpha, k, ns[j], {});
      const auto pert = eta_osc_perturbed(alpha, k, ns[j], bump);
      const auto [value, at] = max_change(base, pert, epsilon);
      full[i][j] = value;
      rows.push_back({"full", k, ns[j], at, value, full_bound(k)});
      if (value > worst.value) worst = {"max_full", k, ns[j], at, value, full_bound(k)};
    }
  }
  if (worst.value >= 0.0) rows.push_back(worst);

  if (osc_ks.size() >= 2) {
    for (std::size_t j = 0; j < ns.size(); ++j) {
      std::vector<double> y(osc_ks.size());
      for (std::size_t i = 0; i < osc_ks.size(); ++i) y[i] = full[i][j];
      rows.push_back({"fit_k", 0.0, ns[j], -1, loglog_slope(osc_ks, y), 2.25});
    }
  }
  if (ns.size() >= 2) {
    std::vector<double> nd(ns.begin(), ns.end());
    for (std::size_t i = 0; i < osc_ks.size(); ++i) {
      rows.push_back({"fit_N", osc_ks[i], 0, -1, loglog_slope(nd, full[i]), 0.0});
    }
  }
  return rows;
}

std::vector<OrderRow> order(const SweepSpec& spec, double k) {
  validate(spec);
  const auto ref = reference_value(spec, k);
  if (!ref.converged) throw std::runtime_error("reference did not converge: " + ref.note);
  const auto fn = make_function(spec.function);
  std::vector<int> ns = spec.ns;
  std::sort(ns.begin(), ns.end());
  std::vector<OrderRow> rows;
  std::vector<double> errors;
  for (int n : ns) {
    const double abs_err = std::abs(fcc_integrate(fn, {spec.alpha, k, n}).value - ref.value);
    const double mag = std::abs(ref.value);
    rows.push_back({n, abs_err, mag > 0.0 ? abs_err / mag : abs_err, 0.0});
    errors.push_back(abs_err);
  }
  double slope = NAN;
  try {
    slope = empirical_order(ns, errors);
  } catch (const std::invalid_argument&) {
  }
  for (auto& r : rows) r.slope = slope;
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<WeightRow>& rows) {
  os << "n,xi_re,xi_im,eta_re,eta_im\n";
  for (const auto& r : rows) {
    os << join_cells({std::to_string(r.n), format_number(r.xi.real()), format_number(r.xi.imag()),
                           format_number(r.eta.real()), format_number(r.eta.imag())})
       << '\n';
  }
}

void write_csv(std::ostream& os, const IntegrateRow& r) {
  os << "alpha,k,N,value_re,value_im,est_error,path,evaluations\n";
  os << join_cells({format_number(r.alpha), format_number(r.k), std::to_string(r.n),
                         format_number(r.value.real()), format_number(r.value.imag()),
                         r.est_error ? format_number(*r.est_error) : std::string(), r.path,
                         std::to_string(r.evaluations)})
     << '\n';
}

void write_csv(std::ostream& os, const TableResult& result) {
  os << "N,k,abs_err,rel_err\n";
  for (const auto& r : result.rows) {
    os << join_cells({std::to_string(r.n), format_number(r.k), format_number(r.abs_err),
                           format_number(r.rel_err)})
       << '\n';
  }
  for (const auto& d : result.diagnostics) os << "# " << d << '\n';
}

void write_csv(std::ostream& os, const std::vector<StabilityRow>& rows) {
  os << "kind,k,N,n,value,bound\n";
  for (const auto& r : rows) {
    os << join_cells({r.kind, format_number(r.k), std::to_string(r.n_max), std::to_string(r.n),
                           format_number(r.value), format_number(r.bound)})
       << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<OrderRow>& rows) {
  os << "N,abs_err,rel_err,slope\n";
  for (const auto& r : rows) {
    os << join_cells({std::to_string(r.n), format_number(r.abs_err), format_number(r.rel_err),
                           format_number(r.slope)})
       << '\n';
  }
}

}  // namespace logfcc::bench
