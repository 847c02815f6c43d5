#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "logfcc/bench.hpp"

namespace {

namespace bench = logfcc::bench;

enum Exit { ok = 0, parameter_error = 2, reference_error = 3, io_error = 4 };

struct Options {
  double alpha = 0.0;
  double k = 0.0;
  int n = 16;
  std::vector<double> ks;
  std::vector<int> ns;
  std::string function = "exp5";
  double beta = 0.5;
  std::vector<double> coeffs;
  std::optional<double> tol;
  double epsilon = 1e-8;
  std::string out = "-";
};

bench::FunctionSpec function_spec(const Options& o) {
  const auto kind = bench::parse_function(o.function);
  if (!kind) throw bench::ParameterError("unknown function '" + o.function + "'");
  return {*kind, o.beta, o.coeffs};
}

bench::SweepSpec sweep_spec(const Options& o) {
  bench::SweepSpec s;
  s.function = function_spec(o);
  s.alpha = o.alpha;
  s.ks = o.ks.empty() ? std::vector<double>{o.k} : o.ks;
  s.ns = o.ns.empty() ? std::vector<int>{o.n} : o.ns;
  if (o.tol) s.tol = *o.tol;
  bench::validate(s);
  return s;
}

// Writes the buffered CSV to --out or stdout.
int emit(const Options& o, const std::string& text) {
  if (o.out == "-") {
    std::cout << text << std::flush;
    return std::cout ? ok : io_error;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << o.out << " for writing\n";
    return io_error;
  }
  file << text;
  file.close();
  if (!file) {
    std::cerr << "error: writing " << o.out << " failed\n";
    return io_error;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filon-Clenshaw-Curtis quadrature of log((x-alpha)^2) exp(ikx) integrals"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--alpha", o.alpha, "Position of the logarithmic singularity in [-1, 1]");
    cmd->add_option("--out", o.out, "Output path, '-' for standard output");
  };
  auto add_function = [&o](CLI::App* cmd) {
    cmd->add_option("--function", o.function, "exp5 | beta_endpoint | beta_interior | poly");
    cmd->add_option("--beta", o.beta, "Exponent of the beta families");
    cmd->add_option("--coeffs", o.coeffs, "Monomial coefficients for poly, lowest degree first")->delimiter(',');
    cmd->add_option("--tol", o.tol, "Tolerance for refinement and references");
  };

  auto* weights = app.add_subcommand("weights", "Print xi_n(k) and eta_n(k) for n = 0..N");
  add_common(weights);
  weights->add_option("--k", o.k, "Frequency");
  weights->add_option("--n", o.n, "Degree N");

  auto* integrate = app.add_subcommand("integrate", "Apply the rule to one test function");
  add_common(integrate);
  add_function(integrate);
  integrate->add_option("--k", o.k, "Frequency");
  integrate->add_option("--n", o.n, "Degree N (starting degree with --tol)");

  auto* table = app.add_subcommand("table", "Error table over N and k");
  add_common(table);
  add_function(table);
  table->add_option("--ks", o.ks, "Comma separated frequencies")->delimiter(',')->required();
  table->add_option("--ns", o.ns, "Comma separated degrees")->delimiter(',')->required();

  auto* stability = app.add_subcommand("stability", "Perturbation growth of the weight recurrences");
  add_common(stability);
  stability->add_option("--ks", o.ks, "Comma separated frequencies")->delimiter(',');
  stability->add_option("--ns", o.ns, "Comma separated degrees")->delimiter(',')->required();
  stability->add_option("--epsilon", o.epsilon, "Perturbation injected at eta_0");

  auto* order = app.add_subcommand("order", "Empirical convergence order");
  add_common(order);
  add_function(order);
  order->add_option("--k", o.k, "Frequency");
  order->add_option("--ns", o.ns, "Comma separated degrees")->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parameter_error;
  }

  try {
    std::ostringstream os;
    int status = ok;
    if (*weights) {
      bench::write_csv(os, bench::weight_rows(o.alpha, o.k, o.n));
    } else if (*integrate) {
      bench::write_csv(os, bench::integrate_row(function_spec(o), o.alpha, o.k, o.n, o.tol));
    } else if (*table) {
      const auto result = bench::table(sweep_spec(o));
      bench::write_csv(os, result);
      if (!result.diagnostics.empty()) status = reference_error;
    } else if (*stability) {
      bench::write_csv(os, bench::stability(o.alpha, o.ks, o.ns, o.epsilon));
    } else if (*order) {
      bench::write_csv(os, bench::order(sweep_spec(o), o.k));
    }
    const int written = emit(o, os.str());
    return written != ok ? written : status;
  } catch (const bench::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parameter_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parameter_error;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parameter_error;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return reference_error;
  }
}
