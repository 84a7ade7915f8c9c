#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "expression.hpp"
#include "fracvar/operators.hpp"
#include "fracvar/solver.hpp"
#include "fracvar/variational.hpp"

namespace fracvar::cli {

namespace {

constexpr double kEquivalenceTolerance = 1e-10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

FractionalOrder checked_order(double value, const char* flag) {
  if (!(value > 0.0 && value < 1.0)) {
    throw UsageError(std::string(flag) + " must lie in (0, 1)");
  }
  return FractionalOrder(value);
}

ExampleProblem checked_problem(const RunConfig& c, std::size_t n) {
  const FractionalOrder alpha = checked_order(c.alpha, "--alpha");
  if (!(c.beta > c.alpha && c.beta <= 1.0)) throw UsageError("need alpha < beta <= 1");
  if (n < 8) throw UsageError("--n must be at least 8");
  return ExampleProblem(alpha, c.beta, n);
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--interval must look like a:b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string sa = text.substr(0, colon), sb = text.substr(colon + 1);
    const double a = std::stod(sa, &used_a);
    const double b = std::stod(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--interval must look like a:b");
  }
}

// Writes to --out when given, otherwise to the supplied stream.
template <typename Body>
int with_output(const RunConfig& config, std::ostream& out, Body&& body) {
  if (!config.output_path) return body(out);
  std::ofstream file(*config.output_path);
  if (!file) throw UsageError("cannot open " + *config.output_path + " for writing");
  return body(file);
}

}  // namespace

SampledFn random_polynomial_trial(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> c(5);
  for (double& x : c) x = coeff(rng);
  return SampledFn::sample(grid, [&c](double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  });
}

int run_deriv(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto kind = parse_operator_kind(config.kind);
  if (!kind) throw UsageError("unknown --kind '" + config.kind + "'");
  const FractionalOrder order = checked_order(config.alpha, "--alpha");
  if (config.n < 2) throw UsageError("--n must be at least 2");
  if (!(config.b > config.a)) throw UsageError("--interval needs a < b");
  const Expression fn = Expression::parse(config.function);

  const Grid grid(config.a, config.b, config.n);
  const SampledFn f = SampledFn::sample(grid, [&fn](double t) { return fn(t); });
  const SampledFn y = apply(build_operator(*kind, order, grid), f);

  return with_output(config, out, [&](std::ostream& os) {
    os << "t,value\n";
    for (std::size_t i = 0; i < y.size(); ++i) {
      os << fmt(grid.node(i)) << ',';
      if (y.usable(i)) os << fmt(y[i]);
      os << '\n';
    }
    return kOk;
  });
}

int run_solve_example(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ExampleProblem problem = checked_problem(config, config.n);
  const SolveReport r = solve(problem);
  const Grid& grid = problem.grid();

  return with_output(config, out, [&](std::ostream& os) {
    os << "t,q_numeric,q_exact,abs_err\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      os << fmt(grid.node(i)) << ',' << fmt(r.q_numeric[i]) << ',' << fmt(r.q_exact[i]) << ','
         << fmt(std::abs(r.q_numeric[i] - r.q_exact[i])) << '\n';
    }
    os << "# max_err=" << fmt(r.max_err) << " l2_err=" << fmt(r.l2_err)
       << " el_max=" << fmt(r.el_max) << " hamilton_max=" << fmt(r.hamilton_max) << '\n';
    return r.l2_err < config.threshold ? kOk : kThresholdFailed;
  });
}

int run_check_equivalence(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ExampleProblem problem = checked_problem(config, config.n);
  const Grid& grid = problem.grid();

  SampledFn q = problem.exact_solution();
  if (config.trial == "linear") {
    q = SampledFn::sample(grid, [](double t) { return t; });
  } else if (config.trial == "random-polynomial") {
    q = random_polynomial_trial(grid, config.seed);
  } else if (config.trial != "exact") {
    throw UsageError("--trial must be exact, linear or random-polynomial");
  }

  const LagrangianSpec spec = problem.lagrangian();
  const ELReport el = el_residual(spec, q);
  const HamiltonResiduals ham = hamilton_residuals(spec, hamiltonian(spec, q));
  double difference = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (el.residual.usable(i) && ham.r_q.usable(i)) {
      difference = std::max(difference, std::abs(el.residual[i] + ham.r_q[i]));
    }
  }

  return with_output(config, out, [&](std::ostream& os) {
    os << "# trial=" << config.trial << " el_max=" << fmt(el.max_abs)
       << " hamilton_max=" << fmt(ham.r_q.max_abs()) << " difference=" << fmt(difference) << '\n';
    return difference < kEquivalenceTolerance ? kOk : kThresholdFailed;
  });
}

int run_converge(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.n_list.size() < 2) throw UsageError("--n-list needs at least two grid sizes");
  for (const std::size_t n : config.n_list) checked_problem(config, n);
  for (std::size_t k = 1; k < config.n_list.size(); ++k) {
    if (config.n_list[k] <= config.n_list[k - 1]) {
      throw UsageError("--n-list must be strictly increasing");
    }
  }
  const ConvergenceTable table =
      convergence_study(FractionalOrder(config.alpha), config.beta, config.n_list);

  return with_output(config, out, [&](std::ostream& os) {
    os << "n,max_err,l2_err,el_max,hamilton_max\n";
    for (const auto& row : table.rows) {
      os << row.n << ',' << fmt(row.max_err) << ',' << fmt(row.l2_err) << ','
         << fmt(row.el_max) << ',' << fmt(row.hamilton_max) << '\n';
    }
    return table.l2_nonincreasing ? kOk : kThresholdFailed;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional variational calculus toolkit"};
  app.require_subcommand(1);
  RunConfig config;
  std::string interval = "0:1";
  std::string out_path;

  auto add_orders = [&](CLI::App* sub, bool with_beta) {
    sub->add_option("--alpha", config.alpha, "Fractional order in (0,1)");
    if (with_beta) sub->add_option("--beta", config.beta, "Exponent of the minimizer t^beta");
    sub->add_option("--out", out_path, "Write CSV to this file instead of stdout");
  };

  auto* deriv = app.add_subcommand("deriv", "Apply a fractional operator to a sampled function");
  deriv->add_option("--kind", config.kind, "rl-left|rl-right|caputo-left|caputo-right|int-left|int-right")
      ->required();
  deriv->add_option("--fn", config.function, "Function of t");
  deriv->add_option("--interval", interval, "Interval as a:b");
  deriv->add_option("--n", config.n, "Number of subintervals");
  add_orders(deriv, false);

  auto* solve_cmd = app.add_subcommand("solve-example", "Solve the example variational problem");
  solve_cmd->add_option("--n", config.n, "Number of subintervals");
  solve_cmd->add_option("--threshold", config.threshold, "Exit 1 unless l2_err is below this");
  add_orders(solve_cmd, true);

  auto* check = app.add_subcommand("check-equivalence",
                                   "Compare Euler-Lagrange and Hamilton residuals on a trial");
  check->add_option("--n", config.n, "Number of subintervals");
  check->add_option("--trial", config.trial, "exact|linear|random-polynomial");
  check->add_option("--seed", config.seed, "Seed for the random polynomial trial");
  add_orders(check, true);

  auto* converge = app.add_subcommand("converge", "Grid refinement study of the example");
  converge->add_option("--n-list", config.n_list, "Comma separated grid sizes")
      ->delimiter(',')
      ->required();
  add_orders(converge, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (!out_path.empty()) config.output_path = out_path;
  try {
    if (deriv->parsed()) {
      config.command = Command::kDeriv;
      std::tie(config.a, config.b) = parse_interval(interval);
      return run_deriv(config, out, err);
    }
    if (solve_cmd->parsed()) {
      config.command = Command::kSolveExample;
      return run_solve_example(config, out, err);
    }
    if (check->parsed()) {
      config.command = Command::kCheckEquivalence;
      return run_check_equivalence(config, out, err);
    }
    config.command = Command::kConverge;
    return run_converge(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace fracvar::cli
