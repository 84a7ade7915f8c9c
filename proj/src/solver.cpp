#include "fracvar/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracvar/gamma.hpp"
#include "fracvar/operators.hpp"
#include "fracvar/quadrature.hpp"

namespace fracvar {

ExampleProblem::ExampleProblem(FractionalOrder alpha, double beta, std::size_t n)
    : alpha_(alpha), beta_(beta), grid_(0.0, 1.0, n), ratio_(0.0) {
  if (!(beta > alpha.value() && beta <= 1.0)) {
    throw std::invalid_argument("ExampleProblem: need alpha < beta <= 1 (alpha = " +
                                std::to_string(alpha.value()) +
                                ", beta = " + std::to_string(beta) + ")");
  }
  ratio_ = gamma(1.0 + beta) / gamma(1.0 + beta - alpha.value());
}

double ExampleProblem::target(double t) const {
  return ratio_ * std::pow(t, beta_ - alpha_.value());
}

double ExampleProblem::exact(double t) const { return std::pow(t, beta_); }

SampledFn ExampleProblem::exact_solution() const {
  return SampledFn::sample(grid_, [this](double t) { return exact(t); });
}

LagrangianSpec ExampleProblem::lagrangian() const {
  auto target = [alpha = alpha_.value(), beta = beta_, ratio = ratio_](double t) {
    return ratio * std::pow(t, beta - alpha);
  };
  auto zero = [](double, double, double, double) { return 0.0; };
  // The right-derivative slot is unused; beta here is a power, not an order,
  // and may equal 1, so alpha stands in as the (irrelevant) right order.
  return LagrangianSpec(
      [target](double t, double, double dl, double) {
        const double r = dl - target(t);
        return 0.5 * r * r;
      },
      zero, [target](double t, double, double dl, double) { return dl - target(t); }, zero,
      alpha_, alpha_);
}

NormalSystem assemble(const ExampleProblem& problem) {
  const Grid& grid = problem.grid();
  const std::size_t n = grid.intervals();
  const FracOperator op = build_operator(OperatorKind::kCaputoLeft, problem.alpha(), grid);
  const Eigen::MatrixXd& d = op.weights();

  const auto w_std = trapezoid_weights(grid);
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(w_std.data(), w_std.size());
  Eigen::VectorXd g(n + 1);
  for (std::size_t i = 0; i <= n; ++i) g(i) = problem.target(grid.node(i));

  // q_0 = 0 contributes nothing; q_n = 1 contributes column n.
  const Eigen::VectorXd boundary = d.col(n) * problem.exact(grid.b());
  const auto interior = d.middleCols(1, n - 1);
  const Eigen::MatrixXd weighted = w.asDiagonal() * interior;

  NormalSystem sys;
  sys.matrix = interior.transpose() * weighted;
  sys.matrix = 0.5 * (sys.matrix + sys.matrix.transpose()).eval();
  sys.rhs = weighted.transpose() * (g - boundary);

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(sys.matrix);
  if (ldlt.info() != Eigen::Success || !(ldlt.rcond() * 1e14 > 1.0)) {
    throw std::runtime_error("assemble: normal matrix is numerically singular");
  }
  return sys;
}

SolveReport solve(const ExampleProblem& problem) {
  const Grid& grid = problem.grid();
  const std::size_t n = grid.intervals();
  const NormalSystem sys = assemble(problem);

  const Eigen::LLT<Eigen::MatrixXd> llt(sys.matrix);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("solve: normal matrix is not positive definite");
  }
  const Eigen::VectorXd interior = llt.solve(sys.rhs);
  if (!interior.allFinite()) {
    throw std::runtime_error("solve: non-finite solution");
  }

  std::vector<double> q(n + 1);
  q[0] = problem.exact(grid.a());
  q[n] = problem.exact(grid.b());
  for (std::size_t i = 1; i < n; ++i) q[i] = interior(static_cast<Eigen::Index>(i - 1));

  SampledFn q_numeric(grid, std::move(q));
  SampledFn q_exact = problem.exact_solution();
  const SampledFn err = combine(1.0, q_numeric, -1.0, q_exact);

  const LagrangianSpec spec = problem.lagrangian();
  const ELReport el = el_residual(spec, q_numeric);
  const HamiltonResiduals ham = hamilton_residuals(spec, hamiltonian(spec, q_numeric));

  return {q_numeric,
          q_exact,
          err.max_abs(),
          l2_norm(err),
          evaluate_functional(spec, q_numeric),
          el.max_abs,
          ham.r_q.max_abs()};
}

ConvergenceTable convergence_study(FractionalOrder alpha, double beta,
                                   const std::vector<std::size_t>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("convergence_study: empty grid list");
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 8) throw std::invalid_argument("convergence_study: grid sizes must be >= 8");
    if (k > 0 && n_list[k] <= n_list[k - 1]) {
      throw std::invalid_argument("convergence_study: grid sizes must be strictly increasing");
    }
  }

  ConvergenceTable table{{}, true};
  for (const std::size_t n : n_list) {
    try {
      const SolveReport r = solve(ExampleProblem(alpha, beta, n));
      table.rows.push_back({n, r.max_err, r.l2_err, r.el_max, r.hamilton_max});
    } catch (const std::exception& e) {
      throw std::runtime_error("convergence_study: n = " + std::to_string(n) + ": " + e.what());
    }
  }
  for (std::size_t k = 1; k < table.rows.size(); ++k) {
    if (table.rows[k].l2_err > table.rows[k - 1].l2_err) table.l2_nonincreasing = false;
  }
  return table;
}

}  // namespace fracvar
