#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "fracvar/grid.hpp"
#include "fracvar/variational.hpp"

namespace fracvar {

/// Minimize 1/2 int_0^1 (D_left^alpha q - g(t))^2 dt with q(0) = 0, q(1) = 1,
/// where g(t) = Gamma(1+beta)/Gamma(1+beta-alpha) t^{beta-alpha}. The
/// minimizer is q(t) = t^beta. Requires alpha < beta <= 1.
class ExampleProblem {
 public:
  ExampleProblem(FractionalOrder alpha, double beta, std::size_t n);

  FractionalOrder alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  const Grid& grid() const noexcept { return grid_; }

  double target(double t) const;
  double exact(double t) const;
  SampledFn exact_solution() const;
  /// L = 1/2 (D_left q - g)^2; no dependence on q or on the right derivative.
  LagrangianSpec lagrangian() const;

 private:
  FractionalOrder alpha_;
  double beta_;
  Grid grid_;
  double ratio_;
};

struct NormalSystem {
  Eigen::MatrixXd matrix;  // (n-1) x (n-1), interior unknowns q_1..q_{n-1}
  Eigen::VectorXd rhs;
};

/// Normal equations D^T W D q = D^T W (g - boundary) of the discretized
/// functional. Throws std::runtime_error if the matrix is numerically singular.
NormalSystem assemble(const ExampleProblem& problem);

struct SolveReport {
  SampledFn q_numeric;
  SampledFn q_exact;
  double max_err;
  double l2_err;
  double functional_value;
  double el_max;
  double hamilton_max;
};

SolveReport solve(const ExampleProblem& problem);

struct ConvergenceRow {
  std::size_t n;
  double max_err;
  double l2_err;
  double el_max;
  double hamilton_max;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool l2_nonincreasing;
};

/// Solves the example on each grid size. n_list must be strictly increasing
/// with every entry >= 8. A failing solve is rethrown with its n attached.
ConvergenceTable convergence_study(FractionalOrder alpha, double beta,
                                   const std::vector<std::size_t>& n_list);

}  // namespace fracvar
