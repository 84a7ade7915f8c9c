#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "fracvar/grid.hpp"

namespace fracvar {

enum class OperatorKind {
  kRiemannLiouvilleLeft,
  kRiemannLiouvilleRight,
  kCaputoLeft,
  kCaputoRight,
  kIntegralLeft,
  kIntegralRight,
};

bool is_left(OperatorKind kind) noexcept;
std::string_view to_string(OperatorKind kind) noexcept;
/// Parses the CLI spelling ("caputo-left", "rl-right", "int-left", ...).
std::optional<OperatorKind> parse_operator_kind(std::string_view name) noexcept;

/// Dense realization of one fractional derivative or integral on a grid.
///
/// Caputo kinds use the L1 scheme. Riemann-Liouville kinds are the Caputo
/// matrix plus the analytic endpoint term f(a)(x-a)^{-alpha}/Gamma(1-alpha)
/// (mirrored for the right kind), so their row at the anchoring endpoint is
/// singular and flagged unusable. Integral kinds use product trapezoid
/// weights (piecewise-linear f, kernel integrated exactly). For integral
/// kinds `order()` is the integration order.
///
/// Left kinds are lower triangular; right kinds are the left matrix
/// conjugated by the index reversal i -> n - i.
class FracOperator {
 public:
  OperatorKind kind() const noexcept { return kind_; }
  FractionalOrder order() const noexcept { return order_; }
  const Grid& grid() const noexcept { return grid_; }
  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  std::optional<std::size_t> unusable_row() const noexcept { return unusable_row_; }

 private:
  friend FracOperator build_operator(OperatorKind, FractionalOrder, const Grid&);
  friend SampledFn apply(const FracOperator&, const SampledFn&);

  FracOperator(OperatorKind kind, FractionalOrder order, Grid grid)
      : kind_(kind), order_(order), grid_(grid) {}

  OperatorKind kind_;
  FractionalOrder order_;
  Grid grid_;
  Eigen::MatrixXd weights_;
  // Left-oriented copy of the weights; equals weights_ for left kinds.
  Eigen::MatrixXd lower_;
  // Response of each row to the constant function 1; derivative kinds
  // act on f - f(anchor) and add f(anchor) times this column.
  Eigen::VectorXd constant_response_;
  std::optional<std::size_t> unusable_row_;
};

FracOperator build_operator(OperatorKind kind, FractionalOrder order, const Grid& grid);

/// Applies op to f. The flagged row, if any, comes back as an unusable node.
SampledFn apply(const FracOperator& op, const SampledFn& f);

/// Left Caputo derivative of (t - a)^beta:
/// Gamma(1+beta)/Gamma(1+beta-alpha) (t-a)^{beta-alpha}.
double caputo_power_rule(double beta, FractionalOrder alpha, double t, double a = 0.0);

}  // namespace fracvar
