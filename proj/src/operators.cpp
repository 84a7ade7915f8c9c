#include "fracvar/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracvar/gamma.hpp"

namespace fracvar {

namespace {

bool is_derivative(OperatorKind kind) {
  return kind != OperatorKind::kIntegralLeft && kind != OperatorKind::kIntegralRight;
}

// L1 weights: row i approximates the left Caputo derivative at t_i as
// h^{-alpha}/Gamma(2-alpha) * sum_k b_k (f_{i-k} - f_{i-k-1}),
// b_k = (k+1)^{1-alpha} - k^{1-alpha}.
Eigen::MatrixXd caputo_left_l1(double alpha, const Grid& grid) {
  const std::size_t n = grid.intervals();
  const double coef = std::pow(grid.step(), -alpha) / gamma(2.0 - alpha);
  std::vector<double> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    b[k] = std::pow(kd + 1.0, 1.0 - alpha) - std::pow(kd, 1.0 - alpha);
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    w(i, i) = coef * b[0];
    for (std::size_t j = 1; j < i; ++j) w(i, j) = coef * (b[i - j] - b[i - j - 1]);
    w(i, 0) = -coef * b[i - 1];
  }
  return w;
}

// (t_i - a)^{-alpha}/Gamma(1-alpha); infinite at i = 0, left as zero there.
Eigen::VectorXd rl_endpoint_term(double alpha, const Grid& grid) {
  const std::size_t n = grid.intervals();
  const double g = gamma(1.0 - alpha);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    c(i) = std::pow(static_cast<double>(i) * grid.step(), -alpha) / g;
  }
  return c;
}

// Product trapezoid rule for the left fractional integral of order mu.
Eigen::MatrixXd integral_left_trapezoid(double mu, const Grid& grid) {
  const std::size_t n = grid.intervals();
  const double coef = std::pow(grid.step(), mu) / gamma(mu + 2.0);
  std::vector<double> p(n + 1);
  for (std::size_t k = 0; k <= n; ++k) p[k] = std::pow(static_cast<double>(k), mu + 1.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const double id = static_cast<double>(i);
    w(i, 0) = coef * (p[i - 1] - (id - 1.0 - mu) * std::pow(id, mu));
    for (std::size_t j = 1; j < i; ++j) {
      w(i, j) = coef * (p[i - j + 1] - 2.0 * p[i - j] + p[i - j - 1]);
    }
    w(i, i) = coef;
  }
  return w;
}

// y_i = sum_{j <= i} w(i, j) x_j, skipping a flagged row.
std::vector<double> lower_product(const Eigen::MatrixXd& w, const std::vector<double>& x) {
  const std::size_t size = x.size();
  std::vector<double> y(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += w(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace

bool is_left(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::kRiemannLiouvilleLeft:
    case OperatorKind::kCaputoLeft:
    case OperatorKind::kIntegralLeft:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::kRiemannLiouvilleLeft: return "rl-left";
    case OperatorKind::kRiemannLiouvilleRight: return "rl-right";
    case OperatorKind::kCaputoLeft: return "caputo-left";
    case OperatorKind::kCaputoRight: return "caputo-right";
    case OperatorKind::kIntegralLeft: return "int-left";
    case OperatorKind::kIntegralRight: return "int-right";
  }
  return "unknown";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view name) noexcept {
  for (auto kind : {OperatorKind::kRiemannLiouvilleLeft, OperatorKind::kRiemannLiouvilleRight,
                    OperatorKind::kCaputoLeft, OperatorKind::kCaputoRight,
                    OperatorKind::kIntegralLeft, OperatorKind::kIntegralRight}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

FracOperator build_operator(OperatorKind kind, FractionalOrder order, const Grid& grid) {
  const double alpha = order.value();
  const std::size_t n = grid.intervals();
  FracOperator op(kind, order, grid);

  Eigen::MatrixXd left;
  Eigen::VectorXd response = Eigen::VectorXd::Zero(n + 1);
  switch (kind) {
    case OperatorKind::kCaputoLeft:
    case OperatorKind::kCaputoRight:
      left = caputo_left_l1(alpha, grid);
      break;
    case OperatorKind::kRiemannLiouvilleLeft:
    case OperatorKind::kRiemannLiouvilleRight:
      left = caputo_left_l1(alpha, grid);
      response = rl_endpoint_term(alpha, grid);
      left.col(0) += response;
      op.unusable_row_ = 0;
      break;
    case OperatorKind::kIntegralLeft:
    case OperatorKind::kIntegralRight:
      left = integral_left_trapezoid(alpha, grid);
      break;
  }

  if (is_left(kind)) {
    op.weights_ = left;
    op.constant_response_ = std::move(response);
  } else {
    op.weights_ = left.reverse();
    op.constant_response_ = response.reverse();
    if (op.unusable_row_) op.unusable_row_ = n;
  }
  op.lower_ = std::move(left);
  return op;
}

SampledFn apply(const FracOperator& op, const SampledFn& f) {
  if (!(op.grid() == f.grid())) {
    throw std::invalid_argument("apply: function grid does not match operator grid");
  }
  if (!f.all_usable()) {
    throw std::invalid_argument("apply: input has unusable nodes");
  }
  const std::size_t size = f.size();
  const bool left = is_left(op.kind());

  // Right kinds run the left recurrence on the index-reversed data, so the
  // mirror relation holds bit for bit.
  std::vector<double> x(size);
  for (std::size_t i = 0; i < size; ++i) x[i] = left ? f[i] : f[size - 1 - i];
  const Eigen::MatrixXd& lower = op.lower_;

  std::vector<double> y;
  if (is_derivative(op.kind())) {
    // Derivative rows sum to the endpoint response; acting on increments
    // keeps constants in the exact null space of the Caputo kinds.
    const double anchor = x[0];
    for (double& v : x) v -= anchor;
    y = lower_product(lower, x);
    for (std::size_t i = 0; i < size; ++i) {
      const double r = left ? op.constant_response_(i) : op.constant_response_(size - 1 - i);
      y[i] += anchor * r;
    }
  } else {
    y = lower_product(lower, x);
  }
  if (!left) std::reverse(y.begin(), y.end());

  std::vector<bool> usable(size, true);
  if (auto row = op.unusable_row()) usable[*row] = false;
  return SampledFn(f.grid(), std::move(y), std::move(usable));
}

double caputo_power_rule(double beta, FractionalOrder alpha, double t, double a) {
  if (!(beta > 0.0)) throw std::invalid_argument("caputo_power_rule: beta must be positive");
  if (!(t >= a)) throw std::invalid_argument("caputo_power_rule: need t >= a");
  const double shifted = 1.0 + beta - alpha.value();
  if (shifted <= 0.0 && shifted == std::floor(shifted)) {
    throw std::domain_error("caputo_power_rule: Gamma(1+beta-alpha) has a pole");
  }
  return gamma(1.0 + beta) / gamma(shifted) * std::pow(t - a, beta - alpha.value());
}

}  // namespace fracvar
