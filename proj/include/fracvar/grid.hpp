#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracvar {

/// Uniform partition of [a, b] into n subintervals.
class Grid {
 public:
  Grid(double a, double b, std::size_t n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t intervals() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }
  double step() const noexcept { return h_; }

  /// Node i; the last node is b exactly.
  double node(std::size_t i) const noexcept {
    return i == n_ ? b_ : a_ + static_cast<double>(i) * h_;
  }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
  double h_;
};

/// Order of a fractional derivative or integral, restricted to (0, 1).
class FractionalOrder {
 public:
  explicit FractionalOrder(double value);
  double value() const noexcept { return value_; }
  /// 1 - value, the order of the companion fractional integral.
  FractionalOrder complement() const { return FractionalOrder(1.0 - value_); }

  friend bool operator==(const FractionalOrder&, const FractionalOrder&) = default;

 private:
  double value_;
};

/// Nodal values of a function on a grid.
///
/// A node may be flagged unusable (an operator row that is singular there).
/// Unusable nodes hold NaN; every usable node is finite.
class SampledFn {
 public:
  SampledFn(Grid grid, std::vector<double> values);
  SampledFn(Grid grid, std::vector<double> values, std::vector<bool> usable);

  static SampledFn sample(const Grid& grid, const std::function<double(double)>& f);
  static SampledFn constant(const Grid& grid, double c);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  bool usable(std::size_t i) const noexcept { return usable_[i]; }
  bool all_usable() const noexcept;
  const std::vector<bool>& usable_mask() const noexcept { return usable_; }

  /// Largest |value| over usable nodes.
  double max_abs() const noexcept;

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<bool> usable_;
};

/// Throws std::invalid_argument unless f and g live on the same grid.
void require_same_grid(const SampledFn& f, const SampledFn& g);

/// Pointwise c1*f + c2*g; the result is usable where both inputs are.
SampledFn combine(double c1, const SampledFn& f, double c2, const SampledFn& g);

}  // namespace fracvar
