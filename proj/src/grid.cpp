#include "fracvar/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracvar {

Grid::Grid(double a, double b, std::size_t n) : a_(a), b_(b), n_(n), h_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw std::invalid_argument("Grid: need finite a < b");
  }
  if (n < 2) {
    throw std::invalid_argument("Grid: need at least 2 subintervals");
  }
  h_ = (b - a) / static_cast<double>(n);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> t(size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = node(i);
  return t;
}

FractionalOrder::FractionalOrder(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw std::invalid_argument("FractionalOrder: " + std::to_string(value) +
                                " is outside (0, 1)");
  }
}

SampledFn::SampledFn(Grid grid, std::vector<double> values)
    : SampledFn(grid, std::move(values), std::vector<bool>(grid.size(), true)) {}

SampledFn::SampledFn(Grid grid, std::vector<double> values, std::vector<bool> usable)
    : grid_(grid), values_(std::move(values)), usable_(std::move(usable)) {
  if (values_.size() != grid_.size() || usable_.size() != grid_.size()) {
    throw std::invalid_argument("SampledFn: expected " + std::to_string(grid_.size()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!usable_[i]) {
      values_[i] = std::numeric_limits<double>::quiet_NaN();
    } else if (!std::isfinite(values_[i])) {
      throw std::domain_error("SampledFn: non-finite value at node " + std::to_string(i));
    }
  }
}

SampledFn SampledFn::sample(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
  return SampledFn(grid, std::move(v));
}

SampledFn SampledFn::constant(const Grid& grid, double c) {
  return SampledFn(grid, std::vector<double>(grid.size(), c));
}

bool SampledFn::all_usable() const noexcept {
  return std::all_of(usable_.begin(), usable_.end(), [](bool u) { return u; });
}

double SampledFn::max_abs() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (usable_[i]) m = std::max(m, std::abs(values_[i]));
  }
  return m;
}

void require_same_grid(const SampledFn& f, const SampledFn& g) {
  if (!(f.grid() == g.grid())) {
    throw std::invalid_argument("grid mismatch");
  }
}

SampledFn combine(double c1, const SampledFn& f, double c2, const SampledFn& g) {
  require_same_grid(f, g);
  std::vector<double> v(f.size());
  std::vector<bool> usable(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    usable[i] = f.usable(i) && g.usable(i);
    v[i] = usable[i] ? c1 * f[i] + c2 * g[i] : 0.0;
  }
  return SampledFn(f.grid(), std::move(v), std::move(usable));
}

}  // namespace fracvar
