#include "fracvar/quadrature.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace fracvar {

namespace {

// Nearest usable node to i, searching outwards; ties go to the lower index.
std::size_t nearest_usable(const SampledFn& f, std::size_t i) {
  const std::size_t n = f.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (i >= d && f.usable(i - d)) return i - d;
    if (i + d < n && f.usable(i + d)) return i + d;
  }
  throw std::domain_error("quadrature: no usable node");
}

double filled(const SampledFn& f, std::size_t i) {
  return f.usable(i) ? f[i] : f[nearest_usable(f, i)];
}

}  // namespace

std::vector<double> trapezoid_weights(const Grid& grid) {
  std::vector<double> w(grid.size(), grid.step());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

double trapezoid(const SampledFn& f) {
  const auto w = trapezoid_weights(f.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w[i] * filled(f, i);
  return sum;
}

double inner_product(const SampledFn& f, const SampledFn& g) {
  require_same_grid(f, g);
  const auto w = trapezoid_weights(f.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w[i] * filled(f, i) * filled(g, i);
  return sum;
}

double l2_norm(const SampledFn& f) { return std::sqrt(inner_product(f, f)); }

}  // namespace fracvar
