#pragma once

#include <vector>

#include "fracvar/grid.hpp"

namespace fracvar {

/// Composite trapezoid weights for the grid nodes.
std::vector<double> trapezoid_weights(const Grid& grid);

/// Trapezoid rule over the grid. Unusable nodes take the value of the
/// nearest usable node.
double trapezoid(const SampledFn& f);

/// Trapezoid-rule inner product of f and g (same endpoint convention).
double inner_product(const SampledFn& f, const SampledFn& g);

/// sqrt(trapezoid(f^2)).
double l2_norm(const SampledFn& f);

}  // namespace fracvar
