#pragma once

namespace fracvar {

/// Gamma function via the Lanczos approximation (g = 7, nine coefficients),
/// with the reflection formula below 0.5. Throws std::domain_error at the
/// poles 0, -1, -2, ...
double gamma(double x);

}  // namespace fracvar
