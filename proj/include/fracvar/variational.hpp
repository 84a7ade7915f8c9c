#pragma once

#include <functional>
#include <utility>

#include "fracvar/grid.hpp"

namespace fracvar {

/// Fractional Lagrangian L(t, q, D_left q, D_right q), where D_left is the
/// left Caputo derivative of order alpha and D_right the right Caputo
/// derivative of order beta, together with its three partial derivatives.
///
/// The constructor checks the supplied partials against central finite
/// differences of the Lagrangian on a fixed probe set and throws
/// std::invalid_argument on a mismatch larger than 1e-6 relative.
class LagrangianSpec {
 public:
  using Fn = std::function<double(double t, double q, double d_left, double d_right)>;

  struct Probe {
    double t_lo = 0.1;
    double t_hi = 0.9;
    double radius = 1.0;  // q, d_left, d_right drawn from [-radius, radius]
    int count = 16;
  };

  LagrangianSpec(Fn value, Fn d_q, Fn d_left, Fn d_right, FractionalOrder alpha,
                 FractionalOrder beta);
  LagrangianSpec(Fn value, Fn d_q, Fn d_left, Fn d_right, FractionalOrder alpha,
                 FractionalOrder beta, const Probe& probe);

  double value(double t, double q, double dl, double dr) const { return value_(t, q, dl, dr); }
  double d_q(double t, double q, double dl, double dr) const { return d_q_(t, q, dl, dr); }
  double d_left(double t, double q, double dl, double dr) const { return d_left_(t, q, dl, dr); }
  double d_right(double t, double q, double dl, double dr) const { return d_right_(t, q, dl, dr); }

  FractionalOrder alpha() const noexcept { return alpha_; }
  FractionalOrder beta() const noexcept { return beta_; }

 private:
  void validate(const Probe& probe) const;

  Fn value_;
  Fn d_q_;
  Fn d_left_;
  Fn d_right_;
  FractionalOrder alpha_;
  FractionalOrder beta_;
};

/// Fields along a sampled trajectory: q, its two Caputo derivatives, the
/// canonical momenta and the Hamiltonian H = p_alpha dL + p_beta dR - L.
struct TrajectoryBundle {
  SampledFn q;
  SampledFn d_left;
  SampledFn d_right;
  SampledFn p_alpha;
  SampledFn p_beta;
  SampledFn hamiltonian;
};

struct ELReport {
  SampledFn residual;  // dL/dq + RL_right^alpha(p_alpha) + RL_left^beta(p_beta)
  double max_abs;
  double l2;
};

struct HamiltonResiduals {
  /// p_alpha - dL/d(D_left q). Since H = p v - L(v) gives
  /// dH/dp_alpha - v = (p_alpha - dL/dv) dv/dp_alpha, this field vanishes
  /// exactly when dH/dp_alpha = D_left q holds.
  SampledFn r_left;
  /// Same for the right momentum.
  SampledFn r_right;
  /// dH/dq - RL_right^alpha(p_alpha) - RL_left^beta(p_beta), dH/dq = -dL/dq.
  SampledFn r_q;
};

struct TransversalityTerms {
  double at_a;
  double at_b;
};

/// Trapezoid quadrature of L along q. Throws std::domain_error naming the
/// node if the Lagrangian is not finite there.
double evaluate_functional(const LagrangianSpec& spec, const SampledFn& q);

ELReport el_residual(const LagrangianSpec& spec, const SampledFn& q);

/// I_right^{1-alpha}(p_alpha) - I_left^{1-beta}(p_beta) at both endpoints.
TransversalityTerms transversality_terms(const LagrangianSpec& spec, const SampledFn& q);

std::pair<SampledFn, SampledFn> momenta(const LagrangianSpec& spec, const SampledFn& q);

TrajectoryBundle hamiltonian(const LagrangianSpec& spec, const SampledFn& q);

HamiltonResiduals hamilton_residuals(const LagrangianSpec& spec, const TrajectoryBundle& bundle);

}  // namespace fracvar
