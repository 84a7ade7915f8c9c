#include "fracvar/variational.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracvar/operators.hpp"
#include "fracvar/quadrature.hpp"

namespace fracvar {

namespace {

struct PointwiseFields {
  SampledFn d_left;
  SampledFn d_right;
};

PointwiseFields caputo_fields(const LagrangianSpec& spec, const SampledFn& q) {
  const Grid& grid = q.grid();
  return {apply(build_operator(OperatorKind::kCaputoLeft, spec.alpha(), grid), q),
          apply(build_operator(OperatorKind::kCaputoRight, spec.beta(), grid), q)};
}

template <typename F>
SampledFn pointwise(const SampledFn& q, const PointwiseFields& d, F&& f) {
  const Grid& grid = q.grid();
  std::vector<double> v(q.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f(grid.node(i), q[i], d.d_left[i], d.d_right[i]);
    if (!std::isfinite(v[i])) {
      throw std::domain_error("Lagrangian callback is not finite at node " + std::to_string(i) +
                              " (t = " + std::to_string(grid.node(i)) + ")");
    }
  }
  return SampledFn(grid, std::move(v));
}

SampledFn sum_usable(std::initializer_list<const SampledFn*> terms, double sign) {
  const SampledFn& first = **terms.begin();
  std::vector<double> v(first.size(), 0.0);
  std::vector<bool> usable(first.size(), true);
  for (const SampledFn* term : terms) {
    require_same_grid(first, *term);
    for (std::size_t i = 0; i < v.size(); ++i) {
      usable[i] = usable[i] && term->usable(i);
      if (usable[i]) v[i] += sign * (*term)[i];
    }
  }
  return SampledFn(first.grid(), std::move(v), std::move(usable));
}

bool close(double analytic, double numeric, double rel) {
  return std::abs(analytic - numeric) <= rel * std::max({1.0, std::abs(analytic), std::abs(numeric)});
}

}  // namespace

LagrangianSpec::LagrangianSpec(Fn value, Fn d_q, Fn d_left, Fn d_right, FractionalOrder alpha,
                               FractionalOrder beta)
    : LagrangianSpec(std::move(value), std::move(d_q), std::move(d_left), std::move(d_right), alpha,
                     beta, Probe{}) {}

LagrangianSpec::LagrangianSpec(Fn value, Fn d_q, Fn d_left, Fn d_right, FractionalOrder alpha,
                               FractionalOrder beta, const Probe& probe)
    : value_(std::move(value)),
      d_q_(std::move(d_q)),
      d_left_(std::move(d_left)),
      d_right_(std::move(d_right)),
      alpha_(alpha),
      beta_(beta) {
  if (!value_ || !d_q_ || !d_left_ || !d_right_) {
    throw std::invalid_argument("LagrangianSpec: all four callbacks are required");
  }
  validate(probe);
}

void LagrangianSpec::validate(const Probe& probe) const {
  constexpr double kRelTol = 1e-6;
  std::mt19937_64 rng(0x5eedf00d);
  std::uniform_real_distribution<double> time(probe.t_lo, probe.t_hi);
  std::uniform_real_distribution<double> arg(-probe.radius, probe.radius);

  for (int k = 0; k < probe.count; ++k) {
    const double t = time(rng);
    double x[3] = {arg(rng), arg(rng), arg(rng)};
    const Fn* partials[3] = {&d_q_, &d_left_, &d_right_};
    static constexpr const char* kNames[3] = {"dL/dq", "dL/d(D_left q)", "dL/d(D_right q)"};
    for (int m = 0; m < 3; ++m) {
      const double step = 1e-5 * std::max(1.0, std::abs(x[m]));
      double up[3] = {x[0], x[1], x[2]};
      double down[3] = {x[0], x[1], x[2]};
      up[m] += step;
      down[m] -= step;
      const double fd = (value_(t, up[0], up[1], up[2]) - value_(t, down[0], down[1], down[2])) /
                        (up[m] - down[m]);
      const double analytic = (*partials[m])(t, x[0], x[1], x[2]);
      if (!close(analytic, fd, kRelTol)) {
        std::ostringstream msg;
        msg << "LagrangianSpec: " << kNames[m] << " disagrees with finite differences at (t="
            << t << ", q=" << x[0] << ", dl=" << x[1] << ", dr=" << x[2] << "): " << analytic
            << " vs " << fd;
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

double evaluate_functional(const LagrangianSpec& spec, const SampledFn& q) {
  const auto d = caputo_fields(spec, q);
  const SampledFn integrand = pointwise(q, d, [&](double t, double qi, double dl, double dr) {
    return spec.value(t, qi, dl, dr);
  });
  return trapezoid(integrand);
}

ELReport el_residual(const LagrangianSpec& spec, const SampledFn& q) {
  const Grid& grid = q.grid();
  const auto d = caputo_fields(spec, q);
  const auto [u, v] = momenta(spec, q);
  const SampledFn lq = pointwise(q, d, [&](double t, double qi, double dl, double dr) {
    return spec.d_q(t, qi, dl, dr);
  });
  const SampledFn right = apply(build_operator(OperatorKind::kRiemannLiouvilleRight, spec.alpha(), grid), u);
  const SampledFn left = apply(build_operator(OperatorKind::kRiemannLiouvilleLeft, spec.beta(), grid), v);
  SampledFn residual = sum_usable({&lq, &right, &left}, 1.0);
  const double max_abs = residual.max_abs();
  const double l2 = l2_norm(residual);
  return {std::move(residual), max_abs, l2};
}

TransversalityTerms transversality_terms(const LagrangianSpec& spec, const SampledFn& q) {
  const Grid& grid = q.grid();
  const auto [u, v] = momenta(spec, q);
  const SampledFn iu =
      apply(build_operator(OperatorKind::kIntegralRight, spec.alpha().complement(), grid), u);
  const SampledFn iv =
      apply(build_operator(OperatorKind::kIntegralLeft, spec.beta().complement(), grid), v);
  const std::size_t n = grid.intervals();
  return {iu[0] - iv[0], iu[n] - iv[n]};
}

std::pair<SampledFn, SampledFn> momenta(const LagrangianSpec& spec, const SampledFn& q) {
  const auto d = caputo_fields(spec, q);
  return {pointwise(q, d, [&](double t, double qi, double dl, double dr) {
            return spec.d_left(t, qi, dl, dr);
          }),
          pointwise(q, d, [&](double t, double qi, double dl, double dr) {
            return spec.d_right(t, qi, dl, dr);
          })};
}

TrajectoryBundle hamiltonian(const LagrangianSpec& spec, const SampledFn& q) {
  auto d = caputo_fields(spec, q);
  auto [pa, pb] = momenta(spec, q);
  const Grid& grid = q.grid();
  std::vector<double> h(q.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double dl = d.d_left[i];
    const double dr = d.d_right[i];
    h[i] = pa[i] * dl + pb[i] * dr - spec.value(grid.node(i), q[i], dl, dr);
  }
  SampledFn hf(grid, std::move(h));
  return {q, std::move(d.d_left), std::move(d.d_right), std::move(pa), std::move(pb), std::move(hf)};
}

HamiltonResiduals hamilton_residuals(const LagrangianSpec& spec, const TrajectoryBundle& bundle) {
  const SampledFn& q = bundle.q;
  for (const SampledFn* f :
       {&bundle.d_left, &bundle.d_right, &bundle.p_alpha, &bundle.p_beta, &bundle.hamiltonian}) {
    require_same_grid(q, *f);
  }
  const Grid& grid = q.grid();
  const PointwiseFields d{bundle.d_left, bundle.d_right};

  const SampledFn r_left = combine(1.0, bundle.p_alpha, -1.0,
                                   pointwise(q, d, [&](double t, double qi, double dl, double dr) {
                                     return spec.d_left(t, qi, dl, dr);
                                   }));
  const SampledFn r_right = combine(1.0, bundle.p_beta, -1.0,
                                    pointwise(q, d, [&](double t, double qi, double dl, double dr) {
                                      return spec.d_right(t, qi, dl, dr);
                                    }));

  // dH/dq at fixed momenta reduces to -dL/dq.
  const SampledFn lq = pointwise(q, d, [&](double t, double qi, double dl, double dr) {
    return spec.d_q(t, qi, dl, dr);
  });
  const SampledFn right =
      apply(build_operator(OperatorKind::kRiemannLiouvilleRight, spec.alpha(), grid), bundle.p_alpha);
  const SampledFn left =
      apply(build_operator(OperatorKind::kRiemannLiouvilleLeft, spec.beta(), grid), bundle.p_beta);
  SampledFn r_q = sum_usable({&lq, &right, &left}, -1.0);
  return {r_left, r_right, std::move(r_q)};
}

}  // namespace fracvar
