#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "roughdiff/coefficient.hpp"
#include "roughdiff/errors.hpp"
#include "roughdiff/piecewise.hpp"

namespace roughdiff {

/// Solution pair of the first-order mixed system on an interval:
///   -q' = f,   u' - pbar q = g,   u(a) = u(b) = 0.
/// u is the density component, q the auxiliary (flux) component; under g = 0
/// the physical flux -p u' equals -q.
struct MixedSolution {
  PiecewiseFunction u;
  PiecewiseFunction q;
  Interval domain;
};

struct ResidualReport {
  double balance;      // L2 norm of (-q' - f)
  double constitutive; // L2 norm of (u' - g - pbar q)
  double boundary;     // max(|u(a)|, |u(b)|)
};

/// Applies the exact inverse of the mixed operator.
///
/// Built from the constructive recipe
///   q0(x) = -int_a^x f,
///   c     = -(1/||pbar||_1) int_a^b (g + pbar q0),
///   q     = q0 + c,
///   u(x)  = int_a^x (g + pbar q),
/// which satisfies the boundary conditions and both cell equations exactly as
/// polynomials. The coefficient may vanish on cells; only positive total mass
/// is required.
inline MixedSolution solve_mixed(const CoefficientField& pbar, const PiecewiseFunction& f,
                                 const PiecewiseFunction& g) {
  const Interval iv = pbar.interval();
  if (!iv.matches(f.interval()) || !iv.matches(g.interval()))
    throw DomainError("coefficient and data live on different intervals");
  const double mass = pbar.norm_l1();
  if (!(mass > 0.0)) throw DegeneracyError("zero-mass coefficient");

  const PiecewiseFunction q0 = -1.0 * f.antiderivative();
  const PiecewiseFunction pbar_q0 = multiply(pbar.shape(), q0);
  const double c = -(g.integral() + pbar_q0.integral()) / mass;
  const PiecewiseFunction q = q0 + c;
  const PiecewiseFunction u =
      linear_combine(1.0, g, 1.0, multiply(pbar.shape(), q)).antiderivative();
  return MixedSolution{u, q, iv};
}

inline MixedSolution solve_mixed(const CoefficientField& pbar, const PiecewiseFunction& f) {
  return solve_mixed(pbar, f, PiecewiseFunction::zero(pbar.interval()));
}

/// Solves the primal problem -(p u')' = f, u(a) = u(b) = 0 for a
/// piecewise-constant diffusivity p bounded away from zero, routed through
/// the mixed inverse with inverse diffusivity 1/p. The q component equals the
/// scaled gradient p u'.
inline MixedSolution solve_primal(const CoefficientField& p, const PiecewiseFunction& f) {
  return solve_mixed(p.reciprocal(), f);
}

/// Norm on the product space: sqrt(||f||_2^2 + ||g||_2^2).
inline double product_norm(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  const double nf = f.norm_l2();
  const double ng = g.norm_l2();
  return std::sqrt(nf * nf + ng * ng);
}

inline ResidualReport residual(const CoefficientField& pbar, const PiecewiseFunction& f,
                               const PiecewiseFunction& g, const MixedSolution& sol) {
  const PiecewiseFunction balance = linear_combine(-1.0, sol.q.derivative(), -1.0, f);
  const PiecewiseFunction constitutive =
      linear_combine(1.0, sol.u.derivative(), -1.0, g) - multiply(pbar.shape(), sol.q);
  const Interval iv = sol.domain;
  return ResidualReport{balance.norm_l2(), constitutive.norm_l2(),
                        std::max(std::abs(sol.u(iv.a)), std::abs(sol.u(iv.b)))};
}

/// Probe pair (f, g) for operator-distance estimation.
struct Probe {
  PiecewiseFunction f;
  PiecewiseFunction g;
};

/// Certified lower bound on the operator-norm distance of two mixed
/// inverses: the largest Rayleigh-type quotient over the given probes.
inline double probe_operator_distance(const CoefficientField& pbar1,
                                      const CoefficientField& pbar2,
                                      std::span<const Probe> probes) {
  if (probes.empty()) throw UsageError("empty probe list");
  double worst = 0.0;
  for (const Probe& probe : probes) {
    const double denom = product_norm(probe.f, probe.g);
    if (!(denom > 0.0)) throw UsageError("zero probe");
    const MixedSolution s1 = solve_mixed(pbar1, probe.f, probe.g);
    const MixedSolution s2 = solve_mixed(pbar2, probe.f, probe.g);
    const double num = product_norm(s1.u - s2.u, s1.q - s2.q);
    worst = std::max(worst, num / denom);
  }
  return worst;
}

/// A small default probe basis: constants, ramps and a quadratic on both
/// components.
inline std::vector<Probe> default_probes(const Interval& iv) {
  const PiecewiseFunction zero = PiecewiseFunction::zero(iv);
  const PiecewiseFunction one = PiecewiseFunction::constant(iv, 1.0);
  const PiecewiseFunction ramp =
      PiecewiseFunction::from_global({iv.a, iv.b}, {Polynomial({0.0, 1.0})});
  const PiecewiseFunction quad =
      PiecewiseFunction::from_global({iv.a, iv.b}, {Polynomial({0.0, 0.0, 1.0})});
  return {Probe{one, zero},  Probe{zero, one}, Probe{ramp, zero},
          Probe{zero, ramp}, Probe{quad, one}, Probe{one, ramp}};
}

}  // namespace roughdiff
