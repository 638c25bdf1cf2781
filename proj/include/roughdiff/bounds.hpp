#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "roughdiff/coefficient.hpp"
#include "roughdiff/errors.hpp"
#include "roughdiff/interval.hpp"

namespace roughdiff {

/// Sharp constant of the Dirichlet-gradient inequality on an interval,
/// c = pi / (b - a). On a rectangle the slab form applies axiswise, so the
/// same expression with the chosen axis length is valid there too.
inline double poincare_constant(const Interval& iv) { return std::numbers::pi / iv.length(); }

/// Closed-form bound on the norm of the mixed inverse:
/// 2 (b - a) ||pbar||_1^{-1} (1 + ||pbar||_1)^2.
inline double inverse_norm_bound(const CoefficientField& pbar) {
  const double m = pbar.norm_l1();
  if (!(m > 0.0)) throw DegeneracyError("zero-mass coefficient");
  const double len = pbar.interval().length();
  return 2.0 * len * (1.0 + m) * (1.0 + m) / m;
}

/// Radius of the ball around 0 guaranteed inside the resolvent set:
/// 2^{-1} (b - a)^{-1} ||pbar||_1 (1 + ||pbar||_1)^{-2}. The exact reciprocal
/// of inverse_norm_bound.
inline double resolvent_radius(const CoefficientField& pbar) {
  const double m = pbar.norm_l1();
  if (!(m > 0.0)) throw DegeneracyError("zero-mass coefficient");
  const double len = pbar.interval().length();
  return 0.5 * m / (len * (1.0 + m) * (1.0 + m));
}

/// Right side of the Lipschitz estimate for the distance of two mixed
/// inverses. Asymmetric in its arguments, as stated.
inline double lipschitz_rhs(const CoefficientField& pbar1, const CoefficientField& pbar2) {
  if (!pbar1.interval().matches(pbar2.interval()))
    throw DomainError("coefficients live on different intervals");
  const double m1 = pbar1.norm_l1();
  const double m2 = pbar2.norm_l1();
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw DegeneracyError("zero-mass coefficient");
  const double len = pbar1.interval().length();
  const double dist = (pbar2.shape() - pbar1.shape()).norm_l1();
  return (2.0 * len / m1) * (2.0 + m1 + m2 + 1.0 / m2) * dist;
}

/// Lower bound c^2 / ess_sup(pbar) on the bottom of the primal spectrum.
inline double spectral_gap_bound(const CoefficientField& pbar, double poincare_c) {
  if (!(poincare_c > 0.0)) throw UsageError("Poincare constant must be positive");
  return poincare_c * poincare_c / pbar.ess_sup();
}

inline double spectral_gap_bound(const CoefficientField& pbar) {
  return spectral_gap_bound(pbar, poincare_constant(pbar.interval()));
}

/// Open interval (-C1, c^2 / (c + C2)) guaranteed inside the resolvent set of
/// the mixed operator for coefficients in the admissible class.
inline std::pair<double, double> resolvent_interval(const CoefficientField& pbar,
                                                    double poincare_c) {
  if (!pbar.in_class_L())
    throw PreconditionError("coefficient is not bounded away from zero");
  if (!(poincare_c > 0.0)) throw UsageError("Poincare constant must be positive");
  return {-pbar.ess_inf(), poincare_c * poincare_c / (poincare_c + pbar.ess_sup())};
}

inline std::pair<double, double> resolvent_interval(const CoefficientField& pbar) {
  return resolvent_interval(pbar, poincare_constant(pbar.interval()));
}

/// One evaluated bound paired with an empirical measurement.
struct BoundReport {
  std::string name;
  double paper_value;
  double empirical_value;
  bool satisfied;
  double slack;
};

inline BoundReport make_report(std::string name, double paper_value, double empirical_value) {
  return BoundReport{std::move(name), paper_value, empirical_value,
                     empirical_value <= paper_value * (1.0 + 1e-9),
                     paper_value - empirical_value};
}

}  // namespace roughdiff
