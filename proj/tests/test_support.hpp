#pragma once

#include <random>
#include <vector>

#include "roughdiff/coefficient.hpp"
#include "roughdiff/piecewise.hpp"

namespace testsupport {

using roughdiff::CoefficientField;
using roughdiff::Interval;
using roughdiff::PiecewiseFunction;
using roughdiff::Polynomial;

/// Random piecewise polynomial on iv with up to `max_interior` interior
/// breakpoints and per-cell degree at most `max_degree`.
inline PiecewiseFunction random_piecewise(std::mt19937_64& rng, const Interval& iv,
                                          int max_interior = 4, int max_degree = 3) {
  std::uniform_int_distribution<int> n_breaks(0, max_interior);
  std::uniform_real_distribution<double> pos(iv.a, iv.b);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> deg(0, max_degree);

  std::vector<double> breaks{iv.a, iv.b};
  const int m = n_breaks(rng);
  for (int k = 0; k < m; ++k) {
    const double x = pos(rng);
    if (x > iv.a + 1e-3 && x < iv.b - 1e-3) breaks.push_back(x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [&](double a, double b) { return b - a < 1e-3; }),
               breaks.end());
  breaks.back() = iv.b;

  std::vector<Polynomial> pieces;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (double& v : c) v = coeff(rng);
    pieces.emplace_back(std::move(c));
  }
  return PiecewiseFunction(std::move(breaks), std::move(pieces));
}

/// Random piecewise-constant coefficient with values in [lo, hi]; when
/// `allow_zero_cell` is set, one cell is forced to zero.
inline CoefficientField random_coefficient(std::mt19937_64& rng, const Interval& iv,
                                           double lo = 0.3, double hi = 3.0,
                                           bool allow_zero_cell = false, int max_interior = 4) {
  std::uniform_int_distribution<int> n_breaks(1, max_interior);
  std::uniform_real_distribution<double> pos(iv.a, iv.b);
  std::uniform_real_distribution<double> val(lo, hi);

  std::vector<double> breaks{iv.a, iv.b};
  const int m = n_breaks(rng);
  for (int k = 0; k < m; ++k) {
    const double x = pos(rng);
    if (x > iv.a + 1e-3 && x < iv.b - 1e-3) breaks.push_back(x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [&](double a, double b) { return b - a < 1e-3; }),
               breaks.end());
  breaks.back() = iv.b;

  std::vector<double> values(breaks.size() - 1);
  for (double& v : values) v = val(rng);
  if (allow_zero_cell && values.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    values[pick(rng)] = 0.0;
  }
  return CoefficientField::piecewise_constant(std::move(breaks), values);
}

/// ramp x on the interval, as a one-cell piecewise function
inline PiecewiseFunction ramp(const Interval& iv) {
  return PiecewiseFunction::from_global({iv.a, iv.b}, {Polynomial({0.0, 1.0})});
}

/// Closed-form solution of the three-zone contrast problem on (-1, 1) with
/// unit source: (1 - x^2)/2 outside, (1 - 4x^2 + 3M)/(8M) inside.
inline PiecewiseFunction contrast_closed_form(double M) {
  const Polynomial outer({0.5, 0.0, -0.5});
  const Polynomial inner({(1.0 + 3.0 * M) / (8.0 * M), 0.0, -0.5 / M});
  return PiecewiseFunction::from_global({-1.0, -0.5, 0.5, 1.0}, {outer, inner, outer});
}

}  // namespace testsupport
