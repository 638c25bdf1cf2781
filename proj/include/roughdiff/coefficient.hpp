#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "roughdiff/errors.hpp"
#include "roughdiff/piecewise.hpp"

namespace roughdiff {

/// Nonnegative piecewise-polynomial coefficient: the inverse diffusivity.
///
/// The essential bounds are the exact per-cell extrema of the shape. A field
/// belongs to the admissible class L exactly when ess_inf() > 0; fields with
/// zeros (infinite diffusivity on subregions) are allowed as long as the mass
/// is positive.
class CoefficientField {
public:
  explicit CoefficientField(PiecewiseFunction shape) : shape_(std::move(shape)) {
    auto [mn, mx] = shape_.range();
    if (mn < 0.0) throw DomainError("coefficient must be nonnegative on every cell");
    ess_inf_ = mn;
    ess_sup_ = mx;
    mass_ = shape_.integral();
    if (!(mass_ > 0.0)) throw DegeneracyError("coefficient has zero mass");
  }

  const PiecewiseFunction& shape() const { return shape_; }
  Interval interval() const { return shape_.interval(); }
  double ess_inf() const { return ess_inf_; }
  double ess_sup() const { return ess_sup_; }
  double norm_l1() const { return mass_; }
  bool in_class_L() const { return ess_inf_ > 0.0; }

  double operator()(double x) const { return shape_(x); }

  static CoefficientField constant(const Interval& iv, double v) {
    return CoefficientField(PiecewiseFunction::constant(iv, v));
  }

  static CoefficientField piecewise_constant(std::vector<double> breakpoints,
                                             const std::vector<double>& values) {
    std::vector<Polynomial> pieces;
    pieces.reserve(values.size());
    for (double v : values) pieces.push_back(Polynomial::constant(v));
    return CoefficientField(PiecewiseFunction(std::move(breakpoints), std::move(pieces)));
  }

  /// Cellwise reciprocal, defined for piecewise-constant fields only.
  CoefficientField reciprocal() const {
    if (!shape_.is_piecewise_constant())
      throw RepresentationError("reciprocal of a non-constant piece is not polynomial");
    if (!(ess_inf_ > 0.0)) throw DegeneracyError("reciprocal of a coefficient touching zero");
    std::vector<Polynomial> pieces;
    pieces.reserve(shape_.num_cells());
    for (std::size_t j = 0; j < shape_.num_cells(); ++j)
      pieces.push_back(Polynomial::constant(1.0 / shape_.piece(j).coefficients()[0]));
    return CoefficientField(PiecewiseFunction(shape_.breakpoints(), std::move(pieces)));
  }

private:
  PiecewiseFunction shape_;
  double ess_inf_ = 0.0;
  double ess_sup_ = 0.0;
  double mass_ = 0.0;
};

/// Three-zone contrast geometry: value 1 outside a middle subregion, 1/M
/// inside. The M -> infinity limit is the indicator of the outer region.
class ContrastFamily {
public:
  ContrastFamily(const Interval& iv, double inset_left, double inset_right)
      : iv_(iv), left_(inset_left), right_(inset_right) {
    if (!(iv.a < left_ && left_ < right_ && right_ < iv.b))
      throw DomainError("insets must satisfy a < left < right < b");
  }

  const Interval& interval() const { return iv_; }

  /// Inverse diffusivity for contrast M: a diffusivity of M in the middle
  /// subregion reads 1/M here.
  CoefficientField member(double contrast) const {
    if (!(contrast > 0.0)) throw UsageError("contrast must be positive");
    return CoefficientField::piecewise_constant({iv_.a, left_, right_, iv_.b},
                                                {1.0, 1.0 / contrast, 1.0});
  }

  /// Diffusivity field itself (1, M, 1); reciprocal() of this is member(M).
  CoefficientField diffusivity(double contrast) const {
    if (!(contrast > 0.0)) throw UsageError("contrast must be positive");
    return CoefficientField::piecewise_constant({iv_.a, left_, right_, iv_.b},
                                                {1.0, contrast, 1.0});
  }

  /// The M -> infinity member: zero on the middle subregion.
  CoefficientField asymptotic_member() const {
    return CoefficientField::piecewise_constant({iv_.a, left_, right_, iv_.b}, {1.0, 0.0, 1.0});
  }

private:
  Interval iv_;
  double left_;
  double right_;
};

/// Mollification of a piecewise-constant target: member nu agrees with the
/// target outside width-nu neighbourhoods of the interior breakpoints and
/// ramps linearly across them. The L1 distance to the target is
/// sum_j widths[nu] * |jump_j| / 2, strictly decreasing in nu.
class MollifiedSequence {
public:
  MollifiedSequence(CoefficientField target, std::vector<double> widths)
      : target_(std::move(target)), widths_(std::move(widths)) {
    if (!target_.shape().is_piecewise_constant())
      throw RepresentationError("mollification target must be piecewise constant");
    if (widths_.empty()) throw UsageError("empty width list");
    for (std::size_t k = 0; k < widths_.size(); ++k) {
      if (!(widths_[k] > 0.0)) throw UsageError("widths must be positive");
      if (k > 0 && !(widths_[k] < widths_[k - 1]))
        throw UsageError("widths must be strictly decreasing");
    }
    double min_cell = std::numeric_limits<double>::infinity();
    const auto& breaks = target_.shape().breakpoints();
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j)
      min_cell = std::min(min_cell, breaks[j + 1] - breaks[j]);
    if (!(widths_.front() < 0.5 * min_cell))
      throw UsageError("largest width must fit strictly inside the smallest cell");
  }

  std::size_t size() const { return widths_.size(); }
  const CoefficientField& target() const { return target_; }
  double width(std::size_t index) const { return widths_.at(index); }

  CoefficientField member(std::size_t index) const {
    if (index >= widths_.size()) throw UsageError("mollified member index out of range");
    const double delta = widths_[index];
    const auto& breaks = target_.shape().breakpoints();
    std::vector<double> xs{breaks.front()};
    std::vector<Polynomial> pieces;
    auto value = [&](std::size_t cell) { return target_.shape().piece(cell).coefficients()[0]; };
    for (std::size_t j = 1; j + 1 < breaks.size(); ++j) {
      const double vl = value(j - 1), vr = value(j);
      pieces.push_back(Polynomial::constant(vl));
      xs.push_back(breaks[j] - delta);
      pieces.push_back(Polynomial({vl, (vr - vl) / (2.0 * delta)}));
      xs.push_back(breaks[j] + delta);
    }
    pieces.push_back(Polynomial::constant(value(breaks.size() - 2)));
    xs.push_back(breaks.back());
    return CoefficientField(PiecewiseFunction(std::move(xs), std::move(pieces)));
  }

private:
  CoefficientField target_;
  std::vector<double> widths_;
};

}  // namespace roughdiff
