#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "roughdiff/errors.hpp"

namespace roughdiff::fd {

/// Planar coefficient field with exact (or near-exact) cell averages.
class Coefficient2D {
public:
  virtual ~Coefficient2D() = default;
  virtual double value(double x, double y) const = 0;
  virtual double cell_average(double x0, double x1, double y0, double y1) const = 0;
  virtual double ess_inf() const = 0;
  virtual double ess_sup() const = 0;
};

class Constant2D final : public Coefficient2D {
public:
  explicit Constant2D(double v) : v_(v) {
    if (v < 0.0) throw DomainError("coefficient must be nonnegative");
  }
  double value(double, double) const override { return v_; }
  double cell_average(double, double, double, double) const override { return v_; }
  double ess_inf() const override { return v_; }
  double ess_sup() const override { return v_; }

private:
  double v_;
};

namespace detail {

/// Square wave with period 2w starting at +1 on [origin, origin + w).
/// value(x) = +-1 by block parity; integral has a closed sawtooth form.
struct SquareWave {
  double origin;
  double w;

  double value(double x) const {
    const double k = std::floor((x - origin) / w);
    return (static_cast<long long>(k) % 2 == 0) ? 1.0 : -1.0;
  }

  double integral(double x0, double x1) const {  // int_{x0}^{x1} value, exact
    std::vector<double> cuts{x0, x1};
    const auto k0 = static_cast<long long>(std::floor((x0 - origin) / w)) - 1;
    const auto k1 = static_cast<long long>(std::ceil((x1 - origin) / w)) + 1;
    for (long long k = k0; k <= k1; ++k) {
      const double boundary = origin + static_cast<double>(k) * w;
      if (boundary > x0 && boundary < x1) cuts.push_back(boundary);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      total += value(0.5 * (cuts[i] + cuts[i + 1])) * (cuts[i + 1] - cuts[i]);
    return total;
  }
};

/// Square wave with linear ramps of half-width delta/2 around each sign
/// change (total ramp width delta).
struct MollifiedSquareWave {
  SquareWave sharp;
  double delta;

  double value(double x) const {
    // distance to nearest block boundary
    const double s = (x - sharp.origin) / sharp.w;
    const double k = std::floor(s + 0.5);
    const double d = x - (sharp.origin + k * sharp.w);  // signed dist to nearest boundary
    if (std::abs(d) >= 0.5 * delta) return sharp.value(x);
    // ramp from the left block's sign to the right block's sign
    const double left_sign = (static_cast<long long>(k) % 2 == 0) ? -1.0 : 1.0;
    // boundary at index k separates block k-1 (sign (-1)^{k-1}) from block k
    const double right_sign = -left_sign;
    return left_sign + (right_sign - left_sign) * (d + 0.5 * delta) / delta;
  }

  double integral(double x0, double x1) const {
    // piecewise linear: integrate by splitting at block boundaries and ramp
    // edges, trapezoid on each span
    std::vector<double> cuts{x0, x1};
    const double k0 = std::floor((x0 - sharp.origin) / sharp.w) - 1.0;
    const double k1 = std::ceil((x1 - sharp.origin) / sharp.w) + 1.0;
    for (double k = k0; k <= k1; k += 1.0) {
      const double boundary = sharp.origin + k * sharp.w;
      for (double edge : {boundary - 0.5 * delta, boundary, boundary + 0.5 * delta})
        if (edge > x0 && edge < x1) cuts.push_back(edge);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      total += 0.5 * (value(cuts[i]) + value(cuts[i + 1])) * (cuts[i + 1] - cuts[i]);
    return total;
  }
};

}  // namespace detail

/// Checkerboard with blocks_x x blocks_y blocks on a rectangle; the block
/// containing the lower-left corner takes `v00`.
class Checkerboard2D final : public Coefficient2D {
public:
  Checkerboard2D(double ax, double bx, double ay, double by, int blocks_x, int blocks_y,
                 double v00, double v_other)
      : ax_(ax), ay_(ay), v00_(v00), vo_(v_other) {
    if (blocks_x < 1 || blocks_y < 1) throw UsageError("need at least one block per axis");
    if (v00 < 0.0 || v_other < 0.0) throw DomainError("coefficient must be nonnegative");
    wx_ = (bx - ax) / blocks_x;
    wy_ = (by - ay) / blocks_y;
    sx_ = detail::SquareWave{ax_, wx_};
    sy_ = detail::SquareWave{ay_, wy_};
  }

  double value(double x, double y) const override {
    return mean() + half_diff() * sx_.value(x) * sy_.value(y);
  }

  double cell_average(double x0, double x1, double y0, double y1) const override {
    const double area = (x1 - x0) * (y1 - y0);
    return mean() + half_diff() * sx_.integral(x0, x1) * sy_.integral(y0, y1) / area;
  }

  double ess_inf() const override { return std::min(v00_, vo_); }
  double ess_sup() const override { return std::max(v00_, vo_); }

  double mean() const { return 0.5 * (v00_ + vo_); }
  double half_diff() const { return 0.5 * (v00_ - vo_); }
  double block_width_x() const { return wx_; }
  double block_width_y() const { return wy_; }
  const detail::SquareWave& wave_x() const { return sx_; }
  const detail::SquareWave& wave_y() const { return sy_; }

private:
  double ax_, ay_;
  double v00_, vo_;
  double wx_ = 0.0, wy_ = 0.0;
  detail::SquareWave sx_{}, sy_{};
};

/// Checkerboard smoothed by linear ramps of total width delta across every
/// block interface (separably in x and y). Converges pointwise a.e. to the
/// sharp board as delta -> 0 and stays within its essential bounds.
class MollifiedCheckerboard2D final : public Coefficient2D {
public:
  MollifiedCheckerboard2D(const Checkerboard2D& sharp, double delta) : sharp_(sharp), delta_(delta) {
    if (!(delta > 0.0)) throw UsageError("ramp width must be positive");
    if (delta >= std::min(sharp.block_width_x(), sharp.block_width_y()))
      throw UsageError("ramp width must be below the block width");
    mx_ = detail::MollifiedSquareWave{sharp.wave_x(), delta};
    my_ = detail::MollifiedSquareWave{sharp.wave_y(), delta};
  }

  double value(double x, double y) const override {
    return sharp_.mean() + sharp_.half_diff() * mx_.value(x) * my_.value(y);
  }

  double cell_average(double x0, double x1, double y0, double y1) const override {
    const double area = (x1 - x0) * (y1 - y0);
    return sharp_.mean() + sharp_.half_diff() * mx_.integral(x0, x1) * my_.integral(y0, y1) / area;
  }

  double ess_inf() const override { return sharp_.ess_inf(); }
  double ess_sup() const override { return sharp_.ess_sup(); }

  double delta() const { return delta_; }
  const Checkerboard2D& sharp() const { return sharp_; }

private:
  Checkerboard2D sharp_;
  double delta_;
  detail::MollifiedSquareWave mx_{}, my_{};
};

/// Radially split field: `inside` on the closed disk, `outside` elsewhere.
/// Cell averages are exact whenever the cell is fully in or out of the disk;
/// straddling cells are resolved by recursive subdivision.
class RadialStep2D final : public Coefficient2D {
public:
  RadialStep2D(double cx, double cy, double radius, double inside, double outside)
      : cx_(cx), cy_(cy), r_(radius), in_(inside), out_(outside) {
    if (!(radius > 0.0)) throw UsageError("radius must be positive");
    if (inside < 0.0 || outside < 0.0) throw DomainError("coefficient must be nonnegative");
  }

  double value(double x, double y) const override {
    const double dx = x - cx_, dy = y - cy_;
    return dx * dx + dy * dy <= r_ * r_ ? in_ : out_;
  }

  double cell_average(double x0, double x1, double y0, double y1) const override {
    return average_rec(x0, x1, y0, y1, 0);
  }

  double ess_inf() const override { return std::min(in_, out_); }
  double ess_sup() const override { return std::max(in_, out_); }

private:
  bool fully_inside(double x0, double x1, double y0, double y1) const {
    for (double x : {x0, x1})
      for (double y : {y0, y1}) {
        const double dx = x - cx_, dy = y - cy_;
        if (dx * dx + dy * dy > r_ * r_) return false;
      }
    return true;
  }

  bool fully_outside(double x0, double x1, double y0, double y1) const {
    const double dx = std::max({x0 - cx_, cx_ - x1, 0.0});
    const double dy = std::max({y0 - cy_, cy_ - y1, 0.0});
    return dx * dx + dy * dy >= r_ * r_;
  }

  double average_rec(double x0, double x1, double y0, double y1, int depth) const {
    if (fully_inside(x0, x1, y0, y1)) return in_;
    if (fully_outside(x0, x1, y0, y1)) return out_;
    if (depth >= 10) return value(0.5 * (x0 + x1), 0.5 * (y0 + y1));
    const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
    return 0.25 * (average_rec(x0, xm, y0, ym, depth + 1) + average_rec(xm, x1, y0, ym, depth + 1) +
                   average_rec(x0, xm, ym, y1, depth + 1) + average_rec(xm, x1, ym, y1, depth + 1));
  }

  double cx_, cy_, r_, in_, out_;
};

}  // namespace roughdiff::fd
