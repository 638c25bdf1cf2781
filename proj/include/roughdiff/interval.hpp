#pragma once

#include <cmath>

#include "roughdiff/errors.hpp"

namespace roughdiff {

/// Bounded open interval (a, b).
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
      throw DomainError("interval endpoints must be finite with a < b");
  }

  double length() const { return b - a; }

  bool contains(double x) const { return x >= a && x <= b; }

  /// Two intervals are treated as the same domain when the endpoints agree
  /// up to the breakpoint-fusing tolerance.
  bool matches(const Interval& other) const {
    const double tol = 1e-14 * (length() + other.length());
    return std::abs(a - other.a) <= tol && std::abs(b - other.b) <= tol;
  }
};

}  // namespace roughdiff
