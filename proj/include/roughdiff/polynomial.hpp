#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "roughdiff/errors.hpp"

namespace roughdiff {

/// Dense real polynomial in one local variable t, stored as monomial
/// coefficients c[0] + c[1] t + ... . Used as the per-cell representation of
/// piecewise functions, with t measured from the left end of the cell.
class Polynomial {
public:
  Polynomial() : c_{0.0} {}

  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0.0);
    for (double v : c_)
      if (!std::isfinite(v)) throw DomainError("non-finite polynomial coefficient");
    trim();
  }

  static Polynomial constant(double v) { return Polynomial({v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const { return c_; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
  bool is_constant() const { return c_.size() == 1; }

  double operator()(double t) const {
    double y = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) y = y * t + *it;
    return y;
  }

  Polynomial derivative() const {
    if (c_.size() == 1) return Polynomial();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
  }

  /// Antiderivative with value 0 at t = 0.
  Polynomial antiderivative() const {
    std::vector<double> a(c_.size() + 1, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
  }

  /// Exact integral over [0, w].
  double integral_to(double w) const {
    double y = 0.0;
    for (auto k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
      y = y * w + c_[static_cast<std::size_t>(k)] / static_cast<double>(k + 1);
    return y * w;
  }

  /// Re-expands around a new origin: result q satisfies q(s) = p(delta + s).
  Polynomial shifted_origin(double delta) const {
    if (delta == 0.0) return *this;
    const int n = degree();
    std::vector<double> out(c_.size(), 0.0);
    // Horner-style Taylor shift: repeatedly multiply by (delta + s).
    for (int k = n; k >= 0; --k) {
      for (int j = n - k; j >= 1; --j) out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j)] * delta + out[static_cast<std::size_t>(j - 1)];
      out[0] = out[0] * delta + c_[static_cast<std::size_t>(k)];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(double s) {
    for (double& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  /// Real roots in [lo, hi], ascending, derived by recursive subdivision at
  /// critical points followed by bisection on each monotonic span.
  std::vector<double> real_roots(double lo, double hi) const {
    std::vector<double> roots;
    if (is_zero() || is_constant()) return roots;
    if (degree() == 1) {
      const double r = -c_[0] / c_[1];
      if (r >= lo && r <= hi) roots.push_back(r);
      return roots;
    }
    std::vector<double> nodes = derivative().real_roots(lo, hi);
    nodes.insert(nodes.begin(), lo);
    nodes.push_back(hi);
    double prev = nodes.front();
    double fprev = (*this)(prev);
    if (fprev == 0.0) roots.push_back(prev);
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      const double cur = nodes[k];
      if (cur <= prev) continue;
      const double fcur = (*this)(cur);
      if (fcur == 0.0) {
        roots.push_back(cur);
      } else if (fprev * fcur < 0.0) {
        roots.push_back(bisect(prev, cur, fprev));
      }
      prev = cur;
      fprev = fcur;
    }
    dedupe(roots, 1e-14 * (std::abs(lo) + std::abs(hi) + 1.0));
    return roots;
  }

  /// min / max of the polynomial over [lo, hi].
  std::pair<double, double> range(double lo, double hi) const {
    double mn = (*this)(lo), mx = mn;
    const double at_hi = (*this)(hi);
    mn = std::min(mn, at_hi);
    mx = std::max(mx, at_hi);
    for (double r : derivative().real_roots(lo, hi)) {
      const double v = (*this)(r);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    return {mn, mx};
  }

  double max_abs(double lo, double hi) const {
    auto [mn, mx] = range(lo, hi);
    return std::max(std::abs(mn), std::abs(mx));
  }

private:
  void trim() {
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  }

  double bisect(double lo, double hi, double flo) const {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double fmid = (*this)(mid);
      if (fmid == 0.0) return mid;
      if ((flo < 0.0) == (fmid < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  static void dedupe(std::vector<double>& xs, double tol) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [tol](double a, double b) { return std::abs(a - b) <= tol; }),
             xs.end());
  }

  std::vector<double> c_;
};

}  // namespace roughdiff
