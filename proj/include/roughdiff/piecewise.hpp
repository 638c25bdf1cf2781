#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "roughdiff/errors.hpp"
#include "roughdiff/interval.hpp"
#include "roughdiff/polynomial.hpp"

namespace roughdiff {

/// Exact piecewise-polynomial function on an interval partition.
///
/// Breakpoints x0 = a < x1 < ... < xm = b carry one polynomial per cell,
/// expressed in the local variable t = x - xj. Values at breakpoints follow
/// the right-continuous convention (left-continuous at b). All arithmetic on
/// these objects is exact polynomial algebra; there is no quadrature anywhere.
class PiecewiseFunction {
public:
  /// Per-cell polynomial degree cap. The mixed-solve construction raises the
  /// degree of its inputs by at most two, so 6 covers cubic data over
  /// piecewise-linear coefficients.
  static constexpr int kMaxDegree = 6;

  PiecewiseFunction(std::vector<double> breakpoints, std::vector<Polynomial> pieces)
      : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
      throw DomainError("piecewise function needs m+1 breakpoints and m pieces");
    for (double x : breaks_)
      if (!std::isfinite(x)) throw DomainError("non-finite breakpoint");
    for (std::size_t j = 0; j + 1 < breaks_.size(); ++j)
      if (!(breaks_[j] < breaks_[j + 1]))
        throw DomainError("breakpoints must be strictly increasing");
    for (const Polynomial& p : pieces_)
      if (p.degree() > kMaxDegree)
        throw RepresentationError("piece degree exceeds the representation cap");
  }

  static PiecewiseFunction constant(const Interval& iv, double v) {
    return PiecewiseFunction({iv.a, iv.b}, {Polynomial::constant(v)});
  }

  static PiecewiseFunction zero(const Interval& iv) { return constant(iv, 0.0); }

  /// Builds from polynomials given in the global variable x; each is
  /// re-expanded around the left end of its cell.
  static PiecewiseFunction from_global(std::vector<double> breakpoints,
                                       const std::vector<Polynomial>& global_pieces) {
    std::vector<Polynomial> local;
    local.reserve(global_pieces.size());
    for (std::size_t j = 0; j < global_pieces.size(); ++j)
      local.push_back(global_pieces[j].shifted_origin(breakpoints[j]));
    return PiecewiseFunction(std::move(breakpoints), std::move(local));
  }

  Interval interval() const { return Interval(breaks_.front(), breaks_.back()); }
  const std::vector<double>& breakpoints() const { return breaks_; }
  std::size_t num_cells() const { return pieces_.size(); }
  const Polynomial& piece(std::size_t j) const { return pieces_[j]; }
  double cell_left(std::size_t j) const { return breaks_[j]; }
  double cell_width(std::size_t j) const { return breaks_[j + 1] - breaks_[j]; }

  int max_degree() const {
    int d = 0;
    for (const Polynomial& p : pieces_) d = std::max(d, p.degree());
    return d;
  }

  bool is_piecewise_constant() const {
    for (const Polynomial& p : pieces_)
      if (!p.is_constant()) return false;
    return true;
  }

  double operator()(double x) const {
    if (x < breaks_.front() || x > breaks_.back())
      throw DomainError("evaluation point outside the interval");
    const std::size_t j = locate(x);
    return pieces_[j](x - breaks_[j]);
  }

  /// Continuous antiderivative H with H(a) = 0 and H' = *this on every open
  /// cell; exact.
  PiecewiseFunction antiderivative() const {
    std::vector<Polynomial> out;
    out.reserve(pieces_.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      Polynomial pj = pieces_[j].antiderivative();
      if (pj.degree() > kMaxDegree)
        throw RepresentationError("antiderivative exceeds the degree cap");
      pj += Polynomial::constant(acc);
      acc = pj(cell_width(j));
      out.push_back(std::move(pj));
    }
    return PiecewiseFunction(breaks_, std::move(out));
  }

  /// Cellwise derivative (discards breakpoint kinks, as for weak derivatives
  /// of continuous piecewise polynomials).
  PiecewiseFunction derivative() const {
    std::vector<Polynomial> out;
    out.reserve(pieces_.size());
    for (const Polynomial& p : pieces_) out.push_back(p.derivative());
    return PiecewiseFunction(breaks_, std::move(out));
  }

  /// Exact integral over the whole interval.
  double integral() const {
    double s = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) s += pieces_[j].integral_to(cell_width(j));
    return s;
  }

  /// Exact integral over [alpha, beta] within the interval.
  double integral(double alpha, double beta) const {
    if (alpha > beta) throw DomainError("integral bounds out of order");
    if (alpha < breaks_.front() - fuse_tol() || beta > breaks_.back() + fuse_tol())
      throw DomainError("integration range outside the interval");
    alpha = std::clamp(alpha, breaks_.front(), breaks_.back());
    beta = std::clamp(beta, breaks_.front(), breaks_.back());
    double s = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      const double lo = std::max(alpha, breaks_[j]);
      const double hi = std::min(beta, breaks_[j + 1]);
      if (hi <= lo) continue;
      s += pieces_[j].integral_to(hi - breaks_[j]) - pieces_[j].integral_to(lo - breaks_[j]);
    }
    return s;
  }

  double norm_l1() const {
    double s = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      const Polynomial& p = pieces_[j];
      const double w = cell_width(j);
      if (p.is_zero()) continue;
      // split the cell at sign changes so each segment integrates |p| exactly
      std::vector<double> cuts = p.real_roots(0.0, w);
      double prev = 0.0;
      for (double cut : cuts) {
        s += std::abs(p.integral_to(cut) - p.integral_to(prev));
        prev = cut;
      }
      s += std::abs(p.integral_to(w) - p.integral_to(prev));
    }
    return s;
  }

  double norm_l2() const {
    double s = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j)
      s += (pieces_[j] * pieces_[j]).integral_to(cell_width(j));
    return std::sqrt(std::max(0.0, s));
  }

  double norm_linf() const {
    double m = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j)
      m = std::max(m, pieces_[j].max_abs(0.0, cell_width(j)));
    return m;
  }

  std::pair<double, double> range() const {
    double mn = 0.0, mx = 0.0;
    bool first = true;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      auto [lo, hi] = pieces_[j].range(0.0, cell_width(j));
      mn = first ? lo : std::min(mn, lo);
      mx = first ? hi : std::max(mx, hi);
      first = false;
    }
    return {mn, mx};
  }

  /// Re-expresses the function on a refinement of its partition. The new
  /// breakpoints must contain the interval endpoints.
  PiecewiseFunction refined(const std::vector<double>& new_breaks) const {
    std::vector<Polynomial> out;
    out.reserve(new_breaks.size() - 1);
    for (std::size_t k = 0; k + 1 < new_breaks.size(); ++k) {
      const double mid = 0.5 * (new_breaks[k] + new_breaks[k + 1]);
      const std::size_t j = locate(std::clamp(mid, breaks_.front(), breaks_.back()));
      out.push_back(pieces_[j].shifted_origin(new_breaks[k] - breaks_[j]));
    }
    return PiecewiseFunction(new_breaks, std::move(out));
  }

  double fuse_tol() const { return 1e-14 * (breaks_.back() - breaks_.front()); }

private:
  std::size_t locate(double x) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    if (j == 0) return 0;
    --j;
    if (j >= pieces_.size()) j = pieces_.size() - 1;  // x == b: left-hand cell
    return j;
  }

  std::vector<double> breaks_;
  std::vector<Polynomial> pieces_;
};

/// Merged breakpoint set of two functions on the same interval; coincident
/// points within the fuse tolerance collapse to one.
inline std::vector<double> merged_breakpoints(const PiecewiseFunction& f,
                                              const PiecewiseFunction& g) {
  if (!f.interval().matches(g.interval()))
    throw DomainError("functions live on different intervals");
  std::vector<double> all = f.breakpoints();
  all.insert(all.end(), g.breakpoints().begin() + 1, g.breakpoints().end() - 1);
  std::sort(all.begin(), all.end());
  const double tol = f.fuse_tol() + g.fuse_tol();
  std::vector<double> out;
  out.reserve(all.size());
  for (double x : all)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  out.back() = f.breakpoints().back();
  return out;
}

inline PiecewiseFunction linear_combine(double alpha, const PiecewiseFunction& f, double beta,
                                        const PiecewiseFunction& g) {
  const std::vector<double> breaks = merged_breakpoints(f, g);
  PiecewiseFunction fr = f.refined(breaks);
  PiecewiseFunction gr = g.refined(breaks);
  std::vector<Polynomial> out;
  out.reserve(fr.num_cells());
  for (std::size_t j = 0; j < fr.num_cells(); ++j)
    out.push_back(fr.piece(j) * alpha + gr.piece(j) * beta);
  return PiecewiseFunction(breaks, std::move(out));
}

inline PiecewiseFunction multiply(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  const std::vector<double> breaks = merged_breakpoints(f, g);
  PiecewiseFunction fr = f.refined(breaks);
  PiecewiseFunction gr = g.refined(breaks);
  std::vector<Polynomial> out;
  out.reserve(fr.num_cells());
  for (std::size_t j = 0; j < fr.num_cells(); ++j) {
    Polynomial p = fr.piece(j) * gr.piece(j);
    if (p.degree() > PiecewiseFunction::kMaxDegree)
      throw RepresentationError("product exceeds the degree cap");
    out.push_back(std::move(p));
  }
  return PiecewiseFunction(breaks, std::move(out));
}

inline PiecewiseFunction operator+(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  return linear_combine(1.0, f, 1.0, g);
}

inline PiecewiseFunction operator-(const PiecewiseFunction& f, const PiecewiseFunction& g) {
  return linear_combine(1.0, f, -1.0, g);
}

inline PiecewiseFunction operator*(double s, const PiecewiseFunction& f) {
  std::vector<Polynomial> out;
  out.reserve(f.num_cells());
  for (std::size_t j = 0; j < f.num_cells(); ++j) out.push_back(f.piece(j) * s);
  return PiecewiseFunction(f.breakpoints(), std::move(out));
}

inline PiecewiseFunction operator+(const PiecewiseFunction& f, double c) {
  std::vector<Polynomial> out;
  out.reserve(f.num_cells());
  for (std::size_t j = 0; j < f.num_cells(); ++j)
    out.push_back(f.piece(j) + Polynomial::constant(c));
  return PiecewiseFunction(f.breakpoints(), std::move(out));
}

}  // namespace roughdiff
