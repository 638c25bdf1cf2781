#pragma once

#include <cmath>

#include "roughdiff/errors.hpp"
#include "roughdiff/interval.hpp"

namespace roughdiff::fd {

/// Uniform staggered grid on an interval or an axis-aligned rectangle.
///
/// Unknowns of the density live at interior nodes (homogeneous Dirichlet);
/// the auxiliary/flux unknowns live on the cell faces crossed by each
/// difference: the n cells in 1-D, the x- and y-edges in 2-D.
struct Grid {
  int dim;
  int nx;
  int ny;  // 1 in 1-D
  double ax, bx;
  double ay, by;  // unused in 1-D
  double h;

  static Grid line(const Interval& iv, int n) {
    if (n < 2) throw UsageError("need at least two cells per axis");
    Grid g;
    g.dim = 1;
    g.nx = n;
    g.ny = 1;
    g.ax = iv.a;
    g.bx = iv.b;
    g.ay = 0.0;
    g.by = 0.0;
    g.h = iv.length() / n;
    return g;
  }

  static Grid rectangle(const Interval& x_iv, const Interval& y_iv, int nx, int ny) {
    if (nx < 2 || ny < 2) throw UsageError("need at least two cells per axis");
    const double hx = x_iv.length() / nx;
    const double hy = y_iv.length() / ny;
    if (std::abs(hx - hy) > 1e-12 * hx)
      throw UsageError("grid must have equal spacing on both axes");
    Grid g;
    g.dim = 2;
    g.nx = nx;
    g.ny = ny;
    g.ax = x_iv.a;
    g.bx = x_iv.b;
    g.ay = y_iv.a;
    g.by = y_iv.b;
    g.h = hx;
    return g;
  }

  static Grid square(const Interval& iv, int n) { return rectangle(iv, iv, n, n); }

  int num_nodes() const { return dim == 1 ? nx - 1 : (nx - 1) * (ny - 1); }
  int num_x_edges() const { return dim == 1 ? nx : nx * (ny - 1); }
  int num_y_edges() const { return dim == 1 ? 0 : (nx - 1) * ny; }
  int num_edges() const { return num_x_edges() + num_y_edges(); }
  int total_dim() const { return num_nodes() + num_edges(); }

  // interior node (i, j), 1-based per axis
  int node_index(int i, int j = 1) const { return (i - 1) + (nx - 1) * (j - 1); }
  double node_x(int i) const { return ax + i * h; }
  double node_y(int j) const { return ay + j * h; }

  // x-edge between nodes (i-1, j) and (i, j): i = 1..nx, j = 1..ny-1
  int x_edge_index(int i, int j = 1) const { return (i - 1) + nx * (j - 1); }
  double x_edge_mid_x(int i) const { return ax + (i - 0.5) * h; }

  // y-edge between nodes (i, j-1) and (i, j): i = 1..nx-1, j = 1..ny
  int y_edge_index(int i, int j) const { return num_x_edges() + (i - 1) + (nx - 1) * (j - 1); }
  double y_edge_mid_y(int j) const { return ay + (j - 0.5) * h; }
};

}  // namespace roughdiff::fd
