#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <ostream>
#include <vector>

#include "roughdiff/coefficient.hpp"
#include "roughdiff/errors.hpp"
#include "roughdiff/fd/coefficient2d.hpp"
#include "roughdiff/fd/grid.hpp"

namespace roughdiff::fd {

using SparseMat = Eigen::SparseMatrix<double>;

/// Discrete mirror of the mixed operator on a staggered grid.
///
/// G is the first-order difference from interior nodes to faces, so its
/// transpose realises the negative divergence as the exact adjoint and the
/// assembled block operator [[0, G^T], [G, -diag(pbar)]] is symmetric by
/// construction. Face coefficients are arithmetic cell averages of pbar; the
/// primal operator uses their reciprocals, i.e. harmonic face averages of the
/// diffusivity.
struct HatSystem {
  Grid grid;
  SparseMat G;                 // num_edges x num_nodes
  Eigen::VectorXd pbar_edge;   // face values of the coefficient

  int num_nodes() const { return static_cast<int>(G.cols()); }
  int num_edges() const { return static_cast<int>(G.rows()); }
  int total_dim() const { return num_nodes() + num_edges(); }

  SparseMat block_matrix() const {
    const int n = num_nodes();
    const int e = num_edges();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(2 * G.nonZeros() + e));
    for (int col = 0; col < G.outerSize(); ++col)
      for (SparseMat::InnerIterator it(G, col); it; ++it) {
        trip.emplace_back(n + static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
        trip.emplace_back(static_cast<int>(it.col()), n + static_cast<int>(it.row()), it.value());
      }
    for (int k = 0; k < e; ++k) trip.emplace_back(n + k, n + k, -pbar_edge[k]);
    SparseMat A(n + e, n + e);
    A.setFromTriplets(trip.begin(), trip.end());
    return A;
  }

  /// G^T diag(1/pbar_face) G. Refuses degenerate faces: a vanishing
  /// coefficient means infinite diffusivity and no primal operator.
  SparseMat primal_matrix() const {
    for (int k = 0; k < pbar_edge.size(); ++k)
      if (!(pbar_edge[k] > 0.0))
        throw DegeneracyError("coefficient vanishes on a face; primal operator undefined");
    const Eigen::VectorXd inv = pbar_edge.cwiseInverse();
    SparseMat A = G.transpose() * inv.asDiagonal() * G;
    return A;
  }

  /// Primal operator for the shifted coefficient pbar + lambda.
  SparseMat primal_matrix_shifted(double lambda) const {
    Eigen::VectorXd shifted = pbar_edge.array() + lambda;
    for (int k = 0; k < shifted.size(); ++k)
      if (!(shifted[k] > 0.0)) throw DegeneracyError("shifted coefficient not positive");
    SparseMat A = G.transpose() * shifted.cwiseInverse().asDiagonal() * G;
    return A;
  }

  void write_matrix_market(std::ostream& out) const {
    const SparseMat A = block_matrix();
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << A.rows() << ' ' << A.cols() << ' ';
    long long lower = 0;
    for (int col = 0; col < A.outerSize(); ++col)
      for (SparseMat::InnerIterator it(A, col); it; ++it)
        if (it.row() >= it.col()) ++lower;
    out << lower << '\n';
    for (int col = 0; col < A.outerSize(); ++col)
      for (SparseMat::InnerIterator it(A, col); it; ++it)
        if (it.row() >= it.col())
          out << (it.row() + 1) << ' ' << (it.col() + 1) << ' ' << it.value() << '\n';
  }
};

/// 1-D assembly from an exact piecewise coefficient; face values are the
/// exact cell averages.
inline HatSystem assemble(const Grid& grid, const CoefficientField& pbar) {
  if (grid.dim != 1) throw UsageError("1-D assembly requires a line grid");
  if (!pbar.interval().matches(Interval(grid.ax, grid.bx)))
    throw DomainError("coefficient interval does not match the grid");
  const int n = grid.nx;
  const double h = grid.h;

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    // face k spans nodes k and k+1 (0 and n are boundary)
    if (k + 1 <= n - 1) trip.emplace_back(k, k, 1.0 / h);
    if (k >= 1) trip.emplace_back(k, k - 1, -1.0 / h);
  }
  HatSystem sys;
  sys.grid = grid;
  sys.G = SparseMat(n, n - 1);
  sys.G.setFromTriplets(trip.begin(), trip.end());

  sys.pbar_edge = Eigen::VectorXd(n);
  const auto& shape = pbar.shape();
  for (int k = 0; k < n; ++k) {
    const double x0 = grid.ax + k * h;
    const double x1 = (k == n - 1) ? grid.bx : grid.ax + (k + 1) * h;
    sys.pbar_edge[k] = shape.integral(x0, x1) / (x1 - x0);
  }
  return sys;
}

/// 2-D assembly; each edge takes the mean of the exact averages of the two
/// cells it separates.
inline HatSystem assemble(const Grid& grid, const Coefficient2D& pbar) {
  if (grid.dim != 2) throw UsageError("2-D assembly requires a rectangle grid");
  const int nx = grid.nx, ny = grid.ny;
  const double h = grid.h;

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(4) * static_cast<std::size_t>(grid.num_edges()));
  for (int j = 1; j <= ny - 1; ++j)
    for (int i = 1; i <= nx; ++i) {
      const int e = grid.x_edge_index(i, j);
      if (i <= nx - 1) trip.emplace_back(e, grid.node_index(i, j), 1.0 / h);
      if (i >= 2) trip.emplace_back(e, grid.node_index(i - 1, j), -1.0 / h);
    }
  for (int j = 1; j <= ny; ++j)
    for (int i = 1; i <= nx - 1; ++i) {
      const int e = grid.y_edge_index(i, j);
      if (j <= ny - 1) trip.emplace_back(e, grid.node_index(i, j), 1.0 / h);
      if (j >= 2) trip.emplace_back(e, grid.node_index(i, j - 1), -1.0 / h);
    }

  HatSystem sys;
  sys.grid = grid;
  sys.G = SparseMat(grid.num_edges(), grid.num_nodes());
  sys.G.setFromTriplets(trip.begin(), trip.end());

  auto cell_avg = [&](int cx, int cy) {
    return pbar.cell_average(grid.ax + cx * h, grid.ax + (cx + 1) * h, grid.ay + cy * h,
                             grid.ay + (cy + 1) * h);
  };

  sys.pbar_edge = Eigen::VectorXd(grid.num_edges());
  for (int j = 1; j <= ny - 1; ++j)
    for (int i = 1; i <= nx; ++i)  // x-edge at ((i-1/2)h, jh): cells below/above
      sys.pbar_edge[grid.x_edge_index(i, j)] =
          0.5 * (cell_avg(i - 1, j - 1) + cell_avg(i - 1, j));
  for (int j = 1; j <= ny; ++j)
    for (int i = 1; i <= nx - 1; ++i)  // y-edge at (ih, (j-1/2)h): cells left/right
      sys.pbar_edge[grid.y_edge_index(i, j)] =
          0.5 * (cell_avg(i - 1, j - 1) + cell_avg(i, j - 1));
  return sys;
}

}  // namespace roughdiff::fd
