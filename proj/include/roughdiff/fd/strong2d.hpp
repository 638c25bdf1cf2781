#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <vector>

#include "roughdiff/errors.hpp"
#include "roughdiff/fd/coefficient2d.hpp"
#include "roughdiff/fd/hat_system.hpp"
#include "roughdiff/limits.hpp"

namespace roughdiff::fd {

/// L1 distance between a mollified checkerboard and its sharp target.
///
/// The mismatch factors as c (mx(x) my(y) - sx(x) sy(y)) with |s| = 1, so on
/// strips where only one axis sits inside a ramp the integrand collapses to
/// the 1-D ramp defect, integrable in closed form. The corner squares where
/// both axes ramp carry O(delta^2) mass and are integrated numerically.
inline double l1_distance_to_sharp(const MollifiedCheckerboard2D& mollified, const Grid& grid) {
  const Checkerboard2D& sharp = mollified.sharp();
  const double c = std::abs(sharp.half_diff());
  if (c == 0.0) return 0.0;
  const double delta = mollified.delta();
  const double Lx = grid.bx - grid.ax;
  const double Ly = grid.by - grid.ay;

  std::vector<double> x_ifaces, y_ifaces;
  for (double b = grid.ax + sharp.block_width_x(); b < grid.bx - 1e-12 * Lx;
       b += sharp.block_width_x())
    x_ifaces.push_back(b);
  for (double b = grid.ay + sharp.block_width_y(); b < grid.by - 1e-12 * Ly;
       b += sharp.block_width_y())
    y_ifaces.push_back(b);

  // per interface line, the 1-D ramp defect integrates to delta/2
  const double x_strip = static_cast<double>(x_ifaces.size()) * (delta / 2.0) *
                         (Ly - static_cast<double>(y_ifaces.size()) * delta);
  const double y_strip = static_cast<double>(y_ifaces.size()) * (delta / 2.0) *
                         (Lx - static_cast<double>(x_ifaces.size()) * delta);

  // corner squares: numeric on a fine tensor midpoint rule
  double corners = 0.0;
  const int k = 24;
  for (double xb : x_ifaces)
    for (double yb : y_ifaces) {
      double s = 0.0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const double x = xb - 0.5 * delta + (i + 0.5) * delta / k;
          const double y = yb - 0.5 * delta + (j + 0.5) * delta / k;
          s += std::abs(mollified.value(x, y) - sharp.value(x, y));
        }
      corners += s * (delta / k) * (delta / k);
    }

  return c * (x_strip + y_strip) + corners;
}

/// Discrete L2 norm of a nodal vector: h^{dim/2} times the euclidean norm.
inline double grid_l2_norm(const Grid& grid, const Eigen::VectorXd& v) {
  return std::pow(grid.h, 0.5 * grid.dim) * v.norm();
}

/// Solves the primal system for each member of a coefficient sequence on one
/// fixed grid and reports distances to the limit member's solution and scaled
/// gradient. Every member must be bounded away from zero; the bound-ratio
/// column reports the relative solution error (no operator-norm statement is
/// available in the plane).
inline roughdiff::ConvergenceTable strong_convergence_study(
    const Grid& grid, const std::vector<const Coefficient2D*>& members,
    const Coefficient2D& pbar_inf, const std::function<double(double, double)>& f) {
  if (grid.dim != 2) throw UsageError("strong convergence study requires a 2-D grid");
  if (members.empty()) throw UsageError("empty coefficient sequence");
  for (const Coefficient2D* member : members)
    if (!(member->ess_inf() > 0.0))
      throw PreconditionError("sequence member is not bounded away from zero");
  if (!(pbar_inf.ess_inf() > 0.0))
    throw PreconditionError("limit coefficient is not bounded away from zero");

  Eigen::VectorXd rhs(grid.num_nodes());
  for (int j = 1; j <= grid.ny - 1; ++j)
    for (int i = 1; i <= grid.nx - 1; ++i)
      rhs[grid.node_index(i, j)] = f(grid.node_x(i), grid.node_y(j));

  auto solve = [&](const Coefficient2D& coef) {
    const HatSystem sys = assemble(grid, coef);
    Eigen::SimplicialLDLT<SparseMat> ldlt(sys.primal_matrix());
    if (ldlt.info() != Eigen::Success) throw NumericalError("primal factorisation failed");
    const Eigen::VectorXd u = ldlt.solve(rhs);
    const Eigen::VectorXd scaled_grad =
        sys.pbar_edge.cwiseInverse().asDiagonal() * (sys.G * u);
    return std::make_pair(u, scaled_grad);
  };

  const auto [u_inf, s_inf] = solve(pbar_inf);
  const double u_inf_norm = grid_l2_norm(grid, u_inf);

  roughdiff::ConvergenceTable table;
  int nu = 1;
  for (const Coefficient2D* member : members) {
    const auto [u, s] = solve(*member);
    const double u_err = grid_l2_norm(grid, u - u_inf);
    const double s_err = grid_l2_norm(grid, s - s_inf);
    double dist = 0.0;
    if (const auto* moll = dynamic_cast<const MollifiedCheckerboard2D*>(member))
      dist = l1_distance_to_sharp(*moll, grid);
    table.rows.push_back(roughdiff::ConvergenceRow{
        nu++, dist, u_err, s_err, u_inf_norm > 0.0 ? u_err / u_inf_norm : 0.0});
  }
  return table;
}

}  // namespace roughdiff::fd
