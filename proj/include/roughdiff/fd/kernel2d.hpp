#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "roughdiff/errors.hpp"
#include "roughdiff/fd/hat_system.hpp"
#include "roughdiff/fd/linalg.hpp"

namespace roughdiff::fd {

/// Compactly supported rotational vector field
///   q(x) = (h(|x - c|^2 / R^2) / 2) * alpha (x - c)
/// for the antisymmetric matrix alpha = [[0, a], [-a, 0]] and a smooth bump
/// profile h. Its divergence vanishes identically, so the sampled field is a
/// near-null test vector for the divergence block of any system whose
/// coefficient vanishes on the support disk.
struct RotationalField {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 1.0;
  double strength = 1.0;  // the off-diagonal entry of alpha

  double bump(double t) const {  // C-infinity, supported in [-1, 1]
    return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
  }

  double profile(double x, double y) const {
    const double dx = x - cx, dy = y - cy;
    return 0.5 * bump((dx * dx + dy * dy) / (radius * radius));
  }

  double qx(double x, double y) const { return profile(x, y) * strength * (y - cy); }
  double qy(double x, double y) const { return -profile(x, y) * strength * (x - cx); }

  Eigen::VectorXd sample_on_edges(const Grid& grid) const {
    Eigen::VectorXd q(grid.num_edges());
    for (int j = 1; j <= grid.ny - 1; ++j)
      for (int i = 1; i <= grid.nx; ++i)
        q[grid.x_edge_index(i, j)] = qx(grid.x_edge_mid_x(i), grid.node_y(j));
    for (int j = 1; j <= grid.ny; ++j)
      for (int i = 1; i <= grid.nx - 1; ++i)
        q[grid.y_edge_index(i, j)] = qy(grid.node_x(i), grid.y_edge_mid_y(j));
    return q;
  }
};

struct KernelExperimentResult {
  double divergence_residual;   // sup-norm of the discrete divergence of the sampled field
  double min_singular_value;    // smallest singular value of the block system
};

/// Samples the rotational field on the staggered edges, measures how far it
/// is from the discrete divergence kernel, and probes the block system's
/// smallest singular value. Near-zero values occur exactly when the
/// coefficient vanishes on the field's support.
inline KernelExperimentResult kernel_experiment(const Grid& grid, const Coefficient2D& pbar,
                                                const RotationalField& field,
                                                unsigned long long seed = 0) {
  if (grid.dim != 2) throw UsageError("kernel experiment requires a 2-D grid");
  if (field.cx - field.radius < grid.ax || field.cx + field.radius > grid.bx ||
      field.cy - field.radius < grid.ay || field.cy + field.radius > grid.by)
    throw DomainError("field support is not contained in the grid domain");

  const HatSystem sys = assemble(grid, pbar);
  const Eigen::VectorXd q = field.sample_on_edges(grid);
  const double div_residual = (sys.G.transpose() * q).cwiseAbs().maxCoeff();
  const double sigma_min = smallest_singular_value(sys, seed);
  return KernelExperimentResult{div_residual, sigma_min};
}

/// Divergence residual alone (no linear algebra); used for refinement
/// studies.
inline double divergence_residual(const Grid& grid, const RotationalField& field) {
  if (grid.dim != 2) throw UsageError("kernel experiment requires a 2-D grid");
  const HatSystem sys = assemble(grid, Constant2D(1.0));
  const Eigen::VectorXd q = field.sample_on_edges(grid);
  return (sys.G.transpose() * q).cwiseAbs().maxCoeff();
}

}  // namespace roughdiff::fd
