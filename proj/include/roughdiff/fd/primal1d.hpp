#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "roughdiff/errors.hpp"
#include "roughdiff/fd/hat_system.hpp"
#include "roughdiff/piecewise.hpp"

namespace roughdiff::fd {

/// Nodal solution of the 1-D primal system G^T diag(1/pbar_face) G u = f for
/// a source sampled at the interior nodes.
inline Eigen::VectorXd solve_primal_fd(const HatSystem& sys, const PiecewiseFunction& f) {
  if (sys.grid.dim != 1) throw UsageError("1-D primal solve requires a line grid");
  Eigen::VectorXd rhs(sys.num_nodes());
  for (int i = 1; i <= sys.grid.nx - 1; ++i) rhs[i - 1] = f(sys.grid.node_x(i));
  Eigen::SimplicialLDLT<SparseMat> ldlt(sys.primal_matrix());
  if (ldlt.info() != Eigen::Success) throw NumericalError("primal factorisation failed");
  return ldlt.solve(rhs);
}

/// Discrete L2 error between a nodal vector and an exact function sampled at
/// the same nodes.
inline double nodal_l2_error(const HatSystem& sys, const Eigen::VectorXd& u,
                             const PiecewiseFunction& exact) {
  double s = 0.0;
  for (int i = 1; i <= sys.grid.nx - 1; ++i) {
    const double d = u[i - 1] - exact(sys.grid.node_x(i));
    s += d * d;
  }
  return std::sqrt(sys.grid.h * s);
}

}  // namespace roughdiff::fd
