#pragma once

#include <Eigen/Dense>

#include "roughdiff/bounds.hpp"
#include "roughdiff/coefficient.hpp"
#include "roughdiff/errors.hpp"
#include "roughdiff/fd/hat_system.hpp"
#include "roughdiff/fd/linalg.hpp"

namespace roughdiff::fd {

/// Checks the block representation of the shifted inverse against a direct
/// matrix inverse and returns the operator-norm discrepancy.
///
/// The representation routes everything through the primal operator of the
/// shifted coefficient pbar + lambda:
///   u = S^{-1} f + S^{-1} G^T D g
///   q = -D g + D G S^{-1} f + D G S^{-1} G^T D g
/// with S = A_{pbar+lambda} - lambda and D = diag(1/(pbar_face + lambda)).
/// The shift must lie inside the guaranteed resolvent interval.
inline double verify_resolvent_formula(const Grid& grid, const CoefficientField& pbar,
                                       double lambda) {
  const auto J = resolvent_interval(pbar);
  if (!(lambda > J.first && lambda < J.second))
    throw PreconditionError("shift outside the resolvent interval");

  const HatSystem sys = assemble(grid, pbar);
  const int n = sys.num_nodes();
  const int e = sys.num_edges();
  const int dim = n + e;
  if (dim > kDenseLimit) throw UsageError("resolvent verification is a dense-scale check");

  Eigen::MatrixXd direct = Eigen::MatrixXd(sys.block_matrix());
  direct.diagonal().array() -= lambda;
  const Eigen::MatrixXd direct_inv = direct.partialPivLu().inverse();

  const Eigen::VectorXd d = (sys.pbar_edge.array() + lambda).inverse();
  const Eigen::MatrixXd Gd = Eigen::MatrixXd(sys.G);
  Eigen::MatrixXd S = Eigen::MatrixXd(sys.primal_matrix_shifted(lambda));
  S.diagonal().array() -= lambda;
  const Eigen::MatrixXd S_inv = S.partialPivLu().inverse();

  Eigen::MatrixXd block(dim, dim);
  const Eigen::MatrixXd DG = d.asDiagonal() * Gd;              // e x n
  const Eigen::MatrixXd U12 = S_inv * DG.transpose();          // n x e
  block.topLeftCorner(n, n) = S_inv;
  block.topRightCorner(n, e) = U12;
  block.bottomLeftCorner(e, n) = U12.transpose();
  block.bottomRightCorner(e, e) = DG * U12;
  block.bottomRightCorner(e, e).diagonal() -= d;

  return dense_max_abs_eig(block - direct_inv);
}

}  // namespace roughdiff::fd
