#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <random>

#include "roughdiff/errors.hpp"
#include "roughdiff/fd/hat_system.hpp"

namespace roughdiff::fd {

/// Dense solvers are used up to this total dimension; larger systems switch
/// to factorised iteration.
inline constexpr int kDenseLimit = 3000;
inline constexpr double kIterTol = 1e-6;
inline constexpr int kMaxIterations = 10000;

namespace detail {

inline Eigen::VectorXd random_unit(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gauss(rng);
  v.normalize();
  return v;
}

/// Power iteration for the dominant |eigenvalue| of a symmetric operator
/// given as an apply callback.
template <class Apply>
double dominant_abs_eig(int n, const Apply& apply, double tol, unsigned long long seed) {
  Eigen::VectorXd x = random_unit(n, seed);
  double prev = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    Eigen::VectorXd y = apply(x);
    if (!y.allFinite()) throw NumericalError("operator application produced non-finite values");
    const double rho = std::abs(x.dot(y));
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
    if (it > 0 && std::abs(rho - prev) <= tol * std::max(1e-300, std::abs(rho))) return rho;
    prev = rho;
  }
  throw NumericalError("power iteration failed to converge");
}

}  // namespace detail

inline double dense_max_abs_eig(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("dense eigensolve failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

inline double dense_min_abs_eig(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("dense eigensolve failed");
  return es.eigenvalues().cwiseAbs().minCoeff();
}

/// Smallest eigenvalue of a symmetric positive definite matrix by inverse
/// power iteration on a Cholesky-type factorisation.
inline double min_eigenvalue(const SparseMat& spd, double rel_tol = 1e-8,
                             int max_iterations = kMaxIterations,
                             unsigned long long seed = 0) {
  Eigen::SimplicialLDLT<SparseMat> ldlt(spd);
  if (ldlt.info() != Eigen::Success) throw NumericalError("factorisation failed; matrix not SPD");
  if ((ldlt.vectorD().array() <= 0.0).any())
    throw NumericalError("matrix is not positive definite");

  Eigen::VectorXd x = detail::random_unit(static_cast<int>(spd.rows()), seed);
  double prev = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd y = ldlt.solve(x);
    x = y / y.norm();
    const double rho = x.dot(spd * x);
    if (it > 0 && std::abs(rho - prev) <= rel_tol * std::abs(rho)) return rho;
    prev = rho;
  }
  throw NumericalError("inverse power iteration hit the iteration limit");
}

inline double min_eigenvalue(const HatSystem& sys, double rel_tol = 1e-8,
                             unsigned long long seed = 0) {
  return min_eigenvalue(sys.primal_matrix(), rel_tol, kMaxIterations, seed);
}

/// Norm of the inverse of the block operator: 1 / min |eig|.
inline double operator_norm_inverse(const HatSystem& sys, unsigned long long seed = 0) {
  if (sys.total_dim() <= kDenseLimit) {
    const double m = dense_min_abs_eig(Eigen::MatrixXd(sys.block_matrix()));
    if (!(m > 0.0)) throw NumericalError("singular block system (smallest singular value 0)");
    return 1.0 / m;
  }
  Eigen::SparseLU<SparseMat> lu(sys.block_matrix());
  if (lu.info() != Eigen::Success) throw NumericalError("singular block system");
  return detail::dominant_abs_eig(
      sys.total_dim(), [&](const Eigen::VectorXd& x) { return lu.solve(x).eval(); }, kIterTol,
      seed);
}

/// Norm of the difference of two block inverses.
inline double operator_norm_inverse_difference(const HatSystem& a, const HatSystem& b,
                                               unsigned long long seed = 0) {
  if (a.total_dim() != b.total_dim())
    throw UsageError("systems have different dimensions");
  if (a.total_dim() <= kDenseLimit) {
    const Eigen::MatrixXd ia = Eigen::MatrixXd(a.block_matrix()).partialPivLu().inverse();
    const Eigen::MatrixXd ib = Eigen::MatrixXd(b.block_matrix()).partialPivLu().inverse();
    return dense_max_abs_eig(ia - ib);
  }
  Eigen::SparseLU<SparseMat> lua(a.block_matrix());
  Eigen::SparseLU<SparseMat> lub(b.block_matrix());
  if (lua.info() != Eigen::Success || lub.info() != Eigen::Success)
    throw NumericalError("singular block system");
  return detail::dominant_abs_eig(
      a.total_dim(),
      [&](const Eigen::VectorXd& x) { return (lua.solve(x) - lub.solve(x)).eval(); }, kIterTol,
      seed);
}

/// Smallest singular value of the block operator; 0 for a numerically
/// singular system.
inline double smallest_singular_value(const HatSystem& sys, unsigned long long seed = 0) {
  if (sys.total_dim() <= kDenseLimit)
    return dense_min_abs_eig(Eigen::MatrixXd(sys.block_matrix()));
  Eigen::SparseLU<SparseMat> lu(sys.block_matrix());
  if (lu.info() != Eigen::Success) return 0.0;
  try {
    const double inv_norm = detail::dominant_abs_eig(
        sys.total_dim(), [&](const Eigen::VectorXd& x) { return lu.solve(x).eval(); }, kIterTol,
        seed);
    if (!std::isfinite(inv_norm) || inv_norm == 0.0) return 0.0;
    return 1.0 / inv_norm;
  } catch (const NumericalError&) {
    return 0.0;
  }
}

/// Exact adjointness defect <Gu, q> - <u, G^T q> for given test vectors.
inline double adjointness_defect(const HatSystem& sys, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& q) {
  const double lhs = (sys.G * u).dot(q);
  const double rhs = u.dot(sys.G.transpose() * q);
  return lhs - rhs;
}

}  // namespace roughdiff::fd
