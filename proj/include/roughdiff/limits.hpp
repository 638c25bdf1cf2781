#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roughdiff/bounds.hpp"
#include "roughdiff/coefficient.hpp"
#include "roughdiff/exact1d.hpp"

namespace roughdiff {

/// Asymptotic solution operator: the density component of the mixed inverse
/// at the limit coefficient (which may vanish on subregions). For admissible
/// coefficients it coincides with the mixed solve itself.
inline PiecewiseFunction limit_solution(const CoefficientField& pbar_inf,
                                        const PiecewiseFunction& f) {
  return solve_mixed(pbar_inf, f).u;
}

/// Asymptotic flux operator: the auxiliary component of the same solve.
inline PiecewiseFunction limit_flux(const CoefficientField& pbar_inf,
                                    const PiecewiseFunction& f) {
  return solve_mixed(pbar_inf, f).q;
}

struct ConvergenceRow {
  int nu;
  double coefficient_distance;  // ||pbar_nu - pbar_inf||_1
  double u_error;               // ||u_nu - B f||_2
  double q_error;               // ||q_nu - C f||_2
  double bound_ratio;           // product-space error over the Lipschitz bound
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;

  static constexpr const char* kCsvHeader = "nu,coefficient_distance,u_error,q_error,bound_ratio";

  /// Returns the first violated table invariant, if any: the coefficient
  /// distances must decrease strictly and no ratio may exceed one.
  std::optional<std::string> violated_invariant(bool expect_strict_decrease = true) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].bound_ratio > 1.0 + 1e-12)
        return "bound_ratio exceeds 1 at row " + std::to_string(k + 1);
      if (expect_strict_decrease && k > 0 &&
          !(rows[k].coefficient_distance < rows[k - 1].coefficient_distance))
        return "coefficient_distance not strictly decreasing at row " + std::to_string(k + 1);
    }
    return std::nullopt;
  }
};

/// Convergence study of exact solves along a coefficient sequence against the
/// limit operators at pbar_inf, for one fixed right-hand side.
inline ConvergenceTable convergence_study(std::span<const CoefficientField> members,
                                          const CoefficientField& pbar_inf,
                                          const PiecewiseFunction& f) {
  if (members.empty()) throw UsageError("empty coefficient sequence");
  const double f_norm = f.norm_l2();
  if (!(f_norm > 0.0)) throw UsageError("zero right-hand side");
  const MixedSolution limit = solve_mixed(pbar_inf, f);

  ConvergenceTable table;
  table.rows.reserve(members.size());
  int nu = 1;
  for (const CoefficientField& member : members) {
    const MixedSolution sol = solve_mixed(member, f);
    const PiecewiseFunction du = sol.u - limit.u;
    const PiecewiseFunction dq = sol.q - limit.q;
    const double dist = (member.shape() - pbar_inf.shape()).norm_l1();
    const double pair_error = product_norm(du, dq) / f_norm;
    const double bound = dist > 0.0 ? lipschitz_rhs(member, pbar_inf) : 0.0;
    table.rows.push_back(ConvergenceRow{nu++, dist, du.norm_l2(), dq.norm_l2(),
                                        bound > 0.0 ? pair_error / bound : 0.0});
  }
  return table;
}

}  // namespace roughdiff
