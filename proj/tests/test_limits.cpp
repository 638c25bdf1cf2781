#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "roughdiff/limits.hpp"
#include "test_support.hpp"

using namespace roughdiff;
using Catch::Approx;

TEST_CASE("limit solution operator") {
  ContrastFamily fam(Interval(-1, 1), -0.5, 0.5);
  auto pinf = fam.asymptotic_member();
  auto f = PiecewiseFunction::constant(Interval(-1, 1), 1.0);

  auto Bf = limit_solution(pinf, f);
  CHECK(Bf(0.0) == Approx(0.375).epsilon(1e-12));
  // constant across the degenerate middle region
  CHECK(Bf(0.3) == Approx(Bf(-0.3)).margin(1e-14));
  CHECK(Bf(0.49) == Approx(0.375).margin(1e-13));
  CHECK(Bf(-1.0) == Approx(0.0).margin(1e-14));
  CHECK(Bf(1.0) == Approx(0.0).margin(1e-14));

  CHECK(limit_solution(pinf, PiecewiseFunction::zero(Interval(-1, 1))).norm_linf() < 1e-15);

  auto one = CoefficientField::constant(Interval(0, 1), 1.0);
  auto f01 = PiecewiseFunction::constant(Interval(0, 1), 1.0);
  auto B1 = limit_solution(one, f01);
  CHECK(B1(0.5) == Approx(0.125));
}

TEST_CASE("limit flux operator") {
  auto one = CoefficientField::constant(Interval(0, 1), 1.0);
  auto f01 = PiecewiseFunction::constant(Interval(0, 1), 1.0);
  auto C1 = limit_flux(one, f01);
  CHECK(C1(0.0) == Approx(0.5));
  CHECK(C1(1.0) == Approx(-0.5));

  ContrastFamily fam(Interval(-1, 1), -0.5, 0.5);
  auto pinf = fam.asymptotic_member();
  auto f = PiecewiseFunction::constant(Interval(-1, 1), 1.0);
  auto Cf = limit_flux(pinf, f);
  auto minus_x = -1.0 * testsupport::ramp(Interval(-1, 1));
  CHECK((Cf - minus_x).norm_linf() < 1e-13);

  CHECK(limit_flux(pinf, PiecewiseFunction::zero(Interval(-1, 1))).norm_linf() < 1e-15);
}

TEST_CASE("limit operators coincide with the mixed solve on admissible coefficients") {
  auto pbar = CoefficientField::piecewise_constant({0.0, 0.3, 1.0}, {0.5, 2.0});
  auto f = PiecewiseFunction::from_global({0.0, 1.0}, {Polynomial({1.0, 1.0})});
  auto direct = solve_mixed(pbar, f);
  CHECK((limit_solution(pbar, f) - direct.u).norm_linf() == 0.0);
  CHECK((limit_flux(pbar, f) - direct.q).norm_linf() == 0.0);
}

TEST_CASE("contrast sweep approaches the limit operator") {
  ContrastFamily fam(Interval(-1, 1), -0.5, 0.5);
  auto pinf = fam.asymptotic_member();
  auto f = PiecewiseFunction::constant(Interval(-1, 1), 1.0);

  std::vector<CoefficientField> members;
  for (double M : {10.0, 100.0, 1000.0, 10000.0}) members.push_back(fam.member(M));

  auto table = convergence_study(members, pinf, f);
  REQUIRE(table.rows.size() == 4);
  CHECK_FALSE(table.violated_invariant().has_value());

  for (std::size_t k = 1; k < table.rows.size(); ++k) {
    CHECK(table.rows[k].u_error < table.rows[k - 1].u_error);
    CHECK(table.rows[k].coefficient_distance < table.rows[k - 1].coefficient_distance);
  }

  // |u_M(0) - 3/8| = 1/(8M): below 1e-3 from M = 1000 on
  auto u4 = limit_solution(fam.member(10000.0), f);
  CHECK(std::abs(u4(0.0) - 0.375) == Approx(1.0 / 80000.0).epsilon(1e-9));
  CHECK(u4(0.0) == Approx(0.3750125).epsilon(1e-12));
  CHECK(std::abs(u4(0.0) - 0.375) < 1e-3);

  // flux column: q is contrast-independent, so the q error is tiny throughout
  for (const auto& row : table.rows) CHECK(row.q_error < 1e-12);
}

TEST_CASE("mollified sequence convergence table") {
  auto step = CoefficientField::piecewise_constant({0.0, 0.5, 1.0}, {0.5, 1.0});
  MollifiedSequence seq(step, {0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125});
  auto f = PiecewiseFunction::constant(Interval(0, 1), 1.0);

  std::vector<CoefficientField> members;
  for (std::size_t k = 0; k < seq.size(); ++k) members.push_back(seq.member(k));

  auto table = convergence_study(members, step, f);
  CHECK_FALSE(table.violated_invariant().has_value());
  for (std::size_t k = 1; k < table.rows.size(); ++k) {
    CHECK(table.rows[k].u_error < table.rows[k - 1].u_error);
    CHECK(table.rows[k].q_error <= table.rows[k - 1].q_error + 1e-15);
  }
}

TEST_CASE("constant sequence yields zero columns") {
  auto pbar = CoefficientField::piecewise_constant({0.0, 0.5, 1.0}, {0.5, 1.0});
  auto f = PiecewiseFunction::constant(Interval(0, 1), 1.0);
  std::vector<CoefficientField> members{pbar, pbar};
  auto table = convergence_study(members, pbar, f);
  for (const auto& row : table.rows) {
    CHECK(row.coefficient_distance == 0.0);
    CHECK(row.u_error < 1e-15);
    CHECK(row.q_error < 1e-15);
    CHECK(row.bound_ratio == 0.0);
  }
}

TEST_CASE("usage guards") {
  auto pbar = CoefficientField::constant(Interval(0, 1), 1.0);
  auto f = PiecewiseFunction::constant(Interval(0, 1), 1.0);
  CHECK_THROWS_AS(convergence_study({}, pbar, f), UsageError);
  CHECK_THROWS_AS(convergence_study(std::vector<CoefficientField>{pbar}, pbar,
                                    PiecewiseFunction::zero(Interval(0, 1))),
                  UsageError);
}
