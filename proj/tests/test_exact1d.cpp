#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "roughdiff/bounds.hpp"
#include "roughdiff/exact1d.hpp"
#include "test_support.hpp"

using namespace roughdiff;
using Catch::Approx;

namespace {

double max_sample_diff(const PiecewiseFunction& a, const PiecewiseFunction& b) {
  return (a - b).norm_linf();
}

}  // namespace

TEST_CASE("unit coefficient, unit source") {
  Interval iv(0, 1);
  auto pbar = CoefficientField::constant(iv, 1.0);
  auto f = PiecewiseFunction::constant(iv, 1.0);
  auto sol = solve_mixed(pbar, f);

  // oracle: -u'' = 1, u(0) = u(1) = 0  =>  u = x(1-x)/2, q = u' = 1/2 - x
  auto u_exact = PiecewiseFunction::from_global({0.0, 1.0}, {Polynomial({0.0, 0.5, -0.5})});
  auto q_exact = PiecewiseFunction::from_global({0.0, 1.0}, {Polynomial({0.5, -1.0})});
  CHECK(max_sample_diff(sol.u, u_exact) < 1e-13);
  CHECK(max_sample_diff(sol.q, q_exact) < 1e-13);
  CHECK(sol.u(0.5) == Approx(0.125));
  CHECK(sol.q(0.0) == Approx(0.5));
}

TEST_CASE("pure gradient data") {
  Interval iv(0, 1);
  auto pbar = CoefficientField::constant(iv, 1.0);
  auto f = PiecewiseFunction::zero(iv);
  auto g = PiecewiseFunction::constant(iv, 1.0);
  auto sol = solve_mixed(pbar, f, g);
  CHECK(sol.u.norm_linf() < 1e-14);
  CHECK(max_sample_diff(sol.q, PiecewiseFunction::constant(iv, -1.0)) < 1e-14);
}

TEST_CASE("three-zone contrast problem reproduces the closed form") {
  ContrastFamily fam(Interval(-1, 1), -0.5, 0.5);
  auto f = PiecewiseFunction::constant(Interval(-1, 1), 1.0);

  for (double M : {0.25, 1.0, 4.0, 100.0}) {
    auto sol = solve_primal(fam.diffusivity(M), f);
    CHECK(max_sample_diff(sol.u, testsupport::contrast_closed_form(M)) < 1e-13);
    // the flux is -x for every contrast
    auto q_exact = -1.0 * testsupport::ramp(Interval(-1, 1));
    CHECK(max_sample_diff(sol.q, q_exact) < 1e-13);
  }

  auto sol4 = solve_primal(fam.diffusivity(4.0), f);
  CHECK(sol4.u(0.0) == Approx(0.40625).epsilon(1e-12));
  CHECK(sol4.u(0.75) == Approx(0.21875).epsilon(1e-12));

  auto sol100 = solve_primal(fam.diffusivity(100.0), f);
  CHECK(sol100.u(0.0) == Approx(0.37625).epsilon(1e-12));

  // M = 1 collapses to the plain quadratic everywhere
  auto sol1 = solve_primal(fam.diffusivity(1.0), f);
  auto u1 = PiecewiseFunction::from_global({-1.0, 1.0}, {Polynomial({0.5, 0.0, -0.5})});
  CHECK(max_sample_diff(sol1.u, u1) < 1e-13);
}

TEST_CASE("degenerate coefficient is rejected only at zero mass") {
  Interval iv(0, 1);
  auto f = PiecewiseFunction::constant(iv, 1.0);
  auto with_zero = CoefficientField::piecewise_constant({0.0, 0.4, 0.7, 1.0}, {1.0, 0.0, 2.0});
  CHECK_NOTHROW(solve_mixed(with_zero, f));
  CHECK_THROWS_AS(CoefficientField::piecewise_constant({0.0, 1.0}, {0.0}), DegeneracyError);
}

TEST_CASE("flat zero-coefficient region with g = 0 freezes u") {
  Interval iv(0, 1);
  auto pbar = CoefficientField::piecewise_constant({0.0, 0.4, 0.7, 1.0}, {1.0, 0.0, 2.0});
  auto f = PiecewiseFunction::constant(iv, 1.0);
  auto sol = solve_mixed(pbar, f);
  // on (0.4, 0.7): u' = pbar q = 0
  CHECK(std::abs(sol.u(0.55) - sol.u(0.4)) < 1e-14);
  CHECK(std::abs(sol.u(0.7) - sol.u(0.4)) < 1e-14);
  auto r = residual(pbar, f, PiecewiseFunction::zero(iv), sol);
  CHECK(r.balance < 1e-13);
  CHECK(r.constitutive < 1e-13);
  CHECK(r.boundary < 1e-13);
}

TEST_CASE("residuals of constructed solutions vanish; perturbations register") {
  Interval iv(0, 1);
  auto pbar = CoefficientField::constant(iv, 1.0);
  auto f = PiecewiseFunction::constant(iv, 1.0);
  auto g = PiecewiseFunction::zero(iv);
  auto sol = solve_mixed(pbar, f, g);

  auto r = residual(pbar, f, g, sol);
  const double scale = 1.0 + product_norm(f, g);
  CHECK(r.balance <= 1e-12 * scale);
  CHECK(r.constitutive <= 1e-12 * scale);
  CHECK(r.boundary <= 1e-12 * scale);

  MixedSolution shifted{sol.u + 1.0, sol.q, sol.domain};
  CHECK(residual(pbar, f, g, shifted).boundary == Approx(1.0));

  MixedSolution scaled{sol.u, 2.0 * sol.q, sol.domain};
  CHECK(residual(pbar, f, g, scaled).balance == Approx(1.0));  // ||q'||_2 with q' = -1
}

TEST_CASE("property: the solve is linear in the data") {
  std::mt19937_64 rng(42);
  Interval iv(0, 1);
  for (int rep = 0; rep < 25; ++rep) {
    auto pbar = testsupport::random_coefficient(rng, iv, 0.2, 2.5, rep % 3 == 0);
    auto f1 = testsupport::random_piecewise(rng, iv, 3, 3);
    auto f2 = testsupport::random_piecewise(rng, iv, 3, 3);
    auto g1 = testsupport::random_piecewise(rng, iv, 3, 3);
    auto g2 = testsupport::random_piecewise(rng, iv, 3, 3);
    const double alpha = 0.7, beta = -1.3;

    auto combined = solve_mixed(pbar, linear_combine(alpha, f1, beta, f2),
                                linear_combine(alpha, g1, beta, g2));
    auto s1 = solve_mixed(pbar, f1, g1);
    auto s2 = solve_mixed(pbar, f2, g2);
    auto u_sum = linear_combine(alpha, s1.u, beta, s2.u);
    auto q_sum = linear_combine(alpha, s1.q, beta, s2.q);

    const double scale = 1.0 + combined.u.norm_linf() + combined.q.norm_linf();
    CHECK((combined.u - u_sum).norm_linf() <= 1e-12 * scale);
    CHECK((combined.q - q_sum).norm_linf() <= 1e-12 * scale);
  }
}

TEST_CASE("property: solutions obey the closed-form norm bound") {
  std::mt19937_64 rng(4242);
  Interval iv(0, 1);
  for (int rep = 0; rep < 25; ++rep) {
    auto pbar = testsupport::random_coefficient(rng, iv, 0.1, 3.0, rep % 4 == 0);
    auto f = testsupport::random_piecewise(rng, iv, 3, 3);
    auto g = testsupport::random_piecewise(rng, iv, 3, 3);
    auto sol = solve_mixed(pbar, f, g);
    const double lhs = product_norm(sol.u, sol.q);
    const double rhs = inverse_norm_bound(pbar) * product_norm(f, g);
    CHECK(lhs <= rhs * (1.0 + 1e-12));
  }
}

TEST_CASE("property: symmetric data give even u and odd q") {
  Interval iv(-1, 1);
  auto pbar = CoefficientField::piecewise_constant({-1.0, -0.5, 0.5, 1.0}, {2.0, 0.5, 2.0});
  auto f = PiecewiseFunction::from_global({-1.0, 1.0}, {Polynomial({1.0, 0.0, 1.0})});
  auto sol = solve_mixed(pbar, f);
  for (double x : {0.1, 0.3, 0.55, 0.8, 0.95}) {
    CHECK(sol.u(x) == Approx(sol.u(-x)).margin(1e-13));
    CHECK(sol.q(x) == Approx(-sol.q(-x)).margin(1e-13));
  }
}

TEST_CASE("probe distance") {
  Interval iv(0, 1);
  auto one = CoefficientField::constant(iv, 1.0);
  auto two = CoefficientField::constant(iv, 2.0);
  auto probes = default_probes(iv);

  CHECK(probe_operator_distance(one, one, probes) == Approx(0.0).margin(1e-14));

  const double d12 = probe_operator_distance(one, two, probes);
  CHECK(d12 > 0.0);
  CHECK(d12 <= lipschitz_rhs(one, two));
  CHECK(lipschitz_rhs(one, two) == Approx(11.0));

  auto near = CoefficientField::constant(iv, 1.01);
  const double dn = probe_operator_distance(one, near, probes);
  const double rhs = lipschitz_rhs(one, near);
  CHECK(rhs == Approx(2.0 * (2.0 + 1.0 + 1.01 + 1.0 / 1.01) * 0.01));
  CHECK(dn <= rhs);

  CHECK_THROWS_AS(probe_operator_distance(one, two, std::span<const Probe>{}), UsageError);
}
