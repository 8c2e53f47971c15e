#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qutrit/density.hpp"

using namespace qutrit;
using qutrit::testing::Gen;

namespace {

SpinParams params(double w1, double w2, double w3) {
  SpinParams p;
  p.omega1 = w1;
  p.omega2 = w2;
  p.omega3 = w3;
  return p;
}

}  // namespace

TEST_CASE("params_to_matrix layout") {
  SUBCASE("pure projector") {
    CHECK(Mat3::max_abs_diff(params_to_matrix(params(1, 0, 0)), Mat3::diagonal(1, 0, 0)) == 0.0);
  }
  SUBCASE("q3 fills the (1,2) block") {
    SpinParams p = params(0.5, 0.5, 0);
    p.q3 = 1;
    const Mat3 m = params_to_matrix(p);
    CHECK(m(0, 1) == Complex{0.5, 0});
    CHECK(m(1, 0) == Complex{0.5, 0});
    CHECK(m(0, 0) == Complex{0.5, 0});
    CHECK(m(2, 2) == Complex{0, 0});
  }
  SUBCASE("a1 enters the (2,3) block with a minus sign") {
    SpinParams p = params(1.0 / 3, 1.0 / 3, 1.0 / 3);
    p.a1 = 1;
    const Mat3 m = params_to_matrix(p);
    CHECK(m(1, 2) == Complex{0, -0.5});
    CHECK(m(2, 1) == Complex{0, 0.5});
  }
  SUBCASE("trace violation") {
    CHECK_THROWS_AS(params_to_matrix(params(0.5, 0.5, 0.5)), InvalidArgument);
  }
}

TEST_CASE("matrix_to_params") {
  SUBCASE("projector") {
    CHECK(matrix_to_params(Mat3::diagonal(1, 0, 0)) == params(1, 0, 0));
  }
  SUBCASE("(1,1,0)/sqrt2") {
    const auto p = pure_from_state(QutritState::normalize(Vec3{1, 1, 0}));
    SpinParams expect = params(0.5, 0.5, 0);
    expect.q3 = 1;
    CHECK(SpinParams::max_abs_diff(p, expect) < 1e-15);
  }
  SUBCASE("(1,0,1)/sqrt2") {
    const auto p = pure_from_state(QutritState::normalize(Vec3{1, 0, 1}));
    SpinParams expect = params(0.5, 0, 0.5);
    expect.q2 = 1;
    CHECK(SpinParams::max_abs_diff(p, expect) < 1e-15);
  }
  SUBCASE("errors") {
    Mat3 m = Mat3::diagonal(1, 0, 0);
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(matrix_to_params(m), InvalidArgument);
    CHECK_THROWS_AS(matrix_to_params(Mat3::diagonal(1, 1, 0)), InvalidArgument);
  }
}

TEST_CASE("pure_from_state examples") {
  CHECK(pure_from_state(QutritState(Vec3{1, 0, 0})) == params(1, 0, 0));
  CHECK(pure_from_state(QutritState(Vec3{0, 1, 0})) == params(0, 1, 0));

  const auto p = pure_from_state(QutritState::normalize(Vec3{1, 1, 1}));
  SpinParams expect = params(1.0 / 3, 1.0 / 3, 1.0 / 3);
  expect.q1 = -2.0 / 3;
  expect.q2 = 2.0 / 3;
  expect.q3 = 2.0 / 3;
  CHECK(SpinParams::max_abs_diff(p, expect) < 1e-15);

  CHECK_THROWS_AS(QutritState(Vec3{1, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(QutritState::normalize(Vec3{}), InvalidArgument);
}

TEST_CASE("check_purity_constraints") {
  SUBCASE("maximally mixed fails every relation") {
    const auto r = check_purity_constraints(params(1.0 / 3, 1.0 / 3, 1.0 / 3));
    for (int k = 0; k < 3; ++k) {
      CHECK_FALSE(r.passed[k]);
      CHECK(r.pair_residual[k] == doctest::Approx(-4.0 / 9));
    }
    CHECK_FALSE(r.passed[3]);
    CHECK(r.cubic_residual == doctest::Approx(-8.0 / 27));
  }
  SUBCASE("(1,1,0)/sqrt2 passes") {
    SpinParams p = params(0.5, 0.5, 0);
    p.q3 = 1;
    const auto r = check_purity_constraints(p);
    CHECK(r.all_passed());
    CHECK(r.pair_residual[2] == 0.0);
  }
  SUBCASE("random pure states pass all four") {
    Gen g(5);
    for (int n = 0; n < 1000; ++n) {
      const auto r = check_purity_constraints(pure_from_state(g.pure_state()));
      CHECK(r.all_passed());
    }
  }
}

TEST_CASE("round trip matrix -> params -> matrix") {
  Gen g(9);
  for (int n = 0; n < 1000; ++n) {
    const Mat3 rho = g.mixed_density();
    CHECK(Mat3::max_abs_diff(params_to_matrix(matrix_to_params(rho)), rho) <= 1e-14);
  }
}

TEST_CASE("mixtures are strictly mixed") {
  Gen g(13);
  for (int n = 0; n < 200; ++n) {
    const Mat3 rho = g.mixed_density();
    CHECK(trace_powers(rho).tr2 < 1.0 - 1e-12);
    CHECK(is_positive_semidefinite(matrix_to_params(rho)));
  }
}

TEST_CASE("positive semidefiniteness") {
  CHECK(is_positive_semidefinite(params(1.0 / 3, 1.0 / 3, 1.0 / 3)));
  SpinParams bad = params(0.5, 0.5, 0);
  bad.q3 = 3;  // |rho_12| = 1.5 > sqrt(w1 w2)
  CHECK_FALSE(is_positive_semidefinite(bad));
}

TEST_CASE("spin expectations are a separate convention") {
  // Populations from spin-operator traces sum to 2, not 1, and the S3 square
  // weights the outer levels; the layout populations are the diagonal.
  const Mat3 rho = Mat3::diagonal(1, 0, 0);
  const auto e = spin_expectations(rho);
  CHECK(e.squares[0] + e.squares[1] + e.squares[2] == doctest::Approx(2.0));
  CHECK(e.squares[2] == doctest::Approx(1.0));
  CHECK(e.linear[2] == doctest::Approx(1.0));
  CHECK(matrix_to_params(rho).omega3 == 0.0);

  Gen g(3);
  for (int n = 0; n < 50; ++n) {
    const auto s = spin_expectations(g.mixed_density());
    CHECK(s.squares[0] + s.squares[1] + s.squares[2] == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("state_from_pure_params recovers the state up to phase") {
  Gen g(21);
  for (int n = 0; n < 200; ++n) {
    const QutritState psi = g.pure_state();
    const QutritState back = state_from_pure_params(pure_from_state(psi));
    CHECK(back.overlap(psi) >= 1 - 1e-12);
  }
  CHECK_THROWS_AS(state_from_pure_params(params(1.0 / 3, 1.0 / 3, 1.0 / 3)), InvalidArgument);
}
