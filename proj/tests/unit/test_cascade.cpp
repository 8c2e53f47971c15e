#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qutrit/cascade.hpp"

using namespace qutrit;
using qutrit::testing::Gen;
using qutrit::testing::kPi;

namespace {
const double kR2 = std::sqrt(2.0);
}

TEST_CASE("CascadeParams construction") {
  SUBCASE("from couplings reproduces the inputs") {
    const auto p = CascadeParams::from_couplings(0.3, 0.7, 0.4, 1.2);
    CHECK(p.frequency() == doctest::Approx(std::sqrt(0.09 + 2 * 1.44 * 0.49)));
    CHECK(std::abs(p.eps1() - 0.3) < 1e-12);
    CHECK(std::abs(p.field_coupling() - 1.2 * 0.7 * kR2) < 1e-12);
    CHECK(p.phase() == 0.4);
  }
  SUBCASE("from components splits g1 + i g2 into magnitude and phase") {
    const auto p = CascadeParams::from_components(0.5, 0.3, 0.4, 2.0);
    CHECK(p.phase() == doctest::Approx(std::atan2(0.4, 0.3)));
    CHECK(std::abs(p.field_coupling() - 2.0 * 0.5 * kR2) < 1e-12);
  }
  SUBCASE("from levels applies the cascade reductions") {
    LevelInputs in;
    in.e0 = -1.0;
    in.e1 = 0.0;
    in.e2 = 1.0;  // equal spacing: eps1 = eps2 = 1
    in.g = {0.2, 0.1, 9.0, 9.0, 0.2, 0.1};  // g3, g4 discarded
    in.field = 1.5;
    const auto p = CascadeParams::from_levels(in);
    CHECK(std::abs(p.eps1() - 1.0) < 1e-12);
    CHECK(p.phase() == doctest::Approx(std::atan2(0.1, 0.2)));

    LevelInputs uneven = in;
    uneven.e1 = 0.3;
    CHECK_THROWS_AS(CascadeParams::from_levels(uneven), InvalidArgument);
    LevelInputs unequal = in;
    unequal.g[4] = 0.25;
    CHECK_THROWS_AS(CascadeParams::from_levels(unequal), InvalidArgument);
  }
  SUBCASE("invalid direct params") {
    CHECK_THROWS_AS(CascadeParams(0.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(CascadeParams(-1.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(CascadeParams(1.0, NAN, 0.0), InvalidArgument);
  }
}

TEST_CASE("build_hamiltonian") {
  const Mat3 h0 = build_hamiltonian(CascadeParams(2.0, 0.0, 0.3));
  CHECK(Mat3::max_abs_diff(h0, Mat3::diagonal(-2, 0, 2)) < 1e-15);

  const Mat3 h = build_hamiltonian(CascadeParams(1.0, kPi / 2, 0.0));
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(h(k, k)) < 1e-15);
  CHECK(std::abs(h(0, 1) - 1 / kR2) < 1e-15);
  CHECK(std::abs(h(1, 2) - 1 / kR2) < 1e-15);
  CHECK(h(0, 2) == Complex{0, 0});

  Gen g(31);
  for (int n = 0; n < 200; ++n) {
    const auto p = g.cascade();
    const Mat3 hh = build_hamiltonian(p);
    CHECK(hermitian_check(hh, 1e-12));
    const auto e = eigensystem(hh);
    const double w = p.frequency();
    CHECK(std::abs(e[0].value + w) <= 1e-10 * std::max(1.0, w));
    CHECK(std::abs(e[1].value) <= 1e-10 * std::max(1.0, w));
    CHECK(std::abs(e[2].value - w) <= 1e-10 * std::max(1.0, w));
  }
}

TEST_CASE("analytic_eigenvectors") {
  SUBCASE("decoupled limit") {
    const auto v = analytic_eigenvectors(CascadeParams(1.0, 0.0, 0.0));
    CHECK(Vec3::max_abs_diff(v[0], Vec3{1, 0, 0}) < 1e-15);
    CHECK(Vec3::max_abs_diff(v[1], Vec3{0, 1, 0}) < 1e-15);
    CHECK(Vec3::max_abs_diff(v[2], Vec3{0, 0, 1}) < 1e-15);
  }
  SUBCASE("theta = pi/2") {
    const auto v = analytic_eigenvectors(CascadeParams(1.0, kPi / 2, 0.0));
    CHECK(Vec3::max_abs_diff(v[1], Vec3{1 / kR2, 0, -1 / kR2}) < 1e-15);
  }
  SUBCASE("residuals and orthonormality") {
    Gen g(32);
    for (int n = 0; n < 200; ++n) {
      const auto p = g.cascade(0.1, 1.0);
      const Mat3 h = build_hamiltonian(p);
      const auto v = analytic_eigenvectors(p);
      const std::array<double, 3> lam{-p.frequency(), 0.0, p.frequency()};
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK((h * v[k] - lam[k] * v[k]).norm() <= 1e-12);
        for (std::size_t j = 0; j < 3; ++j)
          CHECK(std::abs(v[k].dot(v[j]) - (k == j ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("evolve_closed_form") {
  const auto p = CascadeParams(1.0, kPi / 2, 0.0);
  CHECK(Vec3::max_abs_diff(evolve_closed_form(p, 0.0).amplitudes(), Vec3{1, 0, 0}) == 0.0);
  CHECK(Vec3::max_abs_diff(evolve_closed_form(p, kPi).amplitudes(), Vec3{0, 0, -1}) < 1e-15);

  Gen g(33);
  for (int n = 0; n < 30; ++n) {
    const auto q = g.cascade();
    const double t = g.uniform(0.0, 20.0) / q.frequency();
    const auto psi = evolve_closed_form(q, t);
    CHECK(std::abs(psi.amplitudes().norm() - 1) <= 1e-12);

    // periodicity
    const auto later = evolve_closed_form(q, t + 2 * kPi / q.frequency());
    CHECK(Vec3::max_abs_diff(psi.amplitudes(), later.amplitudes()) <= 1e-12);

    // independent oracles: spectral propagator and RK4
    const Mat3 h = build_hamiltonian(q);
    CHECK(Vec3::max_abs_diff(psi.amplitudes(),
                             qutrit::testing::spectral_evolve(h, Vec3{1, 0, 0}, t)) <= 1e-9);
    const Vec3 rk = integrate_schrodinger(h, Vec3{1, 0, 0}, t, recommended_step(h));
    CHECK(Vec3::max_abs_diff(psi.amplitudes(), rk) <= 1e-6);
  }
}

TEST_CASE("closed_form_parameters") {
  const auto p = CascadeParams(1.0, kPi / 2, 0.0);
  const auto at_pi = closed_form_parameters(p, kPi);
  CHECK(at_pi.omega1 == doctest::Approx(0.5));
  CHECK(std::abs(at_pi.omega2) < 1e-15);
  CHECK(at_pi.omega3 == doctest::Approx(0.5));

  Gen g(34);
  for (int n = 0; n < 200; ++n) {
    const double th = g.uniform(-10, 10);
    const auto q = CascadeParams(g.uniform(0.1, 5), th, g.uniform(0, 2 * kPi));
    const auto s0 = closed_form_parameters(q, 0.0);
    CHECK(s0.omega2 == 0.0);
    CHECK(s0.omega1 == doctest::Approx((3 + std::cos(2 * th)) / 4).epsilon(1e-15));
    const auto s = closed_form_parameters(q, g.uniform(0, 20));
    CHECK(std::abs(s.omega1 + s.omega2 + s.omega3 - 1.0) <= 1e-15);
  }
}

TEST_CASE("pipeline_parameters") {
  const auto p = CascadeParams(1.0, kPi / 2, 0.0);
  SpinParams start;
  start.omega1 = 1;
  CHECK(SpinParams::max_abs_diff(pipeline_parameters(p, 0.0), start) == 0.0);
  const auto at_pi = pipeline_parameters(p, kPi);
  CHECK(std::abs(at_pi.omega3 - 1) < 1e-15);
  CHECK(std::abs(at_pi.omega1) < 1e-15);

  Gen g(35);
  for (int n = 0; n < 200; ++n) {
    const auto q = g.cascade();
    CHECK(check_purity_constraints(pipeline_parameters(q, g.uniform(0, 10))).all_passed());
  }
}

TEST_CASE("audit_parameters") {
  SUBCASE("theta = pi/2 diverges at wt = pi") {
    const auto rep = audit_parameters(CascadeParams(1.0, kPi / 2, 0.0), {0.0, kPi / 2, kPi});
    const auto& s = rep.samples[2];
    CHECK(s.closed_form.omega1 == doctest::Approx(0.5));
    CHECK(s.closed_form.omega3 == doctest::Approx(0.5));
    CHECK(s.pipeline.omega3 == doctest::Approx(1.0));
    CHECK(s.abs_diff[0] == doctest::Approx(0.5));
    CHECK(s.abs_diff[2] == doctest::Approx(0.5));
    CHECK_FALSE(rep.agrees[0]);
    CHECK_FALSE(rep.all_agree());
    CHECK(rep.notes.size() == 3);
  }
  SUBCASE("decoupled limit: populations oscillate in the closed form only") {
    const auto rep = audit_parameters(CascadeParams(1.0, 0.0, 0.0), linspace(0, kPi, 9));
    for (const auto& s : rep.samples) {
      CHECK(s.closed_form.omega1 == doctest::Approx(std::pow(std::cos(s.t), 2)));
      CHECK(s.pipeline.omega1 == doctest::Approx(1.0));
    }
    CHECK(rep.max_abs_diff[0] == doctest::Approx(1.0));
  }
  SUBCASE("single-point grid at t = 0") {
    const auto rep = audit_parameters(CascadeParams(1.0, 1.0, 0.2), {0.0});
    REQUIRE(rep.samples.size() == 1);
    CHECK(rep.samples[0].abs_diff[1] == 0.0);  // omega2 = 0 in both
    CHECK(rep.samples[0].abs_diff[8] > 0.0);   // q3 residual still reported
  }
  SUBCASE("empty grid") {
    CHECK_THROWS_AS(audit_parameters(CascadeParams(1.0, 1.0, 0.0), {}), InvalidArgument);
  }
}

TEST_CASE("angle_trajectory") {
  const auto grid = linspace(0.0, 4 * kPi, 400);

  SUBCASE("closed-form source at theta = 3") {
    const auto tr = angle_trajectory(CascadeParams(1.0, 3.0, 0.0), grid, ParamSource::ClosedForm);
    REQUIRE(tr.samples.size() == 400);
    const double psi1 = std::acos(std::abs(std::sin(3.0)) / kR2);
    CHECK(psi1 == doctest::Approx(1.4708).epsilon(1e-4));
    for (const auto& s : tr.samples) {
      CHECK(std::abs(s.angles[0].psi - psi1) <= 1e-12);
      CHECK(std::abs(s.angles[0].chi - std::atan(std::abs(std::tan(s.phase_angle)))) <= 1e-12);
    }
  }
  SUBCASE("chi1 equals wt in the first octant") {
    const auto tr =
        angle_trajectory(CascadeParams(1.0, 5.0, 0.0), {kPi / 4}, ParamSource::ClosedForm);
    CHECK(tr.samples[0].angles[0].chi == doctest::Approx(kPi / 4).epsilon(1e-14));
  }
  SUBCASE("pipeline source keeps v constant") {
    Gen g(36);
    const auto p = g.cascade();
    std::vector<double> t;
    for (double x : grid) t.push_back(x / p.frequency());
    const auto tr = angle_trajectory(p, t, ParamSource::Pipeline);
    const double c = 1 / std::sqrt(3.0);
    for (const auto& s : tr.samples) {
      for (double x : s.vectors.v) CHECK(std::abs(x - c) <= 1e-9);
      CHECK(s.angles[2].psi == doctest::Approx(0.9553166181).epsilon(1e-9));
      CHECK(s.angles[2].chi == doctest::Approx(kPi / 4).epsilon(1e-9));
      CHECK(std::abs(squared_norm(s.vectors.u) - 1) <= 1e-9);
    }
  }
  SUBCASE("grid validation") {
    const CascadeParams p(1.0, 1.0, 0.0);
    CHECK_THROWS_AS(angle_trajectory(p, {}, ParamSource::Pipeline), InvalidArgument);
    CHECK_THROWS_AS(angle_trajectory(p, {1.0, 1.0}, ParamSource::Pipeline), InvalidArgument);
    CHECK_THROWS_AS(angle_trajectory(p, {-1.0, 1.0}, ParamSource::Pipeline), InvalidArgument);
  }
}

TEST_CASE("parse_source") {
  CHECK(parse_source("pipeline") == ParamSource::Pipeline);
  CHECK(parse_source("paper-formulas") == ParamSource::ClosedForm);
  CHECK(to_string(ParamSource::ClosedForm) == "paper-formulas");
  CHECK_THROWS_AS(parse_source("nope"), InvalidArgument);
}
