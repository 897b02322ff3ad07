#include <cmath>

#include "doctest.h"
#include "mattis/thermo.hpp"
#include "mattis/theta.hpp"

using namespace mattis;

namespace {

ModelParams params(double g1, double g2, std::int64_t N) {
  ModelParams p;
  p.gamma1 = g1;
  p.gamma2 = g2;
  p.l_over_a = N;
  return p;
}

}  // namespace

TEST_CASE("one-dimensional theta sum equals the Jacobi theta function") {
  Eigen::MatrixXd H(1, 1);
  H(0, 0) = 0.3;
  Eigen::VectorXd m(1);
  m(0) = 1.1;
  ThetaResult r = theta_sum(ThetaSumSpec(H, m), ThetaMode::exact);
  CHECK(std::exp(r.log_Z) == doctest::Approx(1.180594366719951243).epsilon(1e-13));
  H(0, 0) = 2.0;
  r = theta_sum(ThetaSumSpec(H), ThetaMode::exact);
  CHECK(std::exp(r.log_Z) == doctest::Approx(1.2713415221890152252).epsilon(1e-14));
}

TEST_CASE("theta sum: Gaussian mode and bound") {
  Eigen::MatrixXd H(2, 2);
  H << 0.05, 0.01, 0.01, 0.04;
  ThetaSumSpec spec(H);
  ThetaResult ex = theta_sum(spec, ThetaMode::exact), ga = theta_sum(spec, ThetaMode::gaussian);
  CHECK(ga.log_Z == doctest::Approx(theta_log_gaussian(spec)));
  REQUIRE(ex.preconditions_met);
  CHECK(ex.ratio_minus_one >= -1e-13);
  CHECK(ex.ratio_minus_one <= ex.bound + 1e-13);
}

TEST_CASE("dilogarithm reference values") {
  CHECK(dilog(0.3) == doctest::Approx(0.32612951007547606953).epsilon(1e-14));
  CHECK(dilog(0.9) == doctest::Approx(1.2997147230049587252).epsilon(1e-14));
  CHECK(dilog(1.0) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
  CHECK(dilog(0.0) == 0.0);
}

TEST_CASE("boson free energy: serial and parallel agree") {
  ModelParams p = params(0.4, 0.3, 61);
  double s = boson_free_energy(p, 3.0, Exec::serial), q = boson_free_energy(p, 3.0, Exec::parallel);
  CHECK(q == doctest::Approx(s).epsilon(1e-13));
  CHECK(s < 0);
}

TEST_CASE("zero-mode modes agree within the theta bound") {
  ModelParams p = params(0.5, 0.5, 5);
  ZeroModeSum z = zero_mode_partition(p, 1.0);
  REQUIRE(std::isfinite(z.bound));
  CHECK(z.ratio_minus_one >= -1e-13);
  CHECK(z.ratio_minus_one <= z.bound);
  double exact = zero_mode_free_energy(p, 1.0, ZeroModeMode::theta);
  double closed = zero_mode_free_energy(p, 1.0, ZeroModeMode::closed);
  CHECK(closed - exact == doctest::Approx(std::log1p(z.ratio_minus_one)).epsilon(1e-9));
}

TEST_CASE("structured zero-mode sum equals the generic ellipsoid enumeration") {
  ModelParams p = params(0.3, 0.2, 1);
  ThetaResult t = theta_sum(zero_mode_quadratic_form(p, 1.0), ThetaMode::exact);
  CHECK(zero_mode_partition(p, 1.0).log_Z == doctest::Approx(t.log_Z).epsilon(1e-12));
}

TEST_CASE("QFT free energy density") {
  ModelParams p = params(0.5, 0.5, 1);
  DerivedConstants d = derived(p);
  CHECK(qft_free_energy_density(p, 2.0) == doctest::Approx(-pi / (3 * d.v_tilde * std::sqrt(d.A) * 4)));
}

TEST_CASE("split free energy: closed tail matches its quadrature") {
  ModelParams p = params(0.5, 0.5, 1);
  p.a_tilde = 0.25;
  SplitResult s = free_energy_split(p, 20.0);
  CHECK(omega_greater_quadrature(p, 20.0) == doctest::Approx(s.omega_greater).epsilon(1e-8));
  CHECK(p.a_tilde * (s.omega_less + s.omega_greater) ==
        doctest::Approx(qft_free_energy_density(p, 20.0)).epsilon(0.01));
}

TEST_CASE("free energy rejects non-positive beta") {
  CHECK_THROWS_AS(boson_free_energy(params(0, 0, 11), -1.0), invalid_input);
}
