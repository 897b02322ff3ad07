#include <cmath>
#include <random>

#include "doctest.h"
#include "mattis/bogoliubov.hpp"
#include "mattis/model.hpp"

using namespace mattis;

namespace {

ModelParams params(double g1, double g2, std::int64_t N = 11) {
  ModelParams p;
  p.gamma1 = g1;
  p.gamma2 = g2;
  p.l_over_a = N;
  return p;
}

}  // namespace

TEST_CASE("validate_params rejects inadmissible couplings") {
  CHECK_FALSE(validate_params(params(0.3, 0.2)).has_value());
  CHECK(validate_params(params(1.0, 0)).has_value());
  CHECK(validate_params(params(0.0, 1.0)).has_value());
  CHECK(validate_params(params(0.3, 0.2, 10)).has_value());
  ModelParams p = params(0, 0);
  p.a_tilde = -1;
  CHECK(validate_params(p).has_value());
  CHECK_THROWS_AS(require_valid(params(-1.2, 0)), invalid_input);
}

TEST_CASE("derived constants at gamma2 = 0") {
  DerivedConstants d = derived(2.0, 0.6, 0.0);
  CHECK(d.A == doctest::Approx(1.0));
  CHECK(d.v_tilde == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(d.B == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.K == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("free dispersion is v_F |p_s|") {
  ModelParams p = params(0, 0);
  Momentum2 q = Momentum2::real(0.7, -0.2);
  CHECK(omega(1, q, p) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(omega(-1, q, p) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("omega_- vanishes on the p_- = 0 axis") {
  ModelParams p = params(0.9, 0.9);
  CHECK(std::abs(omega(-1, Momentum2::real(1.3, 0), p)) < 1e-15);
}

TEST_CASE("dispersion identities hold on random momenta") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    double g1 = 0.95 * u(rng);
    double g2 = 0.95 * u(rng) * (1 + g1);
    ModelParams p = params(g1, g2);
    DerivedConstants d = derived(p);
    Momentum2 q = Momentum2::real(3 * u(rng), 3 * u(rng));
    double wp = omega(1, q, p), wm = omega(-1, q, p);
    double p2 = q.norm2();
    CHECK(wp * wp + wm * wm == doctest::Approx(d.v_tilde * d.v_tilde * p2).epsilon(1e-12));
    CHECK(wp * wm == doctest::Approx(d.v_tilde * d.v_tilde * std::sqrt(d.A) * std::abs(q.plus * q.minus))
                         .epsilon(1e-12)
                         .scale(1e-300));
  }
}

TEST_CASE("U is orthogonal") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100; ++i) {
    ModelParams p = params(0.8 * u(rng), 0.5 * u(rng));
    Mat2 U = u_matrix(Momentum2::real(u(rng), u(rng)), p);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double dot = U[0][a] * U[0][b] + U[1][a] * U[1][b];
        CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-13).scale(1));
      }
  }
}

TEST_CASE("generic diagonalization reproduces omega on lattice momenta") {
  ModelParams p = params(0.4, -0.3, 9);
  for (std::int64_t n1 = 1; n1 <= 4; ++n1)
    for (std::int64_t n2 = -4; n2 <= 4; ++n2) {
      if (n2 == 0) continue;
      Momentum2 q = Momentum2::boson(n1, n2, p);
      MattisBlock blk = mattis_block(q, p);
      DiagResult r = diagonalize(blk.form, blk.lambda0);
      double hi = std::max(omega(1, q, p), omega(-1, q, p)), lo = std::min(omega(1, q, p), omega(-1, q, p));
      REQUIRE(r.lambda.size() == 2);
      CHECK(r.lambda[0] == doctest::Approx(hi).epsilon(1e-12));
      CHECK(r.lambda[1] == doctest::Approx(lo).epsilon(1e-12));
    }
}

TEST_CASE("ground-state energy: serial and parallel agree, zero without interaction") {
  ModelParams p = params(0.5, 0.3, 41);
  double s = ground_state_energy(p, Exec::serial), q = ground_state_energy(p, Exec::parallel);
  CHECK(q == doctest::Approx(s).epsilon(1e-13));
  CHECK(s < 0);
  CHECK(std::abs(ground_state_energy(params(0, 0, 41), Exec::serial)) < 1e-12);
}
