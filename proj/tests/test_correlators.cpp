#include <cmath>
#include <random>

#include "doctest.h"
#include "mattis/correlators.hpp"

using namespace mattis;

namespace {

ModelParams params(double g1, double g2, std::int64_t N) {
  ModelParams p;
  p.gamma1 = g1;
  p.gamma2 = g2;
  p.l_over_a = N;
  return p;
}

CorrelatorQuery two_point(double x, double eps, double beta = inf) {
  CorrelatorQuery q;
  q.insertions = {{1, 1, 1, x, 0, 0.0}, {-1, 1, 1, 0, 0, 0.0}};
  q.epsilon = eps;
  q.beta = beta;
  return q;
}

}  // namespace

TEST_CASE("admissible times") {
  CHECK_NOTHROW(require_admissible_time({1.5, 0}, inf));
  CHECK_NOTHROW(require_admissible_time({0, -0.5}, 1.0));
  CHECK_THROWS_AS(require_admissible_time({0, -2.0}, 1.0), invalid_input);
  CHECK_THROWS_AS(require_admissible_time({1, 1}, inf), invalid_input);
}

TEST_CASE("free finite-L propagator") {
  ModelParams p = params(0, 0, 51);
  const double eps = 1e-3, L = p.L();
  for (double x : {1.0, 4.0, 13.0}) {
    cplx w = eps - cplx(0, 1) * x;
    cplx want = (1 / (2 * pi * eps)) * (1 - std::exp(-2 * pi * eps / L)) / (1.0 - std::exp(-2 * pi * w / L));
    cplx got = fermion_npoint(two_point(x, eps), p, Exec::serial);
    CHECK(std::abs(got - want) / std::abs(want) < 1e-10);
  }
}

TEST_CASE("ln G: serial and parallel agree at zero and finite temperature") {
  ModelParams p = params(0.4, 0.3, 31);
  for (double beta : {inf, 5.0}) {
    for (int r2 : {1, -1}) {
      cplx a = ln_G(p, beta, {1, 1}, {r2, 1}, 3.0, 0.0, 0.4, 1e-3, Exec::serial);
      cplx b = ln_G(p, beta, {1, 1}, {r2, 1}, 3.0, 0.0, 0.4, 1e-3, Exec::parallel);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("charge-violating products vanish") {
  CorrelatorQuery q = two_point(1.0, 1e-3);
  q.insertions[1].q = 1;
  CHECK(fermion_npoint(q, params(0.3, 0, 21)) == cplx(0, 0));
}

TEST_CASE("transverse positions off the lattice are rejected") {
  CorrelatorQuery q = two_point(0.5, 1e-3);
  CHECK_NOTHROW(fermion_npoint(q, params(0.3, 0, 21)));
  q.insertions[0].x_minus = 0.5;
  CHECK_THROWS_AS(fermion_npoint(q, params(0.3, 0, 21)), invalid_input);
}

TEST_CASE("IR sizes") {
  std::vector<std::int64_t> want = {101, 203, 407, 815};
  CHECK(ir_sizes(101) == want);
}

TEST_CASE("density two-point: serial and parallel agree") {
  ModelParams p = params(0.5, 0, 41);
  DensityInsertion a{1, 1, 2.0, 0, 0.3}, b{-1, 1, 0, 0, 0.0};
  cplx s = density_two_point(p, inf, a, b, 1e-3, CorrelatorMode::finite_L, Exec::serial);
  cplx q = density_two_point(p, inf, a, b, 1e-3, CorrelatorMode::finite_L, Exec::parallel);
  CHECK(std::abs(s - q) <= 1e-12 * std::abs(s));
}

TEST_CASE("zero-mode generating function: Gaussian form vs exact theta sums") {
  ModelParams p = params(0.3, 0.2, 1);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 5; ++trial) {
    ZeroModeSource m;
    m[{1, 1, 0}] = 2 * u(rng);
    m[{-1, -1, 0}] = 2 * u(rng);
    m[{1, -1, 0}] = 2 * u(rng);
    double closed = zero_mode_generating(p, 0.1, m), exact = zero_mode_generating_exact(p, 0.1, m);
    CHECK(closed == doctest::Approx(exact).epsilon(1e-7));
  }
  CHECK(zero_mode_generating(p, 0.1, {}) == doctest::Approx(1.0));
}

TEST_CASE("zero-mode NN is symmetric") {
  ModelParams p = params(0.4, 0.3, 7);
  double ab = zero_mode_nn(p, 2.0, 1, 1, 2, -1, -1, 5), ba = zero_mode_nn(p, 2.0, -1, -1, 5, 1, 1, 2);
  CHECK(ab == doctest::Approx(ba).epsilon(1e-14));
  CHECK(zero_mode_nn(p, 2.0, 1, 1, 0, 1, 1, 0) > 0);
}
