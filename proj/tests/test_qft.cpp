#include <cmath>

#include "doctest.h"
#include "mattis/qft.hpp"

using namespace mattis;

TEST_CASE("C constant against an independent high-precision quadrature") {
  struct Ref {
    double g1, g2, C;
  };
  const Ref refs[] = {
      {0.5, 0.5, 0.9138765720906009563},
      {-0.3, 0.2, 0.98904329835770798809},
      {0.7, -0.3, 0.96421250986925907763},
      {0.9, 0.9, 0.5935069345073131112},
      {-0.45, -0.45, 1.1933595500058707438},
  };
  for (const auto& r : refs) {
    for (QuadScheme s : {QuadScheme::gauss_kronrod, QuadScheme::tanh_sinh}) {
      CConstant c = c_constant(r.g1, r.g2, 1e-12, s);
      CHECK(c.value == doctest::Approx(r.C).epsilon(1e-11));
      CHECK(c.error < 1e-10);
    }
  }
}

TEST_CASE("C is one without gamma2") {
  for (double g1 : {-0.9, 0.0, 0.6}) CHECK(c_constant(g1, 0).value == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("C integrand is bounded at both ends") {
  CHECK(std::isfinite(c_integrand(1e-9, 0.5, 0.5)));
  CHECK(std::isfinite(c_integrand(pi / 2 - 1e-9, 0.5, 0.5)));
  CHECK(std::abs(c_integrand(0.3, 0.5, 0.0)) < 1e-14);
}

TEST_CASE("free limit of the closed forms") {
  ModelParams p;
  const double eps = 1e-3, x = 2.0;
  cplx free = 1.0 / (2 * pi * (eps - cplx(0, 1) * x));
  cplx ir = fermion2pt_ir_g2zero(p, 1, x, 0.0, eps);
  CHECK(std::abs(ir - free) / std::abs(free) < 1e-12);
  QftTwoPoint q = fermion2pt_qft(p, 1, x, 0.0, 1.0, eps);
  CHECK(q.K == doctest::Approx(1.0));
  CHECK(std::abs(q.value - free) / std::abs(free) < 1e-12);
}

TEST_CASE("QFT two-point decays with exponent K") {
  ModelParams p;
  p.gamma1 = 0.5;
  p.gamma2 = 0.5;
  double c = c_constant(0.5, 0.5).value;
  double f1 = std::abs(fermion2pt_qft(p, 1, 100.0, 0.0, 1.0, 1e-6, c).value);
  double f2 = std::abs(fermion2pt_qft(p, 1, 1000.0, 0.0, 1.0, 1e-6, c).value);
  double K = fermion2pt_qft(p, 1, 1.0, 0.0, 1.0, 1e-6, c).K;
  CHECK(std::log(f2 / f1) / std::log(10.0) == doctest::Approx(-K).epsilon(1e-9));
}

TEST_CASE("gamma2 = 0 closed forms reject other couplings") {
  ModelParams p;
  p.gamma2 = 0.1;
  CHECK_THROWS_AS(fermion2pt_ir_g2zero(p, 1, 1.0, 0.0, 1e-3), invalid_input);
  CHECK_THROWS_AS(density2pt_ir_g2zero(p, 1, 1, 1.0, 0.0, 1e-3), invalid_input);
}
