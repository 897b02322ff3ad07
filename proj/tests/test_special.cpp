#include <cmath>
#include <random>

#include "doctest.h"
#include "mattis/params.hpp"
#include "mattis/special.hpp"

using namespace mattis;
using cplx = std::complex<double>;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("E1 against high-precision reference values") {
  struct Ref {
    cplx z, v;
  };
  const Ref refs[] = {
      {{1, 0}, {0.21938393439552027368, 0}},
      {{0.5, 2}, {-0.23812693789267186849, -0.025877115590053964576}},
      {{-3, 0.5}, {-9.3836035093309434316, 0.12921297008462977011}},
      {{10, -5}, {2.483921524158450651e-6, -2.84005265134573238e-6}},
      {{0, 30}, {0.033032417282071143779, -0.0040397867645455082476}},
      {{0.01, 0.01}, {3.6913808201114747233, -0.77544805228700201538}},
  };
  for (const auto& r : refs) CHECK(rel(exp_integral_e1(r.z), r.v) < 1e-13);
}

TEST_CASE("E1 method selection follows |z| <= 4") {
  E1Method m;
  exp_integral_e1({3.9, 0}, &m);
  CHECK(m == E1Method::series);
  exp_integral_e1({0, 4.1}, &m);
  CHECK(m == E1Method::continued_fraction);
}

TEST_CASE("E1 obeys conjugation symmetry") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-8, 8);
  for (int i = 0; i < 500; ++i) {
    cplx z(u(rng), u(rng));
    if (std::abs(z) < 1e-3 || (z.real() < 0 && std::abs(z.imag()) < 1e-3)) continue;
    CHECK(rel(exp_integral_e1(std::conj(z)), std::conj(exp_integral_e1(z))) < 1e-14);
  }
}

TEST_CASE("sigma and sigma - 1") {
  cplx z(25, 3);
  cplx direct = -exp_integral_e1(z);
  CHECK(rel(sigma_minus_one(z), direct + 0.5 * direct * direct) < 1e-14);
  cplx w(0.4, -1.2);
  CHECK(rel(sigma_minus_one(w), sigma(w).value - 1.0) < 1e-14);
  CHECK(rel(sigma_pow(w, 0.7), std::pow(sigma(w).value, 0.7)) < 1e-13);
}

TEST_CASE("alpha1 definition and domain") {
  cplx z(1.5, -0.5);
  CHECK(rel(alpha1(z), std::exp(-z) * (1.0 + z) / (z * z)) < 1e-15);
  CHECK_THROWS_AS(alpha1(0.0), invalid_input);
}
