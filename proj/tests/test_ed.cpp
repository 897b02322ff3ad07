#include <cmath>

#include "doctest.h"
#include "mattis/ed.hpp"
#include "mattis/params.hpp"

using namespace mattis;

TEST_CASE("window geometry") {
  TruncatedChiralSpace sp(1, 2 * pi, 8);
  CHECK(sp.dk() == doctest::Approx(1.0));
  CHECK(sp.k(0) == doctest::Approx(-3.5));
  CHECK(sp.k_cut() == doctest::Approx(3.5));
  CHECK(sp.charge(sp.sea()) == 0);
  CHECK(sp.excitation_energy(sp.sea()) == 0.0);
  CHECK_THROWS_AS(TruncatedChiralSpace(1, 1.0, 7), invalid_input);
  CHECK_THROWS_AS(sp.momentum_index(0.5), invalid_input);
}

TEST_CASE("density of the sea at p = 0 is its charge") {
  TruncatedChiralSpace sp(-1, 2 * pi, 10);
  DensityOperator j0(sp, 0);
  CHECK(j0.apply(sp.sea()).empty());
  std::uint32_t plus_one = sp.sea() | (std::uint32_t{1} << 5);
  if (plus_one != sp.sea()) CHECK(j0.element(plus_one, plus_one) == doctest::Approx(sp.charge(plus_one)));
}

TEST_CASE("oracle identities on a small window") {
  TruncatedChiralSpace sp(1, 2 * pi, 16);
  LowSector low = make_low_sector(sp, 3.0);
  REQUIRE_FALSE(low.states.empty());
  CHECK(check_density_commutator(sp, low, 1.0, -1.0) < 1e-12);
  CHECK(check_density_commutator(sp, low, 2.0, 1.0) < 1e-12);
  CHECK(check_kronig(sp, low) < 1e-12);
  CHECK(check_boson_ccr(sp, low, 1.0, 2.0) < 1e-12);
}

TEST_CASE("edge effects appear once states reach the cutoff") {
  TruncatedChiralSpace sp(1, 2 * pi, 8);
  LowSector all = make_low_sector(sp, 1e9, 1.0);
  CHECK(all.states.size() == 256);
  CHECK(check_density_commutator(sp, all, 1.0, -1.0) > 0.5);
}

TEST_CASE("density momentum limited to half the window") {
  TruncatedChiralSpace sp(1, 2 * pi, 8);
  CHECK_NOTHROW(build_density(sp, 1.0));
  CHECK_THROWS_AS(build_density(sp, 3.0), invalid_input);
}
