#include "doctest.h"
#include "mattis/klein.hpp"

using namespace mattis;

TEST_CASE("pairs cancel only with opposite charge and equal flavor and site") {
  CHECK(klein_pairs({1, 1, 1, 0}, {-1, 1, 1, 0}));
  CHECK_FALSE(klein_pairs({1, 1, 1, 0}, {1, 1, 1, 0}));
  CHECK_FALSE(klein_pairs({1, 1, 1, 0}, {-1, -1, 1, 0}));
  CHECK_FALSE(klein_pairs({1, 1, 1, 0}, {-1, 1, 1, 2}));
}

TEST_CASE("klein_vev small sequences") {
  CHECK(klein_vev({}) == 1);
  CHECK(klein_vev({{1, 1, 1, 0}}) == 0);
  CHECK(klein_vev({{1, 1, 1, 0}, {-1, 1, 1, 0}}) == 1);
  CHECK(klein_vev({{1, 1, 1, 0}, {-1, 1, -1, 0}}) == 0);
  // a b a^-1 b^-1 with distinct pairs picks up one exchange sign
  CHECK(klein_vev({{1, 1, 1, 0}, {1, -1, 1, 0}, {-1, 1, 1, 0}, {-1, -1, 1, 0}}) == -1);
  CHECK(klein_vev({{1, 1, 1, 0}, {-1, 1, 1, 0}, {1, -1, 1, 0}, {-1, -1, 1, 0}}) == 1);
}

TEST_CASE("repeated identical pairs add up") {
  std::vector<KleinLabel> s = {{1, 1, 1, 0}, {-1, 1, 1, 0}, {1, 1, 1, 0}, {-1, 1, 1, 0}};
  CHECK(klein_vev(s) == 2);
}
