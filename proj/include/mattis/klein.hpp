#pragma once

#include <cstdint>
#include <vector>

namespace mattis {

// One factor R_{r,s}(x)^{r q} in an ordered product; x is the lattice index of x_{-s}.
struct KleinLabel {
  int q;
  int r;
  int s;
  std::int64_t x;
};

// Two factors cancel to 1 when (q, r, s, x) = (-q', r', s', x').
bool klein_pairs(const KleinLabel& a, const KleinLabel& b);

// Vacuum expectation of the ordered product, reduced by moving factors to the right: every
// other pair anticommutes, so the value is the Pfaffian of the pairing matrix.
int klein_vev(const std::vector<KleinLabel>& seq);

}  // namespace mattis
