#pragma once

#include <complex>
#include <vector>

namespace mattis {

struct Extrapolated {
  std::complex<double> value;
  double error;  // |difference between the two highest-order estimates|
};

// Polynomial (Neville) extrapolation of f(h) to h = 0.
Extrapolated extrapolate_to_zero(const std::vector<double>& h, const std::vector<std::complex<double>>& f);

}  // namespace mattis
