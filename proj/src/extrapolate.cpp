#include "mattis/extrapolate.hpp"

#include <cmath>

#include "mattis/params.hpp"

namespace mattis {

Extrapolated extrapolate_to_zero(const std::vector<double>& h, const std::vector<std::complex<double>>& f) {
  if (h.size() != f.size() || h.empty()) throw invalid_input("extrapolate_to_zero: mismatched or empty input");
  const std::size_t n = h.size();
  std::vector<std::complex<double>> p = f;
  std::complex<double> prev = f.back();
  for (std::size_t k = 1; k < n; ++k) {
    prev = p[n - 1];
    for (std::size_t i = n - 1; i >= k; --i) {
      double num = h[i];
      double den = h[i - k] - h[i];
      if (den == 0) throw invalid_input("extrapolate_to_zero: repeated abscissa");
      p[i] = p[i] + (p[i] - p[i - 1]) * (num / den);
      if (i == k) break;
    }
  }
  return {p[n - 1], n > 1 ? std::abs(p[n - 1] - prev) : 0.0};
}

}  // namespace mattis
