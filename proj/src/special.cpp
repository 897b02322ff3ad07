#include "mattis/special.hpp"

#include <cmath>

#include "mattis/params.hpp"

namespace mattis {

namespace {

using cplx = std::complex<double>;

cplx e1_series(cplx z) {
  cplx sum = 0;
  cplx term = 1;  // (-z)^n / n!
  for (int n = 1; n < 200; ++n) {
    term *= -z / static_cast<double>(n);
    cplx add = term / static_cast<double>(n);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -euler_gamma - std::log(z) - sum;
}

cplx e1_continued_fraction(cplx z) {
  const double tiny = 1e-300;
  cplx b = z + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 100000; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
  }
  throw non_convergence("E1 continued fraction did not converge", std::abs(h));
}

}  // namespace

cplx exp_integral_e1(cplx z, E1Method* method) {
  if (z == cplx(0, 0)) throw invalid_input("E1: z = 0");
  if (z.imag() == 0 && z.real() < 0) throw invalid_input("E1: z on the branch cut");
  if (std::abs(z) <= 4) {
    if (method) *method = E1Method::series;
    return e1_series(z);
  }
  if (method) *method = E1Method::continued_fraction;
  return e1_continued_fraction(z);
}

SigmaEval sigma(cplx z) {
  SigmaEval s{z, 0, E1Method::series};
  s.value = std::exp(-exp_integral_e1(z, &s.method));
  return s;
}

cplx sigma_minus_one(cplx z) {
  cplx w = -exp_integral_e1(z);
  double x = w.real(), y = w.imag(), h = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2 * h * h, std::exp(x) * std::sin(y)};
}

cplx sigma_pow(cplx z, double a) { return std::exp(-a * exp_integral_e1(z)); }

cplx alpha1(cplx z) {
  if (z == cplx(0, 0)) throw invalid_input("alpha1: z = 0");
  return std::exp(-z) * (1.0 + z) / (z * z);
}

}  // namespace mattis
