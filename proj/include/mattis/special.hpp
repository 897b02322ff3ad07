#pragma once

#include <complex>

namespace mattis {

enum class E1Method { series, continued_fraction };

// E1(z) = int_1^inf exp(-z t) / t dt for |arg z| < pi, z != 0.
// Power series for |z| <= 4, modified Lentz continued fraction otherwise.
std::complex<double> exp_integral_e1(std::complex<double> z, E1Method* method = nullptr);

struct SigmaEval {
  std::complex<double> z;
  std::complex<double> value;  // exp(-E1(z))
  E1Method method;
};

SigmaEval sigma(std::complex<double> z);

// sigma(z) - 1 without cancellation when E1(z) is small.
std::complex<double> sigma_minus_one(std::complex<double> z);

// sigma(z)^a taken as exp(-a E1(z)).
std::complex<double> sigma_pow(std::complex<double> z, double a);

// alpha1(z) = exp(-z) (1 + z) / z^2
std::complex<double> alpha1(std::complex<double> z);

}  // namespace mattis
