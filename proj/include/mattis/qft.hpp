#pragma once

#include <string>

#include "mattis/model.hpp"

namespace mattis {

// IR-limit fermion two-point function at gamma2 = 0 and zero temperature, for q1 = -q2,
// r1 = r2 = r, s1 = s2 and x_{-s} = 0. Only v_F, gamma1 and a_tilde of p are used.
cplx fermion2pt_ir_g2zero(const ModelParams& p, int r, double x_s, cplx t, double epsilon);

enum class QuadScheme { gauss_kronrod, tanh_sinh };

struct CConstant {
  double value;
  double error;  // achieved quadrature error propagated to C
};

// C = exp(-I), I the angular integral split at pi/4.
CConstant c_constant(double gamma1, double gamma2, double tol = 1e-12, QuadScheme scheme = QuadScheme::gauss_kronrod);

// Integrand of I on (0, pi/2), including the 1/cos or 1/sin measure.
double c_integrand(double theta, double gamma1, double gamma2);

struct QftTwoPoint {
  cplx value;
  double K;
  double C;
  std::string distribution = "delta_{q1,-q2} delta_{r1,r2} delta_{s1,s2} delta(x_{-s})";
};

// Full QFT-limit fermion two-point function at zero temperature. Pass c_value to reuse a computed C.
QftTwoPoint fermion2pt_qft(const ModelParams& p, int r, double x_s, cplx t, double L0, double epsilon,
                           double c_value = -1);

// IR-limit density two-point function at gamma2 = 0 for s1 = s2 and x_{-s} = 0, multiplied by a_tilde.
cplx density2pt_ir_g2zero(const ModelParams& p, int r1, int r2, double x_s, cplx t, double epsilon);

}  // namespace mattis
