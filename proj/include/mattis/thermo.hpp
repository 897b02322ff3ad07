#pragma once

#include <string>

#include "mattis/model.hpp"
#include "mattis/theta.hpp"

namespace mattis {

// Sum over s and p in the hatted boson sets of (1/beta) ln(1 - exp(-beta omega_s(p))).
double boson_free_energy(const ModelParams& p, double beta, Exec exec = Exec::parallel);

// beta H_Q as a quadratic form in the integer charges nu_{r,s}(x); index ((s * N + x) * 2 + r).
ThetaSumSpec zero_mode_quadratic_form(const ModelParams& p, double beta);
Eigen::Index zero_mode_index(int r, int s, std::int64_t x_site, const ModelParams& p);

enum class ZeroModeMode { theta, gaussian, closed };

struct ZeroModeSum {
  double log_Z;
  double log_J;
  double ratio_minus_one;  // Z/J - 1
  double bound;            // theta bound on Z/J - 1 (NaN when it does not apply)
};

// Exact zero-mode partition sum. Each site contributes a two-charge lattice sum in
// m = nu_+ + nu_-, d = nu_+ - nu_- (same parity); the O(a/L) coupling only sees the
// total charges, whose distribution is the N-fold convolution of the site distribution.
ZeroModeSum zero_mode_partition(const ModelParams& p, double beta);

double zero_mode_free_energy(const ModelParams& p, double beta, ZeroModeMode mode);

// -pi / (3 v~ sqrt(A) beta^2)
double qft_free_energy_density(const ModelParams& p, double beta);

struct FreeEnergyBreakdown {
  double omega_B;
  double omega_Q;
  double E0;
  double total;
  ZeroModeMode mode;
};

FreeEnergyBreakdown free_energy(const ModelParams& p, double beta, ZeroModeMode mode, Exec exec = Exec::parallel);
std::string to_string(ZeroModeMode m);

struct SplitResult {
  double omega_less;           // lim L^-2 Omega_B^<
  double omega_greater;        // lim L^-2 Omega_B^>
  double omega_less_effective; // same with the effective dispersion v~ sqrt(A) |p_s|
  double error_estimate;
};

// Infinite-volume split of the boson free energy density; Omega^< by nested quadrature on the
// wedge 0 < theta < pi/4, Omega^> and the effective part in closed form.
SplitResult free_energy_split(const ModelParams& p, double beta, double tol = 1e-10);

// Omega^> by quadrature of the tail integral (independent of the dilogarithm form).
double omega_greater_quadrature(const ModelParams& p, double beta);

// Li2(u) for 0 <= u <= 1.
double dilog(double u);

}  // namespace mattis
