#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "mattis/parallel.hpp"
#include "mattis/params.hpp"

namespace mattis {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// Momentum in the rotated basis e_+, e_-. Lattice points carry exact integer
// indices; p_+- = (2 pi / L) * n_+- for boson sets and (2 pi / L) * (n_+- + 1/2) for fermion sets.
struct Momentum2 {
  double plus = 0;
  double minus = 0;
  std::optional<std::array<std::int64_t, 2>> index;
  bool half_integer = false;

  static Momentum2 boson(std::int64_t n_plus, std::int64_t n_minus, const ModelParams& p);
  static Momentum2 fermion(std::int64_t n_plus, std::int64_t n_minus, const ModelParams& p);
  static Momentum2 real(double p_plus, double p_minus) { return {p_plus, p_minus, std::nullopt, false}; }

  double operator[](int s) const { return s > 0 ? plus : minus; }
  Momentum2 operator-() const;
  double norm2() const { return plus * plus + minus * minus; }
};

// Index-set membership (fermion set Lambda*_s, boson sets, 1D sets, position set Lambda_s).
bool in_fermion_set(int s, const Momentum2& k, const ModelParams& p);
bool in_boson_set(int s, const Momentum2& q, const ModelParams& p);
bool in_boson_set_hat(int s, const Momentum2& q, const ModelParams& p);
bool in_lattice_1d(double x, const ModelParams& p);
bool in_boson_set_1d(double q, const ModelParams& p);
bool in_boson_set_1d_hat(double q, const ModelParams& p);
bool in_position_set(int s, double x_plus, double x_minus, const ModelParams& p);

int chi(const Momentum2& q, const ModelParams& p);

double omega(int s, const Momentum2& q, const ModelParams& p);
double omega_tilde(int s, const Momentum2& q, const ModelParams& p);
double g_angular(int s, double theta, double A);
Mat2 u_matrix(const Momentum2& q, const ModelParams& p);
cplx v_coeff(int s_prime, int r, int s, const Momentum2& q, const ModelParams& p);

// Everything needed per momentum: omega_+-, U, a = v_F (1 - gamma1 chi), chi.
struct ModeData {
  double omega[2];  // index 0 is s=+, 1 is s=-
  Mat2 U;
  double a;
  int chi;
};
ModeData mode_data(const Momentum2& q, const ModelParams& p, const DerivedConstants& d);

double ground_state_energy(const ModelParams& p, Exec exec = Exec::parallel);

}  // namespace mattis
