#pragma once

#include <complex>
#include <map>
#include <tuple>
#include <vector>

#include "mattis/extrapolate.hpp"
#include "mattis/klein.hpp"
#include "mattis/model.hpp"

namespace mattis {

// One field psi^q_{r,s}(x, t); x = (x_+, x_-) with x_{-s} on the a-lattice.
struct Insertion {
  int q;
  int r;
  int s;
  double x_plus;
  double x_minus;
  cplx t;
};

enum class CorrelatorMode { finite_L, ir_limit };

struct CorrelatorQuery {
  std::vector<Insertion> insertions;
  double epsilon;
  double beta;
  CorrelatorMode mode = CorrelatorMode::finite_L;
};

// Real t, or t = -i tau with 0 <= tau <= beta.
void require_admissible_time(cplx t, double beta);

// ln G_{r1,s1,r2,s2}(x, t; eps) as a finite-lattice momentum sum.
cplx ln_G(const ModelParams& p, double beta, FlavorIndex f1, FlavorIndex f2, double x_plus, double x_minus, cplx t,
          double epsilon, Exec exec = Exec::parallel);

// Klein factor VEV x prod g^{-1/2} x prod_{j<k} G^{-q_j q_k}. ir_limit extrapolates the finite-L
// value in 1/L over l_over_a, 2 l_over_a + 1, 4 l_over_a + 3, 8 l_over_a + 7.
cplx fermion_npoint(const CorrelatorQuery& q, const ModelParams& p, Exec exec = Exec::parallel);

// The ir_limit value together with its extrapolation error.
Extrapolated fermion_npoint_ir(const CorrelatorQuery& q, const ModelParams& p, Exec exec = Exec::parallel);

// Sizes used by the ir_limit extrapolation.
std::vector<std::int64_t> ir_sizes(std::int64_t l_over_a);

struct DensityInsertion {
  int r;
  int s;
  double x_plus;
  double x_minus;
  cplx t;
};

// <J_{r1,s1}(x1,t1) J_{r2,s2}(x2,t2)> without the O(1/L) zero-mode part.
cplx density_two_point(const ModelParams& p, double beta, const DensityInsertion& a, const DensityInsertion& b,
                       double epsilon, CorrelatorMode mode = CorrelatorMode::finite_L, Exec exec = Exec::parallel);

// Leading-order L^-2 <N_{r1,s1}(x1) N_{r2,s2}(x2)> of the zero modes; x are site indices.
double zero_mode_nn(const ModelParams& p, double beta, int r1, int s1, std::int64_t x1, int r2, int s2,
                    std::int64_t x2);

// (r, s, site) -> m_{r,s}(x)
using ZeroModeSource = std::map<std::tuple<int, int, std::int64_t>, double>;

// Gaussian closed form of < exp((i/L) sum m N) > over the zero modes.
double zero_mode_generating(const ModelParams& p, double beta, const ZeroModeSource& m);

// The same expectation by exact theta sums (small l_over_a only).
double zero_mode_generating_exact(const ModelParams& p, double beta, const ZeroModeSource& m);

}  // namespace mattis
