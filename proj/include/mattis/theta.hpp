#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace mattis {

// Z = sum over integer nu of exp(-nu^T H nu + i m^T nu).
struct ThetaSumSpec {
  Eigen::MatrixXd H;
  Eigen::VectorXd m;
  double lambda;  // min eigenvalue of H^{-1}
  double mu;      // max_k |(H^{-1} m)_k|

  ThetaSumSpec(Eigen::MatrixXd h, Eigen::VectorXd phase);
  explicit ThetaSumSpec(Eigen::MatrixXd h) : ThetaSumSpec(h, Eigen::VectorXd::Zero(h.rows())) {}
  Eigen::Index dim() const { return H.rows(); }
  bool bound_applies() const;
};

enum class ThetaMode { exact, gaussian };

struct ThetaResult {
  double log_Z;
  double log_J;
  double ratio_minus_one;  // Z/J - 1
  double bound;            // upper bound on Z/J - 1; NaN when the preconditions fail
  bool preconditions_met;
  std::int64_t points;     // lattice points visited (exact mode)
};

// log of the Gaussian integral sqrt(pi^M / det H) exp(-m^T H^{-1} m / 4)
double theta_log_gaussian(const ThetaSumSpec& spec);

// (1 + 2 (e^{-lambda pi^2 + mu pi} + e^{mu^2 / (4 lambda)} e^{-lambda pi^2} / (1 - e^{-3 lambda pi^2})))^M - 1
double theta_bound(const ThetaSumSpec& spec);

// Exact mode enumerates the ellipsoid nu^T H nu <= R, growing R until the outermost shell
// contributes less than 1e-14 of the total. Throws non_convergence past max_points.
ThetaResult theta_sum(const ThetaSumSpec& spec, ThetaMode mode, std::int64_t max_points = 400'000'000);

}  // namespace mattis
