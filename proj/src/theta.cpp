#include "mattis/theta.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "mattis/params.hpp"

namespace mattis {

ThetaSumSpec::ThetaSumSpec(Eigen::MatrixXd h, Eigen::VectorXd phase) : H(std::move(h)), m(std::move(phase)) {
  if (H.rows() != H.cols() || H.rows() == 0) throw invalid_input("H must be square and non-empty");
  if (m.size() != H.rows()) throw invalid_input("phase vector has the wrong length");
  double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw invalid_input("H must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw non_convergence("eigensolver failed on H", 0);
  double top = es.eigenvalues().maxCoeff();
  if (!(es.eigenvalues().minCoeff() > 0)) throw invalid_input("H must be positive definite");
  lambda = 1.0 / top;
  mu = H.llt().solve(m).cwiseAbs().maxCoeff();
}

bool ThetaSumSpec::bound_applies() const { return lambda > 2.0 / (pi * pi) && mu <= 2 * pi * lambda; }

double theta_log_gaussian(const ThetaSumSpec& spec) {
  Eigen::LLT<Eigen::MatrixXd> llt(spec.H);
  double log_det = 2 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  double quad = spec.m.dot(llt.solve(spec.m));
  return 0.5 * static_cast<double>(spec.dim()) * std::log(pi) - 0.5 * log_det - 0.25 * quad;
}

double theta_bound(const ThetaSumSpec& spec) {
  if (!spec.bound_applies()) return std::numeric_limits<double>::quiet_NaN();
  double l = spec.lambda * pi * pi;
  double tail = std::exp(-l) / -std::expm1(-3 * l);
  double one = 2 * (std::exp(-l + spec.mu * pi) + std::exp(spec.mu * spec.mu / (4 * spec.lambda)) * tail);
  return std::expm1(static_cast<double>(spec.dim()) * std::log1p(one));
}

namespace {

struct Enumerator {
  Eigen::MatrixXd R;  // upper triangular, H = R^T R
  const Eigen::VectorXd& m;
  double radius;
  double shell;
  std::vector<double> nu;
  double total = 0;
  double outer = 0;
  std::int64_t points = 0;
  std::int64_t max_points;
  bool with_phase;

  void run(int i, double used, double phase) {
    double ri = R(i, i);
    double c = 0;
    for (Eigen::Index j = i + 1; j < R.cols(); ++j) c += R(i, j) * nu[j];
    double room = radius - used;
    if (room < 0) return;
    double w = std::sqrt(room);
    double lo = std::ceil((-c - w) / ri);
    double hi = std::floor((-c + w) / ri);
    for (double v = lo; v <= hi; ++v) {
      double t = ri * v + c;
      double q = used + t * t;
      if (q > radius) continue;
      nu[i] = v;
      double ph = with_phase ? phase + m(i) * v : 0;
      if (i == 0) {
        if (++points > max_points) throw non_convergence("theta sum exceeds the point budget", 0);
        double term = std::exp(-q) * (with_phase ? std::cos(ph) : 1.0);
        total += term;
        if (q > radius - shell) outer += std::abs(term);
      } else {
        run(i - 1, q, ph);
      }
    }
    nu[i] = 0;
  }
};

}  // namespace

ThetaResult theta_sum(const ThetaSumSpec& spec, ThetaMode mode, std::int64_t max_points) {
  ThetaResult res{};
  res.log_J = theta_log_gaussian(spec);
  res.preconditions_met = spec.bound_applies();
  res.bound = theta_bound(spec);
  if (mode == ThetaMode::gaussian) {
    if (!res.preconditions_met)
      throw invalid_input("gaussian theta mode requires lambda > 2/pi^2 and mu <= 2 pi lambda");
    res.log_Z = res.log_J;
    res.ratio_minus_one = 0;
    return res;
  }
  const Eigen::Index M = spec.dim();
  Enumerator e{Eigen::MatrixXd(spec.H.llt().matrixU()), spec.m, 0, 8.0, std::vector<double>(M, 0.0),
               0, 0, 0, max_points, spec.m.cwiseAbs().maxCoeff() > 0};
  double radius = 40;
  for (;;) {
    e.radius = radius;
    e.total = 0;
    e.outer = 0;
    e.points = 0;
    e.run(static_cast<int>(M - 1), 0.0, 0.0);
    if (e.outer < 1e-14 * std::abs(e.total)) break;
    radius += 16;
  }
  if (!(e.total > 0)) throw non_convergence("theta sum is not positive", e.outer);
  res.log_Z = std::log(e.total);
  res.ratio_minus_one = std::expm1(res.log_Z - res.log_J);
  res.points = e.points;
  return res;
}

}  // namespace mattis
