#include "mattis/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace mattis {

namespace {

void require_spd(const Eigen::MatrixXd& m, const char* name) {
  if (m.rows() != m.cols() || m.rows() == 0) throw invalid_input(std::string(name) + " must be square and non-empty");
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw invalid_input(std::string(name) + " must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw non_convergence(std::string(name) + ": eigensolver failed", 0);
  if (!(es.eigenvalues().minCoeff() > 0)) throw invalid_input(std::string(name) + " must be positive definite");
}

}  // namespace

QuadraticForm::QuadraticForm(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::VectorXd k)
    : A(std::move(a)), B(std::move(b)), K(std::move(k)) {
  require_spd(A, "A");
  require_spd(B, "B");
  if (B.rows() != A.rows() || K.size() != A.rows()) throw invalid_input("A, B, K dimensions differ");
}

DiagResult diagonalize(const QuadraticForm& q, const Eigen::VectorXd& lambda0) {
  const Eigen::Index n = q.size();
  if (lambda0.size() != n || !(lambda0.array() > 0).all()) throw invalid_input("lambda0 must be positive, one per mode");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(q.A);
  if (ea.info() != Eigen::Success) throw non_convergence("eigensolver failed on A", 0);
  Eigen::MatrixXd a_half = ea.eigenvectors() * ea.eigenvalues().cwiseSqrt().asDiagonal() * ea.eigenvectors().transpose();
  Eigen::MatrixXd c = a_half * q.B * a_half;
  c = 0.5 * (c + c.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ec(c);
  if (ec.info() != Eigen::Success) throw non_convergence("eigensolver failed on C", 0);
  Eigen::VectorXd ev = ec.eigenvalues();
  Eigen::MatrixXd vec = ec.eigenvectors();
  if (!(ev.array() > 0).all()) throw non_convergence("C has a non-positive eigenvalue", ev.minCoeff());

  std::vector<Eigen::Index> argmax(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index i = 0;
    vec.col(j).cwiseAbs().maxCoeff(&i);
    argmax[j] = i;
    if (vec(i, j) < 0) vec.col(j) *= -1;
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  double tie = 1e-12 * ev.cwiseAbs().maxCoeff();
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (std::abs(ev(a) - ev(b)) > tie) return ev(a) > ev(b);
    return argmax[a] < argmax[b];
  });

  DiagResult r;
  r.lambda.resize(n);
  r.U.resize(n, n);
  r.mu.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    r.lambda(j) = std::sqrt(ev(order[j]));
    r.U.col(j) = vec.col(order[j]);
    r.mu(j) = std::atanh((r.lambda(j) - lambda0(j)) / (r.lambda(j) + lambda0(j)));
  }
  r.shift = q.B.llt().solve(q.K);
  r.ground_shift = -q.K.dot(r.shift);
  return r;
}

MattisBlock mattis_block(const Momentum2& q, const ModelParams& p) {
  require_valid(p);
  if (q.plus == 0 && q.minus == 0) throw invalid_input("mattis_block requires p != 0");
  const double x = chi(q, p);
  const double g1 = p.gamma1 * x;
  const double g2 = p.gamma2 * x;
  if (q.plus == 0 || q.minus == 0) {
    int s = q.plus != 0 ? 1 : -1;
    double ps = q[s];
    Eigen::MatrixXd a(1, 1), b(1, 1);
    a(0, 0) = 1 - g1;
    b(0, 0) = (1 + g1) * ps * ps;
    Eigen::VectorXd k(1);
    k(0) = -g2 * ps;
    Eigen::VectorXd l0(1);
    l0(0) = std::abs(ps);
    Eigen::VectorXi br(1);
    br(0) = s;
    return {QuadraticForm(a, b, k), l0, br};
  }
  Eigen::MatrixXd a = (1 - g1) * Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd b(2, 2);
  b(0, 0) = (1 + g1) * q.plus * q.plus;
  b(1, 1) = (1 + g1) * q.minus * q.minus;
  b(0, 1) = b(1, 0) = g2 * q.plus * q.minus;
  Eigen::VectorXd l0(2);
  l0 << std::abs(q.plus), std::abs(q.minus);
  Eigen::VectorXi br(2);
  br << 1, -1;
  return {QuadraticForm(a, b, Eigen::VectorXd::Zero(2)), l0, br};
}

}  // namespace mattis
