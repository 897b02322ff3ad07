#pragma once

#include <Eigen/Dense>

#include "mattis/model.hpp"

namespace mattis {

// h = P^T A P + Z^T B Z + Z^T K + K^T Z with A, B symmetric positive definite.
struct QuadraticForm {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::VectorXd K;

  QuadraticForm(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::VectorXd k);
  Eigen::Index size() const { return A.rows(); }
};

struct DiagResult {
  Eigen::VectorXd lambda;  // eigenvalues of C^{1/2}, descending
  Eigen::MatrixXd U;       // orthonormal eigenvectors of C as columns
  Eigen::VectorXd shift;   // B^{-1} K
  double ground_shift;     // -K^T B^{-1} K
  Eigen::VectorXd mu;      // tanh(mu_m) = (lambda_m - lambda0_m) / (lambda_m + lambda0_m)
};

DiagResult diagonalize(const QuadraticForm& q, const Eigen::VectorXd& lambda0);

struct MattisBlock {
  QuadraticForm form;
  Eigen::VectorXd lambda0;
  // Branch label (+1 or -1) of each row; a 1x1 block on an axis keeps only the branch s with p_s != 0.
  Eigen::VectorXi branch;
};

// Per-momentum block. K holds -gamma2 p_s chi on axis momenta; the factor i (2 pi / L) Q_hat is factored out.
MattisBlock mattis_block(const Momentum2& q, const ModelParams& p);

}  // namespace mattis
