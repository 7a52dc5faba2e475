#include "operators/sbp.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

bool SbpOperator::diagonal_norm() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && P(i, j) != 0.0) return false;
  return true;
}

Eigen::VectorXd SbpOperator::apply_norm_inverse(const Eigen::VectorXd& v) const {
  if (diagonal_norm()) return v.cwiseQuotient(P.diagonal());
  return P.ldlt().solve(v);
}

Eigen::VectorXd lagrange_values(const Eigen::VectorXd& nodes, double point) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd values = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (k != j) values[j] *= (point - nodes[k]) / (nodes[j] - nodes[k]);
  return values;
}

Eigen::MatrixXd lagrange_derivative_matrix(const Eigen::VectorXd& nodes) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd bary = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k)
      if (k != j) bary[j] *= (nodes[j] - nodes[k]);
    bary[j] = 1.0 / bary[j];
  }
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = (bary[j] / bary[i]) / (nodes[i] - nodes[j]);
      diag -= d(i, j);
    }
    d(i, i) = diag;
  }
  return d;
}

SbpOperator lagrange_sbp(const NodeSet& nodes) {
  if (!nodes.has_weights())
    throw std::invalid_argument("lagrange_sbp: node set carries no quadrature weights");
  nodes.validate();
  const int n = nodes.size();

  SbpOperator op;
  op.nodes = nodes;
  op.degree = n - 1;
  op.D = lagrange_derivative_matrix(nodes.nodes);
  op.P = nodes.weights.asDiagonal();

  if (nodes.includes_boundary) {
    op.B = Eigen::MatrixXd::Zero(n, n);
    op.B(0, 0) = -1.0;
    op.B(n - 1, n - 1) = 1.0;
  } else {
    const Eigen::VectorXd t_left = lagrange_values(nodes.nodes, nodes.x_left);
    const Eigen::VectorXd t_right = lagrange_values(nodes.nodes, nodes.x_right);
    op.B = t_right * t_right.transpose() - t_left * t_left.transpose();
  }
  op.Q = op.P * op.D - 0.5 * op.B;

  const double residual = (op.Q + op.Q.transpose()).cwiseAbs().maxCoeff();
  if (residual > 1e-10)
    throw ConstructionError("lagrange_sbp: SBP identity residual " +
                            std::to_string(residual) + " above 1e-10");
  return op;
}

SbpOperator dense_norm_sbp_4pt() {
  SbpOperator op;
  op.nodes = equidistant_nodes(4, 0.0, 3.0);
  op.degree = 3;
  op.P.resize(4, 4);
  op.P << 2, 1, 0, 0,
          1, 10, -2, 0,
          0, -2, 10, 1,
          0, 0, 1, 2;
  op.P /= 8.0;
  op.D.resize(4, 4);
  op.D << -11, 18, -9, 2,
          -2, -3, 6, -1,
          1, -6, 3, 2,
          -2, 9, -18, 11;
  op.D /= 6.0;
  op.B = Eigen::MatrixXd::Zero(4, 4);
  op.B(0, 0) = -1.0;
  op.B(3, 3) = 1.0;
  op.Q = op.P * op.D - 0.5 * op.B;
  return op;
}

}  // namespace usbp
