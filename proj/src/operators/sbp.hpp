#ifndef USBP_OPERATORS_SBP_HPP
#define USBP_OPERATORS_SBP_HPP

#include <Eigen/Dense>

#include "operators/node_sets.hpp"

namespace usbp {

/// Classical summation-by-parts bundle: D = P^{-1}(Q + B/2) with SPD norm P,
/// antisymmetric Q, and boundary matrix B exact for the operator degree.
struct SbpOperator {
  NodeSet nodes;
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd B;
  Eigen::MatrixXd D;
  int degree = 0;

  int size() const { return nodes.size(); }
  bool diagonal_norm() const;
  /// P^{-1} v without forming the inverse.
  Eigen::VectorXd apply_norm_inverse(const Eigen::VectorXd& v) const;
};

/// Lagrange basis values at an evaluation point.
Eigen::VectorXd lagrange_values(const Eigen::VectorXd& nodes, double point);

/// Collocation derivative matrix of the Lagrange basis (barycentric form).
Eigen::MatrixXd lagrange_derivative_matrix(const Eigen::VectorXd& nodes);

/// Degree N-1 SBP operator from Lagrange collocation on a quadrature node
/// set. P = diag(weights); B = t_R t_R^T - t_L t_L^T from the boundary values
/// of the Lagrange basis, which reduces to diag(-1,0,...,0,1) when the
/// endpoints are grid points. Throws invalid_argument when weights are
/// missing and ConstructionError when the SBP identity residual exceeds 1e-10.
SbpOperator lagrange_sbp(const NodeSet& nodes);

/// Hard-coded degree-3 dense-norm operator on four equidistant points
/// (unit spacing; the norm matrix P is non-diagonal).
SbpOperator dense_norm_sbp_4pt();

}  // namespace usbp

#endif
