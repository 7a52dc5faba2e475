#ifndef USBP_OPERATORS_DOP_HPP
#define USBP_OPERATORS_DOP_HPP

#include <Eigen/Dense>

#include "operators/node_sets.hpp"

namespace usbp {

/// Discrete orthogonal polynomial basis: column k of V holds the nodal values
/// of the degree-(k-1) DOP, orthonormal in the unweighted Euclidean inner
/// product. Sign convention: each column's last (nonzero) entry is >= 0.
struct DopBasis {
  NodeSet nodes;
  Eigen::MatrixXd V;
};

/// Modified Gram-Schmidt on the monomial nodal Vandermonde, one
/// re-orthogonalization pass. Throws invalid_argument for duplicate nodes and
/// ConstructionError when ||V^T V - I||_max > 1e-10.
DopBasis dop_basis(const NodeSet& nodes);

/// Eigenvalue prescription for the dissipation matrix: lambda_k = 0 for
/// k <= degree+1, lambda_k <= 0 for the rest.
struct DissipationSpec {
  Eigen::VectorXd eigenvalues;
  int degree = 0;

  /// All free eigenvalues zero except the top mode.
  static DissipationSpec top_mode(int n, double lambda_top);
  /// Zeros up to degree+1, constant value for the rest.
  static DissipationSpec uniform(int n, int degree, double lambda);

  void validate() const;
};

/// S = V diag(lambda) V^T: symmetric, negative semi-definite, annihilates
/// nodal polynomials up to spec.degree.
Eigen::MatrixXd dissipation_matrix(const DopBasis& basis, const DissipationSpec& spec);

}  // namespace usbp

#endif
