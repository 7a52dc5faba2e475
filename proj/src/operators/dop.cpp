#include "operators/dop.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

DopBasis dop_basis(const NodeSet& nodes) {
  const int n = nodes.size();
  for (int i = 1; i < n; ++i)
    if (!(nodes.nodes[i] > nodes.nodes[i - 1]))
      throw std::invalid_argument("dop_basis: nodes must be distinct and increasing");

  Eigen::MatrixXd v(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      v(i, k) = std::pow(nodes.nodes[i], k);

  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < k; ++j)
        v.col(k) -= v.col(j).dot(v.col(k)) * v.col(j);
      const double norm = v.col(k).norm();
      if (norm < 1e-14)
        throw ConstructionError("dop_basis: rank deficiency in Gram-Schmidt");
      v.col(k) /= norm;
    }
  }

  for (int k = 0; k < n; ++k) {
    int pivot = n - 1;
    while (pivot > 0 && std::abs(v(pivot, k)) < 1e-13) --pivot;
    if (v(pivot, k) < 0.0) v.col(k) = -v.col(k);
  }

  const double ortho =
      (v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (ortho > 1e-10)
    throw ConstructionError("dop_basis: loss of orthogonality, ||V'V - I|| = " +
                            std::to_string(ortho));
  return DopBasis{nodes, v};
}

DissipationSpec DissipationSpec::top_mode(int n, double lambda_top) {
  DissipationSpec spec;
  spec.eigenvalues = Eigen::VectorXd::Zero(n);
  spec.eigenvalues[n - 1] = lambda_top;
  spec.degree = n - 2;
  spec.validate();
  return spec;
}

DissipationSpec DissipationSpec::uniform(int n, int degree, double lambda) {
  DissipationSpec spec;
  spec.eigenvalues = Eigen::VectorXd::Zero(n);
  for (int k = degree + 1; k < n; ++k) spec.eigenvalues[k] = lambda;
  spec.degree = degree;
  spec.validate();
  return spec;
}

void DissipationSpec::validate() const {
  const int n = static_cast<int>(eigenvalues.size());
  if (degree < 0 || degree + 1 > n)
    throw std::invalid_argument("DissipationSpec: need 0 <= degree <= N-1");
  for (int k = 0; k <= degree; ++k)
    if (eigenvalues[k] != 0.0)
      throw std::invalid_argument("DissipationSpec: lambda_k must vanish for k <= degree+1");
  for (int k = degree + 1; k < n; ++k)
    if (eigenvalues[k] > 0.0)
      throw std::invalid_argument("DissipationSpec: positive eigenvalue supplied");
}

Eigen::MatrixXd dissipation_matrix(const DopBasis& basis, const DissipationSpec& spec) {
  if (spec.eigenvalues.size() != basis.V.rows())
    throw std::invalid_argument("dissipation_matrix: eigenvalue count != node count");
  spec.validate();
  Eigen::MatrixXd s = basis.V * spec.eigenvalues.asDiagonal() * basis.V.transpose();
  // exact symmetry despite roundoff in the triple product
  s = 0.5 * (s + s.transpose()).eval();
  return s;
}

}  // namespace usbp
