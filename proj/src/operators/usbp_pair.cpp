#include "operators/usbp_pair.hpp"

#include <stdexcept>

namespace usbp {

UsbpPair build_usbp(const SbpOperator& base, const Eigen::MatrixXd& S, int target_degree) {
  const int n = base.size();
  if (S.rows() != n || S.cols() != n)
    throw std::invalid_argument("build_usbp: S has wrong dimensions");
  if (target_degree < 0 || target_degree > base.degree)
    throw std::invalid_argument("build_usbp: need 0 <= target_degree <= base degree");
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("build_usbp: S is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (S + S.transpose()));
  if (eig.eigenvalues().maxCoeff() > 1e-12)
    throw std::invalid_argument("build_usbp: S is not negative semi-definite");

  UsbpPair pair;
  pair.base = base;
  pair.S = S;
  pair.degree = target_degree;
  pair.Qplus = base.Q + 0.5 * S;
  pair.Qminus = base.Q - 0.5 * S;
  Eigen::MatrixXd PinvS;
  if (base.diagonal_norm())
    PinvS = base.P.diagonal().cwiseInverse().asDiagonal() * S;
  else
    PinvS = base.P.ldlt().solve(S);
  pair.Dplus = base.D + 0.5 * PinvS;
  pair.Dminus = base.D - 0.5 * PinvS;
  return pair;
}

UsbpPair make_lgl_usbp(int n, double lambda_top) {
  const NodeSet nodes = lgl_nodes(n);
  const SbpOperator base = lagrange_sbp(nodes);
  const DopBasis basis = dop_basis(nodes);
  const DissipationSpec spec = DissipationSpec::top_mode(n, lambda_top);
  const Eigen::MatrixXd S = dissipation_matrix(basis, spec);
  const int degree = (lambda_top == 0.0) ? n - 1 : n - 2;
  return build_usbp(base, S, degree);
}

UsbpPair make_usbp(const NodeSet& nodes, const DissipationSpec& spec) {
  const SbpOperator base = lagrange_sbp(nodes);
  const DopBasis basis = dop_basis(nodes);
  const Eigen::MatrixXd S = dissipation_matrix(basis, spec);
  return build_usbp(base, S, spec.degree);
}

}  // namespace usbp
