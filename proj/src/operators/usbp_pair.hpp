#ifndef USBP_OPERATORS_USBP_PAIR_HPP
#define USBP_OPERATORS_USBP_PAIR_HPP

#include <Eigen/Dense>

#include "operators/dop.hpp"
#include "operators/sbp.hpp"

namespace usbp {

/// Upwind SBP pair: D± = P^{-1}(Q± + B/2) with Q± = Q ± S/2, sharing the base
/// operator's norm and boundary matrices. D+ - D- = P^{-1} S is the built-in
/// dissipation acting only on modes outside P_degree.
struct UsbpPair {
  SbpOperator base;
  Eigen::MatrixXd S;
  Eigen::MatrixXd Dplus;
  Eigen::MatrixXd Dminus;
  Eigen::MatrixXd Qplus;
  Eigen::MatrixXd Qminus;
  int degree = 0;

  int size() const { return base.size(); }
  const Eigen::VectorXd& nodes() const { return base.nodes.nodes; }
  const Eigen::VectorXd& weights() const { return base.nodes.weights; }
};

/// D± = D ± P^{-1} S / 2, Q± = Q ± S/2. Throws invalid_argument when S fails
/// symmetry or negative semi-definiteness (eigenvalues of (S+S^T)/2 <= 1e-12),
/// or when the base degree is below the target degree.
UsbpPair build_usbp(const SbpOperator& base, const Eigen::MatrixXd& S, int target_degree);

/// LGL pair with all dissipation on the top DOP mode (the configuration the
/// experiments sweep): degree n-2 for nonzero lambda_top, n-1 for zero.
UsbpPair make_lgl_usbp(int n, double lambda_top);

/// Pair built from an arbitrary eigenvalue prescription on a quadrature node set.
UsbpPair make_usbp(const NodeSet& nodes, const DissipationSpec& spec);

}  // namespace usbp

#endif
