#include "operators/verify.hpp"

#include <cmath>
#include <sstream>

namespace usbp {

namespace {

// nodes mapped to [-1,1] to control monomial conditioning
Eigen::VectorXd reference_coords(const NodeSet& nodes) {
  const double a = nodes.x_left, b = nodes.x_right;
  return (2.0 * nodes.nodes.array() - a - b) / (b - a);
}

Eigen::VectorXd monomial(const Eigen::VectorXd& t, int k) {
  return t.array().pow(k).matrix();
}

}  // namespace

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << " (exactness degree " << exactness_degree << ")\n";
  for (const auto& c : checks) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.name << ": residual "
        << c.residual << " (tol " << c.tolerance << ")\n";
  }
  return out.str();
}

VerificationReport verify_usbp(const UsbpPair& pair) {
  VerificationReport report;
  const SbpOperator& base = pair.base;
  const int n = pair.size();
  const Eigen::VectorXd t = reference_coords(base.nodes);
  const double chain = 2.0 / (base.nodes.x_right - base.nodes.x_left);

  auto add = [&report](const std::string& name, double residual, double tol) {
    report.checks.push_back({name, residual, tol, residual <= tol});
  };

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> peig(0.5 * (base.P + base.P.transpose()));
  add("P symmetric", (base.P - base.P.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  add("P positive definite (min eig > 0)", -peig.eigenvalues().minCoeff(), 0.0);

  const Eigen::MatrixXd d_from_parts =
      base.P.ldlt().solve((base.Q + 0.5 * base.B).eval());
  add("D = P^-1 (Q + B/2)", (base.D - d_from_parts).cwiseAbs().maxCoeff(), 1e-12);
  add("Q + Q^T = 0", (base.Q + base.Q.transpose()).cwiseAbs().maxCoeff(), 1e-12);

  double d_exact = 0.0;
  for (int k = 0; k <= base.degree; ++k) {
    const Eigen::VectorXd deriv =
        (k == 0) ? Eigen::VectorXd::Zero(n).eval()
                 : (k * chain * monomial(t, k - 1)).eval();
    d_exact = std::max(d_exact, (base.D * monomial(t, k) - deriv).cwiseAbs().maxCoeff());
  }
  add("D exact to base degree", d_exact, 1e-11);

  double b_exact = 0.0;
  for (int j = 0; j <= pair.degree; ++j) {
    for (int k = 0; k <= pair.degree; ++k) {
      const double boundary = std::pow(1.0, j + k) - std::pow(-1.0, j + k);
      const double discrete = monomial(t, j).dot(base.B * monomial(t, k));
      b_exact = std::max(b_exact, std::abs(discrete - boundary));
    }
  }
  add("B boundary exactness", b_exact, 1e-11);

  add("S symmetric", (pair.S - pair.S.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> seig(0.5 * (pair.S + pair.S.transpose()));
  add("S negative semi-definite", seig.eigenvalues().maxCoeff(), 1e-12);

  double s_annihilates = 0.0;
  for (int k = 0; k <= pair.degree; ++k)
    s_annihilates = std::max(s_annihilates, (pair.S * monomial(t, k)).cwiseAbs().maxCoeff());
  add("S f = 0 for f up to pair degree", s_annihilates, 1e-11);

  add("Q+ + Q-^T = 0", (pair.Qplus + pair.Qminus.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  add("Q+ + Q+^T = S",
      (pair.Qplus + pair.Qplus.transpose() - pair.S).cwiseAbs().maxCoeff(), 1e-12);

  Eigen::MatrixXd pinv_s(n, n);
  for (int c = 0; c < n; ++c) pinv_s.col(c) = base.apply_norm_inverse(pair.S.col(c));
  add("D+ = D- + P^-1 S", (pair.Dplus - pair.Dminus - pinv_s).cwiseAbs().maxCoeff(), 1e-12);
  add("(D+ + D-)/2 = D",
      (0.5 * (pair.Dplus + pair.Dminus) - base.D).cwiseAbs().maxCoeff(), 1e-12);

  double pm_exact = 0.0;
  for (int k = 0; k <= pair.degree; ++k) {
    const Eigen::VectorXd deriv =
        (k == 0) ? Eigen::VectorXd::Zero(n).eval()
                 : (k * chain * monomial(t, k - 1)).eval();
    pm_exact = std::max(pm_exact, (pair.Dplus * monomial(t, k) - deriv).cwiseAbs().maxCoeff());
    pm_exact = std::max(pm_exact, (pair.Dminus * monomial(t, k) - deriv).cwiseAbs().maxCoeff());
  }
  add("D± exact to pair degree", pm_exact, 1e-11);

  report.exactness_degree = -1;
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXd deriv =
        (k == 0) ? Eigen::VectorXd::Zero(n).eval()
                 : (k * chain * monomial(t, k - 1)).eval();
    const double res =
        std::max((pair.Dplus * monomial(t, k) - deriv).cwiseAbs().maxCoeff(),
                 (pair.Dminus * monomial(t, k) - deriv).cwiseAbs().maxCoeff());
    if (res < 1e-9)
      report.exactness_degree = k;
    else
      break;
  }

  report.pass = true;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

}  // namespace usbp
