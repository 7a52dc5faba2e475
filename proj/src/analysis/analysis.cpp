#include "analysis/analysis.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace usbp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double l2_error_p(const VectorXd& u, const VectorXd& exact, const Mesh1D& mesh,
                  const VectorXd& weights, int num_variables) {
  if (u.size() != exact.size()) throw std::invalid_argument("l2_error_p: shape mismatch");
  const int n = static_cast<int>(weights.size());
  const int stride = mesh.num_elements * n;
  if (static_cast<long>(stride) * num_variables != u.size())
    throw std::invalid_argument("l2_error_p: state size inconsistent with mesh");
  const double half_h = 0.5 * mesh.element_width();
  double sum = 0.0;
  for (int v = 0; v < num_variables; ++v)
    for (int j = 0; j < mesh.num_elements; ++j)
      for (int i = 0; i < n; ++i) {
        const double d = u[v * stride + j * n + i] - exact[v * stride + j * n + i];
        sum += half_h * weights[i] * d * d;
      }
  return std::sqrt(sum);
}

MatrixXd assemble_linear_operator(const RhsFn& rhs, int dof) {
  MatrixXd a(dof, dof);
  VectorXd probe = VectorXd::Zero(dof);
  VectorXd column(dof);
  for (int i = 0; i < dof; ++i) {
    probe[i] = 1.0;
    rhs(probe, 0.0, column);
    a.col(i) = column;
    probe[i] = 0.0;
  }
  // reject nonlinear right-hand sides
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  VectorXd u(dof);
  for (int i = 0; i < dof; ++i) u[i] = dist(rng);
  rhs(u, 0.0, column);
  const double scale = column.cwiseAbs().maxCoeff() + 1.0;
  if (((a * u - column).cwiseAbs().maxCoeff()) > 1e-10 * scale)
    throw std::invalid_argument("assemble_linear_operator: rhs is not linear");
  return a;
}

MatrixXd jacobian_fd(const RhsFn& rhs, const VectorXd& state, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("jacobian_fd: step must be positive");
  const int dof = static_cast<int>(state.size());
  MatrixXd jac(dof, dof);
  VectorXd pert = state, fp(dof), fm(dof);
  for (int i = 0; i < dof; ++i) {
    pert[i] = state[i] + step;
    rhs(pert, 0.0, fp);
    pert[i] = state[i] - step;
    rhs(pert, 0.0, fm);
    pert[i] = state[i];
    jac.col(i) = (fp - fm) / (2.0 * step);
  }
  return jac;
}

SpectrumReport eigenvalues(const MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("eigenvalues: matrix must be square");
  Eigen::EigenSolver<MatrixXd> solver(matrix, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: eigensolver did not converge");
  SpectrumReport report;
  report.max_real_part = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    const std::complex<double> ev = solver.eigenvalues()[i];
    report.eigenvalues.push_back(ev);
    report.max_real_part = std::max(report.max_real_part, ev.real());
    report.spectral_radius = std::max(report.spectral_radius, std::abs(ev));
  }
  return report;
}

double spectral_norm(const MatrixXd& matrix) {
  return matrix.jacobiSvd().singularValues()[0];
}

std::vector<ConvergenceRow> eoc_table(const std::vector<int>& elements,
                                      const std::vector<double>& errors) {
  if (elements.size() != errors.size())
    throw std::invalid_argument("eoc_table: size mismatch");
  std::vector<ConvergenceRow> rows;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (errors[i] <= 0.0) throw std::invalid_argument("eoc_table: nonpositive error");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw std::invalid_argument("eoc_table: element counts must increase");
    ConvergenceRow row;
    row.elements = elements[i];
    row.l2_error = errors[i];
    row.eoc = (i == 0) ? std::numeric_limits<double>::quiet_NaN()
                       : std::log(errors[i - 1] / errors[i]) /
                             std::log(double(elements[i]) / elements[i - 1]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace usbp
