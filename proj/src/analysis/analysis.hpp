#ifndef USBP_ANALYSIS_ANALYSIS_HPP
#define USBP_ANALYSIS_ANALYSIS_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "operators/usbp_pair.hpp"
#include "semidisc/mesh.hpp"

namespace usbp {

using RhsFn = std::function<void(const Eigen::VectorXd&, double, Eigen::VectorXd&)>;

/// Discrete L2 norm of (u - exact) with the P-quadrature on a uniform 1D
/// mesh: sqrt( sum_j h/2 sum_n p_n |diff|^2 ), summed over the leading
/// num_variables blocks of the state layout.
double l2_error_p(const Eigen::VectorXd& u, const Eigen::VectorXd& exact,
                  const Mesh1D& mesh, const Eigen::VectorXd& weights,
                  int num_variables = 1);

/// Dense matrix A with rhs(u) = A u, assembled from unit-vector probes at
/// t = 0; exact for linear right-hand sides. Throws invalid_argument when a
/// random probe reveals a nonlinear rhs (residual above 1e-10 * scale).
Eigen::MatrixXd assemble_linear_operator(const RhsFn& rhs, int dof);

/// Central-difference Jacobian d rhs / d u at the given state; exact up to
/// roundoff for quadratic fluxes.
Eigen::MatrixXd jacobian_fd(const RhsFn& rhs, const Eigen::VectorXd& state, double step);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  double max_real_part = 0.0;
  double spectral_radius = 0.0;
};

SpectrumReport eigenvalues(const Eigen::MatrixXd& matrix);

/// Largest singular value (matrix 2-norm).
double spectral_norm(const Eigen::MatrixXd& matrix);

struct ConvergenceRow {
  int elements = 0;
  double l2_error = 0.0;
  double eoc = 0.0;  // NaN on the first row
};

/// EOC = log(err_prev/err)/log(J/J_prev) per consecutive pair.
std::vector<ConvergenceRow> eoc_table(const std::vector<int>& elements,
                                      const std::vector<double>& errors);

}  // namespace usbp

#endif
