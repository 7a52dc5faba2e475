#ifndef USBP_SEMIDISC_EULER2D_HPP
#define USBP_SEMIDISC_EULER2D_HPP

#include <functional>

#include <Eigen/Dense>

#include "operators/usbp_pair.hpp"
#include "physics/splittings.hpp"
#include "semidisc/mesh.hpp"

namespace usbp {

/// Rectangular periodic domain with uniform elements for the tensor-product
/// schemes. 2D state layout: u[v*T + e*N^2 + a + N*b] with T = Jx*Jy*N^2,
/// e = ex*Jy + ey, a the xi node index and b the eta node index.
struct Box2D {
  double x_min = -1.0, x_max = 1.0;
  double y_min = -1.0, y_max = 1.0;
  int jx = 1, jy = 1;

  double hx() const { return (x_max - x_min) / jx; }
  double hy() const { return (y_max - y_min) / jy; }
  double node_x(int ex, double xi) const { return x_min + ex * hx() + 0.5 * hx() * (xi + 1.0); }
  double node_y(int ey, double eta) const { return y_min + ey * hy() + 0.5 * hy() * (eta + 1.0); }
};

/// Tensor-product DG-USBP semi-discretization of the 2D Euler equations on a
/// periodic Cartesian box: dimension-by-dimension splitting of f1 and f2 with
/// SATs on all four faces.
class EulerCartesian2D {
 public:
  EulerCartesian2D(UsbpPair op, Box2D box, SplittingKind splitting,
                   double lambda_lf = 0.0);

  int nodes_per_element() const { return op_.size() * op_.size(); }
  int total_nodes() const { return box_.jx * box_.jy * nodes_per_element(); }
  int dof() const { return 4 * total_nodes(); }
  const UsbpPair& op() const { return op_; }
  const Box2D& box() const { return box_; }

  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  bool admissible(const Eigen::VectorXd& u, int* element, int* node) const;
  Eigen::VectorXd sample(const std::function<Vec4(double, double)>& state) const;
  /// Quadrature of 0.5 rho |v|^2 with the P-weights over the box.
  double kinetic_energy(const Eigen::VectorXd& u) const;
  /// P-weighted L2 error against a reference field; density_only restricts to
  /// the first conserved variable.
  double l2_error(const Eigen::VectorXd& u,
                  const std::function<Vec4(double, double)>& exact,
                  bool density_only) const;

 private:
  UsbpPair op_;
  Box2D box_;
  SplittingKind splitting_;
  double lambda_lf_;
};

/// Central-SBP volume terms with a local Lax-Friedrichs (Rusanov) interface
/// flux; the comparison scheme for the 2D experiments.
class BaselineEulerCartesian2D {
 public:
  BaselineEulerCartesian2D(SbpOperator op, Box2D box);

  int dof() const { return 4 * box_.jx * box_.jy * op_.size() * op_.size(); }
  const SbpOperator& op() const { return op_; }

  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  bool admissible(const Eigen::VectorXd& u, int* element, int* node) const;
  Eigen::VectorXd sample(const std::function<Vec4(double, double)>& state) const;
  double l2_error(const Eigen::VectorXd& u,
                  const std::function<Vec4(double, double)>& exact,
                  bool density_only) const;

 private:
  Box2D box_;
  SbpOperator op_;
};

}  // namespace usbp

#endif
