#ifndef USBP_SEMIDISC_SCALAR1D_HPP
#define USBP_SEMIDISC_SCALAR1D_HPP

#include <functional>

#include <Eigen/Dense>

#include "operators/usbp_pair.hpp"
#include "semidisc/mesh.hpp"

namespace usbp {

/// Periodic DG-USBP semi-discretization of d_t u + d_x u = 0 with the
/// Lax-Friedrichs splitting f± = (u ± lambda_max u)/2 (lambda_max = 1 makes
/// f- vanish). State layout: u[j*N + n], element-major.
class AdvectionUsbp1D {
 public:
  AdvectionUsbp1D(UsbpPair op, Mesh1D mesh, double lambda_max = 1.0);

  int dof() const { return mesh_.num_elements * op_.size(); }
  const UsbpPair& op() const { return op_; }
  const Mesh1D& mesh() const { return mesh_; }

  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  Eigen::VectorXd sample(const std::function<double(double)>& f) const;

 private:
  UsbpPair op_;
  Mesh1D mesh_;
  double lambda_max_;
};

/// Comparison scheme: central SBP operator with a local Lax-Friedrichs
/// (Rusanov) interface flux in SAT form, periodic advection.
class BaselineAdvection1D {
 public:
  BaselineAdvection1D(SbpOperator op, Mesh1D mesh);

  int dof() const { return mesh_.num_elements * op_.size(); }
  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  Eigen::VectorXd sample(const std::function<double(double)>& f) const;
  const Mesh1D& mesh() const { return mesh_; }
  const SbpOperator& op() const { return op_; }

 private:
  SbpOperator op_;
  Mesh1D mesh_;
};

/// Full-upwind Burgers scheme: d_t u + D- f(u) with f = u^2/2 and
/// upwind-only (left face) SATs; intended for nonnegative states.
class BurgersFullUpwind1D {
 public:
  BurgersFullUpwind1D(UsbpPair op, Mesh1D mesh);

  int dof() const { return mesh_.num_elements * op_.size(); }
  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  const UsbpPair& op() const { return op_; }

 private:
  UsbpPair op_;
  Mesh1D mesh_;
};

}  // namespace usbp

#endif
