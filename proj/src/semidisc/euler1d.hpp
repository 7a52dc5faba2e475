#ifndef USBP_SEMIDISC_EULER1D_HPP
#define USBP_SEMIDISC_EULER1D_HPP

#include <functional>

#include <Eigen/Dense>

#include "operators/usbp_pair.hpp"
#include "physics/splittings.hpp"
#include "semidisc/mesh.hpp"

namespace usbp {

/// Periodic 1D DG-USBP semi-discretization of the compressible Euler
/// equations with a flux vector splitting, optionally driven by the
/// manufactured source. State layout: u[v*J*N + j*N + n], variable-major.
class EulerUsbp1D {
 public:
  EulerUsbp1D(UsbpPair op, Mesh1D mesh, SplittingKind splitting,
              bool manufactured_source = false, double lambda_max = 0.0);

  int dof() const { return 3 * mesh_.num_elements * op_.size(); }
  const UsbpPair& op() const { return op_; }
  const Mesh1D& mesh() const { return mesh_; }

  /// Throws SimulationAbort with element/node location on inadmissible states.
  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  bool admissible(const Eigen::VectorXd& u, int* element, int* node) const;
  Eigen::VectorXd sample(const std::function<Vec3(double)>& state) const;
  double node_coordinate(int j, int n) const { return mesh_.node(j, op_.nodes()[n]); }

 private:
  UsbpPair op_;
  Mesh1D mesh_;
  SplittingKind splitting_;
  bool manufactured_source_;
  double lambda_max_;
};

/// Central-SBP + local Lax-Friedrichs (Rusanov) comparison scheme for the
/// same problem.
class BaselineEuler1D {
 public:
  BaselineEuler1D(SbpOperator op, Mesh1D mesh, bool manufactured_source = false);

  int dof() const { return 3 * mesh_.num_elements * op_.size(); }
  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  bool admissible(const Eigen::VectorXd& u, int* element, int* node) const;
  Eigen::VectorXd sample(const std::function<Vec3(double)>& state) const;
  const SbpOperator& op() const { return op_; }

 private:
  SbpOperator op_;
  Mesh1D mesh_;
  bool manufactured_source_;
};

}  // namespace usbp

#endif
