#ifndef USBP_SEMIDISC_CURVILINEAR2D_HPP
#define USBP_SEMIDISC_CURVILINEAR2D_HPP

#include <functional>

#include <Eigen/Dense>

#include "operators/usbp_pair.hpp"
#include "physics/splittings.hpp"
#include "semidisc/mesh.hpp"

namespace usbp {

enum class Boundary2D { Periodic, DirichletBackground };

/// Curvilinear DG-USBP semi-discretization: contravariant fluxes
/// ft1 = Y_eta f1 - X_eta f2 and ft2 = -Y_xi f1 + X_xi f2 are split per
/// direction and differentiated with D-/D+ from the left (xi) and right
/// (eta); the mapping Jacobian divides the result. SATs act in the normal
/// directions with the shared face metric vectors. State layout as in
/// EulerCartesian2D.
class EulerCurvilinear2D {
 public:
  EulerCurvilinear2D(UsbpPair op, CurvilinearMesh2D mesh, SplittingKind splitting,
                     double lambda_lf, Boundary2D boundary,
                     Vec4 background = Vec4::Zero());

  int nodes_per_element() const { return op_.size() * op_.size(); }
  int total_nodes() const { return mesh_.num_elements() * nodes_per_element(); }
  int dof() const { return 4 * total_nodes(); }
  const UsbpPair& op() const { return op_; }
  const CurvilinearMesh2D& mesh() const { return mesh_; }

  void rhs(const Eigen::VectorXd& u, double t, Eigen::VectorXd& dudt) const;
  double step_speed(const Eigen::VectorXd& u) const;
  bool admissible(const Eigen::VectorXd& u, int* element, int* node) const;
  Eigen::VectorXd sample(const std::function<Vec4(double, double)>& state) const;
  /// Quadrature of 0.5 rho |v|^2 with the P-weights and mapping Jacobian.
  double kinetic_energy(const Eigen::VectorXd& u) const;

 private:
  UsbpPair op_;
  CurvilinearMesh2D mesh_;
  SplittingKind splitting_;
  Boundary2D boundary_;
  Vec4 background_;
  // per-element Lax-Friedrichs dissipation scales (constant per element and
  // direction so the splitting difference stays in the operator's kernel)
  std::vector<double> lambda_xi_, lambda_eta_;
};

}  // namespace usbp

#endif
