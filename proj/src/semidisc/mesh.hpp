#ifndef USBP_SEMIDISC_MESH_HPP
#define USBP_SEMIDISC_MESH_HPP

#include <vector>

#include <Eigen/Dense>

#include "operators/sbp.hpp"

namespace usbp {

/// Uniform partition of [x_min, x_max] into J elements mapped affinely onto
/// the reference element.
struct Mesh1D {
  int num_elements = 1;
  double x_min = -1.0;
  double x_max = 1.0;

  double element_width() const { return (x_max - x_min) / num_elements; }
  double element_left(int j) const { return x_min + j * element_width(); }
  /// Physical coordinate of reference node xi in element j.
  double node(int j, double xi) const {
    return element_left(j) + 0.5 * element_width() * (xi + 1.0);
  }
};

/// Structured curvilinear mesh: per-element tensor-product polynomial mapping
/// sampled at the operator nodes, with metric terms taken as the operator-D
/// derivatives of the nodal mapping (discrete metric identities then hold for
/// any geometry degree).
struct CurvilinearMesh2D {
  int jx = 1, jy = 1, n = 2;
  int n_geo = 1;
  double amplitude = 0.0;
  std::vector<Eigen::MatrixXd> x, y;              // nodal coordinates, (a,b) = (xi, eta)
  std::vector<Eigen::MatrixXd> x_xi, x_eta, y_xi, y_eta, jac;
  std::vector<double> metric_identity_residual;   // per element, recorded
  double min_jacobian = 0.0;

  int num_elements() const { return jx * jy; }
  int element(int i, int j) const { return i * jy + j; }
};

/// Periodic box [0,1]^2 warped by a fixed analytic perturbation, represented
/// per element by the degree-n_geo tensor interpolant of the warp (shared edge
/// interpolation keeps the mesh watertight). amplitude 0 gives the identity
/// map. Throws MeshError when the mapping Jacobian is nonpositive at a node.
CurvilinearMesh2D build_warped_mesh(int jx, int jy, int n_geo, double amplitude,
                                    const SbpOperator& op);

/// The analytic warp behind build_warped_mesh (exposed for tests).
void warp_point(double a, double b, double amplitude, double* x, double* y);

}  // namespace usbp

#endif
