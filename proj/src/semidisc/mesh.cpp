#include "semidisc/mesh.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

void warp_point(double a, double b, double amplitude, double* x, double* y) {
  // phases keep the warp nonzero on every uniform element-corner lattice
  *x = a + amplitude * std::sin(2.0 * M_PI * a + 0.6) * std::sin(2.0 * M_PI * b + 0.3);
  *y = b + 0.75 * amplitude * std::sin(2.0 * M_PI * b + 0.7) *
               std::cos(2.0 * M_PI * a + 0.4);
}

CurvilinearMesh2D build_warped_mesh(int jx, int jy, int n_geo, double amplitude,
                                    const SbpOperator& op) {
  if (jx < 1 || jy < 1) throw std::invalid_argument("build_warped_mesh: need jx, jy >= 1");
  if (n_geo < 1 || n_geo > 4)
    throw std::invalid_argument("build_warped_mesh: need n_geo in {1,2,3,4}");

  const int n = op.size();
  CurvilinearMesh2D mesh;
  mesh.jx = jx;
  mesh.jy = jy;
  mesh.n = n;
  mesh.n_geo = n_geo;
  mesh.amplitude = amplitude;

  // geometry nodes on [-1,1] and evaluation matrix onto the operator nodes
  Eigen::VectorXd geo_nodes;
  if (n_geo == 1) {
    geo_nodes.resize(2);
    geo_nodes << -1.0, 1.0;
  } else {
    geo_nodes = lgl_nodes(n_geo + 1).nodes;
  }
  const int ng = static_cast<int>(geo_nodes.size());
  Eigen::MatrixXd eval(n, ng);
  for (int i = 0; i < n; ++i)
    eval.row(i) = lagrange_values(geo_nodes, op.nodes.nodes[i]).transpose();

  const int num = jx * jy;
  mesh.x.resize(num);
  mesh.y.resize(num);
  mesh.x_xi.resize(num);
  mesh.x_eta.resize(num);
  mesh.y_xi.resize(num);
  mesh.y_eta.resize(num);
  mesh.jac.resize(num);
  mesh.metric_identity_residual.resize(num);
  mesh.min_jacobian = std::numeric_limits<double>::infinity();

  const double hx = 1.0 / jx, hy = 1.0 / jy;
  Eigen::MatrixXd xg(ng, ng), yg(ng, ng);
  for (int i = 0; i < jx; ++i) {
    for (int j = 0; j < jy; ++j) {
      for (int p = 0; p < ng; ++p) {
        const double a = i * hx + 0.5 * hx * (geo_nodes[p] + 1.0);
        for (int q = 0; q < ng; ++q) {
          const double b = j * hy + 0.5 * hy * (geo_nodes[q] + 1.0);
          warp_point(a, b, amplitude, &xg(p, q), &yg(p, q));
        }
      }
      const int e = mesh.element(i, j);
      mesh.x[e] = eval * xg * eval.transpose();
      mesh.y[e] = eval * yg * eval.transpose();
      mesh.x_xi[e] = op.D * mesh.x[e];
      mesh.y_xi[e] = op.D * mesh.y[e];
      mesh.x_eta[e] = mesh.x[e] * op.D.transpose();
      mesh.y_eta[e] = mesh.y[e] * op.D.transpose();
      mesh.jac[e] = mesh.x_xi[e].cwiseProduct(mesh.y_eta[e]) -
                    mesh.x_eta[e].cwiseProduct(mesh.y_xi[e]);
      mesh.min_jacobian = std::min(mesh.min_jacobian, mesh.jac[e].minCoeff());
      mesh.metric_identity_residual[e] =
          std::max((op.D * mesh.y_eta[e] - mesh.y_xi[e] * op.D.transpose())
                       .cwiseAbs().maxCoeff(),
                   (op.D * mesh.x_eta[e] - mesh.x_xi[e] * op.D.transpose())
                       .cwiseAbs().maxCoeff());
    }
  }
  if (mesh.min_jacobian <= 0.0)
    throw MeshError("build_warped_mesh: nonpositive mapping Jacobian (min " +
                    std::to_string(mesh.min_jacobian) + "); reduce the amplitude");
  return mesh;
}

}  // namespace usbp
