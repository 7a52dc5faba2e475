#include "semidisc/curvilinear2d.hpp"

#include <cmath>

#include "support/errors.hpp"

namespace usbp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

inline Vec4 gather4(const VectorXd& u, int total, int idx) {
  return Vec4(u[idx], u[total + idx], u[2 * total + idx], u[3 * total + idx]);
}

}  // namespace

EulerCurvilinear2D::EulerCurvilinear2D(UsbpPair op, CurvilinearMesh2D mesh,
                                       SplittingKind splitting, double lambda_lf,
                                       Boundary2D boundary, Vec4 background)
    : op_(std::move(op)),
      mesh_(std::move(mesh)),
      splitting_(splitting),
      boundary_(boundary),
      background_(background) {
  const int num_el = mesh_.num_elements();
  lambda_xi_.resize(num_el);
  lambda_eta_.resize(num_el);
  for (int e = 0; e < num_el; ++e) {
    const double k1 =
        (mesh_.y_eta[e].array().square() + mesh_.x_eta[e].array().square()).sqrt().maxCoeff();
    const double k2 =
        (mesh_.y_xi[e].array().square() + mesh_.x_xi[e].array().square()).sqrt().maxCoeff();
    lambda_xi_[e] = lambda_lf * k1;
    lambda_eta_[e] = lambda_lf * k2;
  }
}

bool EulerCurvilinear2D::admissible(const VectorXd& u, int* element, int* node) const {
  const int total = total_nodes();
  const int per = nodes_per_element();
  for (int idx = 0; idx < total; ++idx) {
    if (!euler2::admissible(gather4(u, total, idx))) {
      if (element) *element = idx / per;
      if (node) *node = idx % per;
      return false;
    }
  }
  return true;
}

void EulerCurvilinear2D::rhs(const VectorXd& u, double t, VectorXd& dudt) const {
  const int n = op_.size();
  const int jx = mesh_.jx, jy = mesh_.jy;
  const int num_el = jx * jy;
  const int total = total_nodes();
  dudt.resize(u.size());

  MatrixXd f1p[4], f1m[4], f2p[4], f2m[4];
  for (int v = 0; v < 4; ++v) {
    f1p[v].resize(n, n * num_el);
    f1m[v].resize(n, n * num_el);
    f2p[v].resize(n, n * num_el);
    f2m[v].resize(n, n * num_el);
  }
  for (int e = 0; e < num_el; ++e) {
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const int idx = e * n * n + a + n * b;
        const Vec4 state = gather4(u, total, idx);
        if (!euler2::admissible(state))
          throw SimulationAbort(t, e, a + n * b, "nonpositive density or pressure");
        const double k11 = mesh_.y_eta[e](a, b), k12 = -mesh_.x_eta[e](a, b);
        const double k21 = -mesh_.y_xi[e](a, b), k22 = mesh_.x_xi[e](a, b);
        const Vec4 xp = split_flux_2d(splitting_, state, k11, k12, +1, lambda_xi_[e]);
        const Vec4 xm = split_flux_2d(splitting_, state, k11, k12, -1, lambda_xi_[e]);
        const Vec4 yp = split_flux_2d(splitting_, state, k21, k22, +1, lambda_eta_[e]);
        const Vec4 ym = split_flux_2d(splitting_, state, k21, k22, -1, lambda_eta_[e]);
        for (int v = 0; v < 4; ++v) {
          f1p[v](a, e * n + b) = xp[v];
          f1m[v](a, e * n + b) = xm[v];
          f2p[v](a, e * n + b) = yp[v];
          f2m[v](a, e * n + b) = ym[v];
        }
      }
    }
  }

  const VectorXd& w = op_.weights();
  for (int v = 0; v < 4; ++v) {
    Eigen::Map<MatrixXd> out(dudt.data() + v * total, n, n * num_el);
    out.noalias() = -(op_.Dminus * f1p[v] + op_.Dplus * f1m[v]);
    for (int e = 0; e < num_el; ++e)
      out.middleCols(e * n, n).noalias() -=
          f2p[v].middleCols(e * n, n) * op_.Dminus.transpose() +
          f2m[v].middleCols(e * n, n) * op_.Dplus.transpose();
  }

  // interface and boundary SATs
  const bool periodic = boundary_ == Boundary2D::Periodic;
  for (int ex = 0; ex < jx; ++ex) {
    for (int ey = 0; ey < jy; ++ey) {
      const int e = mesh_.element(ex, ey);
      const int east = mesh_.element((ex + 1) % jx, ey);
      const int west = mesh_.element((ex + jx - 1) % jx, ey);
      const int north = mesh_.element(ex, (ey + 1) % jy);
      const int south = mesh_.element(ex, (ey + jy - 1) % jy);
      const bool at_east = ex == jx - 1, at_west = ex == 0;
      const bool at_north = ey == jy - 1, at_south = ey == 0;

      for (int b = 0; b < n; ++b) {
        {  // east face
          const double k1 = mesh_.y_eta[e](n - 1, b), k2 = -mesh_.x_eta[e](n - 1, b);
          const double lam = (periodic || !at_east)
                                 ? std::max(lambda_xi_[e], lambda_xi_[east])
                                 : lambda_xi_[e];
          const Vec4 own = gather4(u, total, e * n * n + (n - 1) + n * b);
          const Vec4 ext = (!periodic && at_east)
                               ? background_
                               : gather4(u, total, east * n * n + 0 + n * b);
          const Vec4 jump = split_flux_2d(splitting_, ext, k1, k2, -1, lam) -
                            split_flux_2d(splitting_, own, k1, k2, -1, lam);
          for (int v = 0; v < 4; ++v)
            dudt[v * total + e * n * n + (n - 1) + n * b] -= jump[v] / w[n - 1];
        }
        {  // west face
          const double k1 = mesh_.y_eta[e](0, b), k2 = -mesh_.x_eta[e](0, b);
          const double lam = (periodic || !at_west)
                                 ? std::max(lambda_xi_[e], lambda_xi_[west])
                                 : lambda_xi_[e];
          const Vec4 own = gather4(u, total, e * n * n + 0 + n * b);
          const Vec4 ext = (!periodic && at_west)
                               ? background_
                               : gather4(u, total, west * n * n + (n - 1) + n * b);
          const Vec4 jump = split_flux_2d(splitting_, ext, k1, k2, +1, lam) -
                            split_flux_2d(splitting_, own, k1, k2, +1, lam);
          for (int v = 0; v < 4; ++v)
            dudt[v * total + e * n * n + 0 + n * b] += jump[v] / w[0];
        }
      }
      for (int a = 0; a < n; ++a) {
        {  // north face
          const double k1 = -mesh_.y_xi[e](a, n - 1), k2 = mesh_.x_xi[e](a, n - 1);
          const double lam = (periodic || !at_north)
                                 ? std::max(lambda_eta_[e], lambda_eta_[north])
                                 : lambda_eta_[e];
          const Vec4 own = gather4(u, total, e * n * n + a + n * (n - 1));
          const Vec4 ext = (!periodic && at_north)
                               ? background_
                               : gather4(u, total, north * n * n + a + n * 0);
          const Vec4 jump = split_flux_2d(splitting_, ext, k1, k2, -1, lam) -
                            split_flux_2d(splitting_, own, k1, k2, -1, lam);
          for (int v = 0; v < 4; ++v)
            dudt[v * total + e * n * n + a + n * (n - 1)] -= jump[v] / w[n - 1];
        }
        {  // south face
          const double k1 = -mesh_.y_xi[e](a, 0), k2 = mesh_.x_xi[e](a, 0);
          const double lam = (periodic || !at_south)
                                 ? std::max(lambda_eta_[e], lambda_eta_[south])
                                 : lambda_eta_[e];
          const Vec4 own = gather4(u, total, e * n * n + a + n * 0);
          const Vec4 ext = (!periodic && at_south)
                               ? background_
                               : gather4(u, total, south * n * n + a + n * (n - 1));
          const Vec4 jump = split_flux_2d(splitting_, ext, k1, k2, +1, lam) -
                            split_flux_2d(splitting_, own, k1, k2, +1, lam);
          for (int v = 0; v < 4; ++v)
            dudt[v * total + e * n * n + a + n * 0] += jump[v] / w[0];
        }
      }

      // divide by the mapping Jacobian
      for (int v = 0; v < 4; ++v) {
        Eigen::Map<MatrixXd> out(dudt.data() + v * total, n, n * num_el);
        out.middleCols(e * n, n).array() /= mesh_.jac[e].array();
      }
    }
  }
}

double EulerCurvilinear2D::step_speed(const VectorXd& u) const {
  const int n = op_.size();
  const int total = total_nodes();
  double speed = 0.0;
  for (int e = 0; e < mesh_.num_elements(); ++e) {
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const int idx = e * n * n + a + n * b;
        const Vec4 s = gather4(u, total, idx);
        const double v1 = s[1] / s[0], v2 = s[2] / s[0];
        const double c = euler2::sound_speed(s);
        const double k11 = mesh_.y_eta[e](a, b), k12 = -mesh_.x_eta[e](a, b);
        const double k21 = -mesh_.y_xi[e](a, b), k22 = mesh_.x_xi[e](a, b);
        const double s1 = std::abs(k11 * v1 + k12 * v2) + c * std::hypot(k11, k12);
        const double s2 = std::abs(k21 * v1 + k22 * v2) + c * std::hypot(k21, k22);
        speed = std::max(speed, (s1 + s2) / (2.0 * mesh_.jac[e](a, b)));
      }
    }
  }
  return speed;
}

VectorXd EulerCurvilinear2D::sample(const std::function<Vec4(double, double)>& state) const {
  const int n = op_.size();
  const int total = total_nodes();
  VectorXd u(dof());
  for (int e = 0; e < mesh_.num_elements(); ++e) {
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const Vec4 s = state(mesh_.x[e](a, b), mesh_.y[e](a, b));
        const int idx = e * n * n + a + n * b;
        for (int v = 0; v < 4; ++v) u[v * total + idx] = s[v];
      }
    }
  }
  return u;
}

double EulerCurvilinear2D::kinetic_energy(const VectorXd& u) const {
  const int n = op_.size();
  const int total = total_nodes();
  const VectorXd& w = op_.weights();
  double energy = 0.0;
  for (int e = 0; e < mesh_.num_elements(); ++e) {
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const int idx = e * n * n + a + n * b;
        const Vec4 s = gather4(u, total, idx);
        energy += mesh_.jac[e](a, b) * w[a] * w[b] * 0.5 *
                  (s[1] * s[1] + s[2] * s[2]) / s[0];
      }
    }
  }
  return energy;
}

}  // namespace usbp
