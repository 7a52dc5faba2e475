#include "semidisc/euler2d.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

inline Vec4 gather4(const VectorXd& u, int total, int idx) {
  return Vec4(u[idx], u[total + idx], u[2 * total + idx], u[3 * total + idx]);
}

}  // namespace

EulerCartesian2D::EulerCartesian2D(UsbpPair op, Box2D box, SplittingKind splitting,
                                   double lambda_lf)
    : op_(std::move(op)), box_(box), splitting_(splitting), lambda_lf_(lambda_lf) {
  if (!op_.base.nodes.includes_boundary)
    throw std::invalid_argument("EulerCartesian2D: SAT coupling needs boundary-including nodes");
}

bool EulerCartesian2D::admissible(const VectorXd& u, int* element, int* node) const {
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

void EulerCartesian2D::rhs(const VectorXd& u, double t, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = box_.jx * box_.jy;
  const int total = total_nodes();
  dudt.resize(u.size());

  // whole-field split fluxes, element e in column block [e*n, (e+1)*n)
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
        const Vec4 xp = split_flux_2d(splitting_, state, 1.0, 0.0, +1, lambda_lf_);
        const Vec4 xm = split_flux_2d(splitting_, state, 1.0, 0.0, -1, lambda_lf_);
        const Vec4 yp = split_flux_2d(splitting_, state, 0.0, 1.0, +1, lambda_lf_);
        const Vec4 ym = split_flux_2d(splitting_, state, 0.0, 1.0, -1, lambda_lf_);
        for (int v = 0; v < 4; ++v) {
          f1p[v](a, e * n + b) = xp[v];
          f1m[v](a, e * n + b) = xm[v];
          f2p[v](a, e * n + b) = yp[v];
          f2m[v](a, e * n + b) = ym[v];
        }
      }
    }
  }

  const double sx = 2.0 / box_.hx();
  const double sy = 2.0 / box_.hy();
  const VectorXd& w = op_.weights();
  for (int v = 0; v < 4; ++v) {
    Eigen::Map<MatrixXd> out(dudt.data() + v * total, n, n * num_el);
    out.noalias() = -sx * (op_.Dminus * f1p[v] + op_.Dplus * f1m[v]);
    for (int e = 0; e < num_el; ++e) {
      out.middleCols(e * n, n).noalias() -=
          sy * (f2p[v].middleCols(e * n, n) * op_.Dminus.transpose() +
                f2m[v].middleCols(e * n, n) * op_.Dplus.transpose());
    }
    // interface SATs, periodic wrap
    for (int ex = 0; ex < box_.jx; ++ex) {
      for (int ey = 0; ey < box_.jy; ++ey) {
        const int e = ex * box_.jy + ey;
        const int east = ((ex + 1) % box_.jx) * box_.jy + ey;
        const int west = ((ex + box_.jx - 1) % box_.jx) * box_.jy + ey;
        const int north = ex * box_.jy + (ey + 1) % box_.jy;
        const int south = ex * box_.jy + (ey + box_.jy - 1) % box_.jy;
        for (int b = 0; b < n; ++b) {
          out(n - 1, e * n + b) -=
              sx * (f1m[v](0, east * n + b) - f1m[v](n - 1, e * n + b)) / w[n - 1];
          out(0, e * n + b) +=
              sx * (f1p[v](n - 1, west * n + b) - f1p[v](0, e * n + b)) / w[0];
        }
        for (int a = 0; a < n; ++a) {
          out(a, e * n + n - 1) -=
              sy * (f2m[v](a, north * n) - f2m[v](a, e * n + n - 1)) / w[n - 1];
          out(a, e * n) +=
              sy * (f2p[v](a, south * n + n - 1) - f2p[v](a, e * n)) / w[0];
        }
      }
    }
  }
}

double EulerCartesian2D::step_speed(const VectorXd& u) const {
  const int total = total_nodes();
  double speed = 0.0;
  for (int idx = 0; idx < total; ++idx) {
    const Vec4 s = gather4(u, total, idx);
    const double c = euler2::sound_speed(s);
    const double v1 = std::abs(s[1] / s[0]);
    const double v2 = std::abs(s[2] / s[0]);
    speed = std::max(speed, (v1 + c) / box_.hx() + (v2 + c) / box_.hy());
  }
  return speed;
}

VectorXd EulerCartesian2D::sample(const std::function<Vec4(double, double)>& state) const {
  const int n = op_.size();
  const int total = total_nodes();
  VectorXd u(dof());
  for (int ex = 0; ex < box_.jx; ++ex) {
    for (int ey = 0; ey < box_.jy; ++ey) {
      const int e = ex * box_.jy + ey;
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          const Vec4 s = state(box_.node_x(ex, op_.nodes()[a]),
                               box_.node_y(ey, op_.nodes()[b]));
          const int idx = e * n * n + a + n * b;
          for (int v = 0; v < 4; ++v) u[v * total + idx] = s[v];
        }
      }
    }
  }
  return u;
}

double EulerCartesian2D::kinetic_energy(const VectorXd& u) const {
  const int n = op_.size();
  const int total = total_nodes();
  const VectorXd& w = op_.weights();
  const double cell = 0.25 * box_.hx() * box_.hy();
  double energy = 0.0;
  for (int e = 0; e < box_.jx * box_.jy; ++e) {
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const int idx = e * n * n + a + n * b;
        const Vec4 s = gather4(u, total, idx);
        energy += cell * w[a] * w[b] * 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0];
      }
    }
  }
  return energy;
}

double EulerCartesian2D::l2_error(const VectorXd& u,
                                  const std::function<Vec4(double, double)>& exact,
                                  bool density_only) const {
  const int n = op_.size();
  const int total = total_nodes();
  const VectorXd& w = op_.weights();
  const double cell = 0.25 * box_.hx() * box_.hy();
  double sum = 0.0;
  for (int ex = 0; ex < box_.jx; ++ex) {
    for (int ey = 0; ey < box_.jy; ++ey) {
      const int e = ex * box_.jy + ey;
      for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
          const int idx = e * n * n + a + n * b;
          const Vec4 ref = exact(box_.node_x(ex, op_.nodes()[a]),
                                 box_.node_y(ey, op_.nodes()[b]));
          const Vec4 diff = gather4(u, total, idx) - ref;
          const int nv = density_only ? 1 : 4;
          for (int v = 0; v < nv; ++v) sum += cell * w[a] * w[b] * diff[v] * diff[v];
        }
      }
    }
  }
  return std::sqrt(sum);
}

BaselineEulerCartesian2D::BaselineEulerCartesian2D(SbpOperator op, Box2D box)
    : box_(box), op_(std::move(op)) {}

bool BaselineEulerCartesian2D::admissible(const VectorXd& u, int* element, int* node) const {
  const int total = dof() / 4;
  const int per = op_.size() * op_.size();
  for (int idx = 0; idx < total; ++idx) {
    if (!euler2::admissible(gather4(u, total, idx))) {
      if (element) *element = idx / per;
      if (node) *node = idx % per;
      return false;
    }
  }
  return true;
}

void BaselineEulerCartesian2D::rhs(const VectorXd& u, double t, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = box_.jx * box_.jy;
  const int total = dof() / 4;
  dudt.resize(u.size());

  MatrixXd f1[4], f2[4];
  for (int v = 0; v < 4; ++v) {
    f1[v].resize(n, n * num_el);
    f2[v].resize(n, n * num_el);
  }
  for (int e = 0; e < num_el; ++e) {
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const int idx = e * n * n + a + n * b;
        const Vec4 state = gather4(u, total, idx);
        if (!euler2::admissible(state))
          throw SimulationAbort(t, e, a + n * b, "nonpositive density or pressure");
        const Vec4 fx = euler2::flux(state, 1.0, 0.0);
        const Vec4 fy = euler2::flux(state, 0.0, 1.0);
        for (int v = 0; v < 4; ++v) {
          f1[v](a, e * n + b) = fx[v];
          f2[v](a, e * n + b) = fy[v];
        }
      }
    }
  }

  const double sx = 2.0 / box_.hx();
  const double sy = 2.0 / box_.hy();
  const VectorXd w = op_.P.diagonal();
  for (int v = 0; v < 4; ++v) {
    Eigen::Map<MatrixXd> out(dudt.data() + v * total, n, n * num_el);
    out.noalias() = -sx * (op_.D * f1[v]);
    for (int e = 0; e < num_el; ++e)
      out.middleCols(e * n, n).noalias() -=
          sy * (f2[v].middleCols(e * n, n) * op_.D.transpose());
  }

  auto rusanov = [](const Vec4& ul, const Vec4& ur, double k1, double k2) {
    const double lam =
        std::max(std::abs(k1 * ul[1] / ul[0] + k2 * ul[2] / ul[0]) + euler2::sound_speed(ul),
                 std::abs(k1 * ur[1] / ur[0] + k2 * ur[2] / ur[0]) + euler2::sound_speed(ur));
    return (0.5 * (euler2::flux(ul, k1, k2) + euler2::flux(ur, k1, k2)) -
            0.5 * lam * (ur - ul)).eval();
  };

  for (int ex = 0; ex < box_.jx; ++ex) {
    for (int ey = 0; ey < box_.jy; ++ey) {
      const int e = ex * box_.jy + ey;
      const int east = ((ex + 1) % box_.jx) * box_.jy + ey;
      const int west = ((ex + box_.jx - 1) % box_.jx) * box_.jy + ey;
      const int north = ex * box_.jy + (ey + 1) % box_.jy;
      const int south = ex * box_.jy + (ey + box_.jy - 1) % box_.jy;
      for (int b = 0; b < n; ++b) {
        const Vec4 own_r = gather4(u, total, e * n * n + (n - 1) + n * b);
        const Vec4 nbr_r = gather4(u, total, east * n * n + 0 + n * b);
        const Vec4 star_r = rusanov(own_r, nbr_r, 1.0, 0.0);
        const Vec4 own_l = gather4(u, total, e * n * n + 0 + n * b);
        const Vec4 nbr_l = gather4(u, total, west * n * n + (n - 1) + n * b);
        const Vec4 star_l = rusanov(nbr_l, own_l, 1.0, 0.0);
        const Vec4 jump_r = star_r - euler2::flux(own_r, 1.0, 0.0);
        const Vec4 jump_l = star_l - euler2::flux(own_l, 1.0, 0.0);
        for (int v = 0; v < 4; ++v) {
          dudt[v * total + e * n * n + (n - 1) + n * b] -= sx * jump_r[v] / w[n - 1];
          dudt[v * total + e * n * n + 0 + n * b] += sx * jump_l[v] / w[0];
        }
      }
      for (int a = 0; a < n; ++a) {
        const Vec4 own_t = gather4(u, total, e * n * n + a + n * (n - 1));
        const Vec4 nbr_t = gather4(u, total, north * n * n + a + n * 0);
        const Vec4 star_t = rusanov(own_t, nbr_t, 0.0, 1.0);
        const Vec4 own_b = gather4(u, total, e * n * n + a + n * 0);
        const Vec4 nbr_b = gather4(u, total, south * n * n + a + n * (n - 1));
        const Vec4 star_b = rusanov(nbr_b, own_b, 0.0, 1.0);
        const Vec4 jump_t = star_t - euler2::flux(own_t, 0.0, 1.0);
        const Vec4 jump_b = star_b - euler2::flux(own_b, 0.0, 1.0);
        for (int v = 0; v < 4; ++v) {
          dudt[v * total + e * n * n + a + n * (n - 1)] -= sy * jump_t[v] / w[n - 1];
          dudt[v * total + e * n * n + a + n * 0] += sy * jump_b[v] / w[0];
        }
      }
    }
  }
}

double BaselineEulerCartesian2D::step_speed(const VectorXd& u) const {
  const int total = dof() / 4;
  double speed = 0.0;
  for (int idx = 0; idx < total; ++idx) {
    const Vec4 s = gather4(u, total, idx);
    const double c = euler2::sound_speed(s);
    speed = std::max(speed, (std::abs(s[1] / s[0]) + c) / box_.hx() +
                                (std::abs(s[2] / s[0]) + c) / box_.hy());
  }
  return speed;
}

VectorXd BaselineEulerCartesian2D::sample(
    const std::function<Vec4(double, double)>& state) const {
  EulerCartesian2D helper(UsbpPair{op_, Eigen::MatrixXd::Zero(op_.size(), op_.size()),
                                   op_.D, op_.D, op_.Q, op_.Q, op_.degree},
                          box_, SplittingKind::LaxFriedrichs, 0.0);
  return helper.sample(state);
}

double BaselineEulerCartesian2D::l2_error(const VectorXd& u,
                                          const std::function<Vec4(double, double)>& exact,
                                          bool density_only) const {
  EulerCartesian2D helper(UsbpPair{op_, Eigen::MatrixXd::Zero(op_.size(), op_.size()),
                                   op_.D, op_.D, op_.Q, op_.Q, op_.degree},
                          box_, SplittingKind::LaxFriedrichs, 0.0);
  return helper.l2_error(u, exact, density_only);
}

}  // namespace usbp
