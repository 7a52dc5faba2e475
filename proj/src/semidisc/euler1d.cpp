#include "semidisc/euler1d.hpp"

#include <cmath>
#include <stdexcept>

#include "physics/problems.hpp"
#include "support/errors.hpp"

namespace usbp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

inline Vec3 gather(const VectorXd& u, int stride, int idx) {
  return Vec3(u[idx], u[stride + idx], u[2 * stride + idx]);
}

}  // namespace

EulerUsbp1D::EulerUsbp1D(UsbpPair op, Mesh1D mesh, SplittingKind splitting,
                         bool manufactured_source, double lambda_max)
    : op_(std::move(op)),
      mesh_(mesh),
      splitting_(splitting),
      manufactured_source_(manufactured_source),
      lambda_max_(lambda_max) {
  if (!op_.base.nodes.includes_boundary)
    throw std::invalid_argument("EulerUsbp1D: SAT coupling needs boundary-including nodes");
}

bool EulerUsbp1D::admissible(const VectorXd& u, int* element, int* node) const {
  const int n = op_.size();
  const int stride = mesh_.num_elements * n;
  for (int j = 0; j < mesh_.num_elements; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!euler1::admissible(gather(u, stride, j * n + i))) {
        if (element) *element = j;
        if (node) *node = i;
        return false;
      }
    }
  }
  return true;
}

void EulerUsbp1D::rhs(const VectorXd& u, double t, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = mesh_.num_elements;
  const int stride = num_el * n;
  dudt.resize(u.size());

  MatrixXd f_plus[3], f_minus[3];
  for (int v = 0; v < 3; ++v) {
    f_plus[v].resize(n, num_el);
    f_minus[v].resize(n, num_el);
  }
  for (int j = 0; j < num_el; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec3 state = gather(u, stride, j * n + i);
      if (!euler1::admissible(state))
        throw SimulationAbort(t, j, i, "nonpositive density or pressure");
      const Vec3 fp = split_flux_1d(splitting_, state, +1, lambda_max_);
      const Vec3 fm = split_flux_1d(splitting_, state, -1, lambda_max_);
      for (int v = 0; v < 3; ++v) {
        f_plus[v](i, j) = fp[v];
        f_minus[v](i, j) = fm[v];
      }
    }
  }

  const VectorXd& w = op_.weights();
  const double scale = 2.0 / mesh_.element_width();
  for (int v = 0; v < 3; ++v) {
    Eigen::Map<MatrixXd> out(dudt.data() + v * stride, n, num_el);
    out.noalias() = -(op_.Dplus * f_minus[v] + op_.Dminus * f_plus[v]);
    for (int j = 0; j < num_el; ++j) {
      const int right = (j + 1) % num_el;
      const int left = (j + num_el - 1) % num_el;
      out(n - 1, j) -= (f_minus[v](0, right) - f_minus[v](n - 1, j)) / w[n - 1];
      out(0, j) += (f_plus[v](n - 1, left) - f_plus[v](0, j)) / w[0];
    }
    out *= scale;
  }

  if (manufactured_source_) {
    for (int j = 0; j < num_el; ++j) {
      for (int i = 0; i < n; ++i) {
        const Vec3 s = manufactured::source(t, node_coordinate(j, i));
        for (int v = 0; v < 3; ++v) dudt[v * stride + j * n + i] += s[v];
      }
    }
  }
}

double EulerUsbp1D::step_speed(const VectorXd& u) const {
  const int n = op_.size();
  const int stride = mesh_.num_elements * n;
  double speed = 0.0;
  for (int idx = 0; idx < stride; ++idx)
    speed = std::max(speed, euler1::max_wave_speed(gather(u, stride, idx)));
  return std::max(speed, lambda_max_) / mesh_.element_width();
}

VectorXd EulerUsbp1D::sample(const std::function<Vec3(double)>& state) const {
  const int n = op_.size();
  const int stride = mesh_.num_elements * n;
  VectorXd u(dof());
  for (int j = 0; j < mesh_.num_elements; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec3 s = state(node_coordinate(j, i));
      for (int v = 0; v < 3; ++v) u[v * stride + j * n + i] = s[v];
    }
  }
  return u;
}

BaselineEuler1D::BaselineEuler1D(SbpOperator op, Mesh1D mesh, bool manufactured_source)
    : op_(std::move(op)), mesh_(mesh), manufactured_source_(manufactured_source) {
  if (!op_.nodes.includes_boundary)
    throw std::invalid_argument("BaselineEuler1D: SAT coupling needs boundary-including nodes");
}

bool BaselineEuler1D::admissible(const VectorXd& u, int* element, int* node) const {
  const int n = op_.size();
  const int stride = mesh_.num_elements * n;
  for (int idx = 0; idx < stride; ++idx) {
    if (!euler1::admissible(gather(u, stride, idx))) {
      if (element) *element = idx / n;
      if (node) *node = idx % n;
      return false;
    }
  }
  return true;
}

void BaselineEuler1D::rhs(const VectorXd& u, double t, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = mesh_.num_elements;
  const int stride = num_el * n;
  dudt.resize(u.size());

  MatrixXd flux[3];
  for (int v = 0; v < 3; ++v) flux[v].resize(n, num_el);
  for (int j = 0; j < num_el; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec3 state = gather(u, stride, j * n + i);
      if (!euler1::admissible(state))
        throw SimulationAbort(t, j, i, "nonpositive density or pressure");
      const Vec3 f = euler1::flux(state);
      for (int v = 0; v < 3; ++v) flux[v](i, j) = f[v];
    }
  }

  const VectorXd w = op_.P.diagonal();
  const double scale = 2.0 / mesh_.element_width();
  for (int v = 0; v < 3; ++v) {
    Eigen::Map<MatrixXd> out(dudt.data() + v * stride, n, num_el);
    out.noalias() = -(op_.D * flux[v]);
  }
  for (int j = 0; j < num_el; ++j) {
    const int right = (j + 1) % num_el;
    const int left = (j + num_el - 1) % num_el;
    const Vec3 u_rr = gather(u, stride, right * n);
    const Vec3 u_rl = gather(u, stride, j * n + n - 1);
    const Vec3 u_lr = gather(u, stride, j * n);
    const Vec3 u_ll = gather(u, stride, left * n + n - 1);
    const double lam_r = std::max(euler1::max_wave_speed(u_rl), euler1::max_wave_speed(u_rr));
    const double lam_l = std::max(euler1::max_wave_speed(u_ll), euler1::max_wave_speed(u_lr));
    const Vec3 star_r =
        0.5 * (euler1::flux(u_rl) + euler1::flux(u_rr)) - 0.5 * lam_r * (u_rr - u_rl);
    const Vec3 star_l =
        0.5 * (euler1::flux(u_ll) + euler1::flux(u_lr)) - 0.5 * lam_l * (u_lr - u_ll);
    for (int v = 0; v < 3; ++v) {
      dudt[v * stride + j * n + n - 1] -=
          (star_r[v] - euler1::flux(u_rl)[v]) / w[n - 1];
      dudt[v * stride + j * n] += (star_l[v] - euler1::flux(u_lr)[v]) / w[0];
    }
  }
  for (int v = 0; v < 3; ++v) {
    Eigen::Map<MatrixXd> out(dudt.data() + v * stride, n, num_el);
    out *= scale;
  }

  if (manufactured_source_) {
    for (int j = 0; j < num_el; ++j) {
      for (int i = 0; i < n; ++i) {
        const Vec3 s = manufactured::source(t, mesh_.node(j, op_.nodes.nodes[i]));
        for (int v = 0; v < 3; ++v) dudt[v * stride + j * n + i] += s[v];
      }
    }
  }
}

double BaselineEuler1D::step_speed(const VectorXd& u) const {
  const int n = op_.size();
  const int stride = mesh_.num_elements * n;
  double speed = 0.0;
  for (int idx = 0; idx < stride; ++idx)
    speed = std::max(speed, euler1::max_wave_speed(gather(u, stride, idx)));
  return speed / mesh_.element_width();
}

VectorXd BaselineEuler1D::sample(const std::function<Vec3(double)>& state) const {
  const int n = op_.size();
  const int stride = mesh_.num_elements * n;
  VectorXd u(dof());
  for (int j = 0; j < mesh_.num_elements; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec3 s = state(mesh_.node(j, op_.nodes.nodes[i]));
      for (int v = 0; v < 3; ++v) u[v * stride + j * n + i] = s[v];
    }
  }
  return u;
}

}  // namespace usbp
