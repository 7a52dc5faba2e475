#include "semidisc/scalar1d.hpp"

#include <cmath>
#include <stdexcept>

namespace usbp {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {
using MapM = Eigen::Map<MatrixXd>;
using MapCM = Eigen::Map<const MatrixXd>;
}  // namespace

namespace {
void require_boundary_nodes(const NodeSet& nodes, const char* where) {
  if (!nodes.includes_boundary)
    throw std::invalid_argument(std::string(where) +
                                ": SAT coupling needs boundary-including nodes");
}
}  // namespace

AdvectionUsbp1D::AdvectionUsbp1D(UsbpPair op, Mesh1D mesh, double lambda_max)
    : op_(std::move(op)), mesh_(mesh), lambda_max_(lambda_max) {
  require_boundary_nodes(op_.base.nodes, "AdvectionUsbp1D");
}

void AdvectionUsbp1D::rhs(const VectorXd& u, double /*t*/, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = mesh_.num_elements;
  MapCM state(u.data(), n, num_el);
  dudt.resize(u.size());
  MapM out(dudt.data(), n, num_el);

  const MatrixXd f_plus = 0.5 * (1.0 + lambda_max_) * state;
  const MatrixXd f_minus = 0.5 * (1.0 - lambda_max_) * state;
  out.noalias() = -(op_.Dplus * f_minus + op_.Dminus * f_plus);

  const VectorXd& w = op_.weights();
  for (int j = 0; j < num_el; ++j) {
    const int right = (j + 1) % num_el;
    const int left = (j + num_el - 1) % num_el;
    out(n - 1, j) -= (f_minus(0, right) - f_minus(n - 1, j)) / w[n - 1];
    out(0, j) += (f_plus(n - 1, left) - f_plus(0, j)) / w[0];
  }
  out *= 2.0 / mesh_.element_width();
}

double AdvectionUsbp1D::step_speed(const VectorXd&) const {
  return std::max(lambda_max_, 1.0) / mesh_.element_width();
}

VectorXd AdvectionUsbp1D::sample(const std::function<double(double)>& f) const {
  const int n = op_.size();
  VectorXd u(dof());
  for (int j = 0; j < mesh_.num_elements; ++j)
    for (int i = 0; i < n; ++i) u[j * n + i] = f(mesh_.node(j, op_.nodes()[i]));
  return u;
}

BaselineAdvection1D::BaselineAdvection1D(SbpOperator op, Mesh1D mesh)
    : op_(std::move(op)), mesh_(mesh) {
  require_boundary_nodes(op_.nodes, "BaselineAdvection1D");
}

void BaselineAdvection1D::rhs(const VectorXd& u, double /*t*/, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = mesh_.num_elements;
  MapCM state(u.data(), n, num_el);
  dudt.resize(u.size());
  MapM out(dudt.data(), n, num_el);

  out.noalias() = -(op_.D * state);
  const VectorXd w = op_.P.diagonal();
  for (int j = 0; j < num_el; ++j) {
    const int right = (j + 1) % num_el;
    const int left = (j + num_el - 1) % num_el;
    // Rusanov flux f* = (f_L + f_R)/2 - lambda (u_R - u_L)/2 with f(u) = u
    const double star_r =
        0.5 * (state(n - 1, j) + state(0, right)) - 0.5 * (state(0, right) - state(n - 1, j));
    const double star_l =
        0.5 * (state(n - 1, left) + state(0, j)) - 0.5 * (state(0, j) - state(n - 1, left));
    out(n - 1, j) -= (star_r - state(n - 1, j)) / w[n - 1];
    out(0, j) += (star_l - state(0, j)) / w[0];
  }
  out *= 2.0 / mesh_.element_width();
}

double BaselineAdvection1D::step_speed(const VectorXd&) const {
  return 1.0 / mesh_.element_width();
}

VectorXd BaselineAdvection1D::sample(const std::function<double(double)>& f) const {
  const int n = op_.size();
  VectorXd u(dof());
  for (int j = 0; j < mesh_.num_elements; ++j)
    for (int i = 0; i < n; ++i) u[j * n + i] = f(mesh_.node(j, op_.nodes.nodes[i]));
  return u;
}

BurgersFullUpwind1D::BurgersFullUpwind1D(UsbpPair op, Mesh1D mesh)
    : op_(std::move(op)), mesh_(mesh) {
  require_boundary_nodes(op_.base.nodes, "BurgersFullUpwind1D");
}

void BurgersFullUpwind1D::rhs(const VectorXd& u, double /*t*/, VectorXd& dudt) const {
  const int n = op_.size();
  const int num_el = mesh_.num_elements;
  MapCM state(u.data(), n, num_el);
  dudt.resize(u.size());
  MapM out(dudt.data(), n, num_el);

  const MatrixXd flux = 0.5 * state.cwiseProduct(state);
  out.noalias() = -(op_.Dminus * flux);
  const VectorXd& w = op_.weights();
  for (int j = 0; j < num_el; ++j) {
    const int left = (j + num_el - 1) % num_el;
    out(0, j) += (flux(n - 1, left) - flux(0, j)) / w[0];
  }
  out *= 2.0 / mesh_.element_width();
}

double BurgersFullUpwind1D::step_speed(const VectorXd& u) const {
  return u.cwiseAbs().maxCoeff() / mesh_.element_width();
}

}  // namespace usbp
