#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "analysis/analysis.hpp"
#include "harness/experiments.hpp"
#include "semidisc/scalar1d.hpp"

using namespace usbp;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("l2_error_p basics") {
  const Mesh1D mesh{8, -1.0, 1.0};
  const NodeSet nodes = lgl_nodes(4);
  const int dof = 8 * 4;
  const VectorXd a = VectorXd::Random(dof);
  CHECK(l2_error_p(a, a, mesh, nodes.weights) == 0.0);
  // constant offset delta on a domain of length L gives delta sqrt(L)
  const VectorXd b = a.array() + 0.25;
  CHECK(l2_error_p(b, a, mesh, nodes.weights) ==
        doctest::Approx(0.25 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(l2_error_p(a, a.head(8), mesh, nodes.weights), std::invalid_argument);
}

TEST_CASE("operator assembly: self-consistency and kernel") {
  const auto semi = std::make_shared<AdvectionUsbp1D>(make_lgl_usbp(4, 0.0),
                                                      Mesh1D{1, -1.0, 1.0}, 1.0);
  const RhsFn rhs = [semi](const VectorXd& u, double t, VectorXd& out) {
    semi->rhs(u, t, out);
  };
  const MatrixXd a = assemble_linear_operator(rhs, semi->dof());
  // constants are in the kernel: row sums vanish
  CHECK((a * VectorXd::Ones(semi->dof())).cwiseAbs().maxCoeff() < 1e-12);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    VectorXd u(semi->dof());
    for (int i = 0; i < u.size(); ++i) u[i] = dist(rng);
    VectorXd direct;
    semi->rhs(u, 0.0, direct);
    CHECK((a * u - direct).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("assembly rejects nonlinear rhs") {
  const RhsFn quadratic = [](const VectorXd& u, double, VectorXd& out) {
    out = u.cwiseProduct(u);
  };
  CHECK_THROWS_AS(assemble_linear_operator(quadratic, 4), std::invalid_argument);
}

TEST_CASE("spectral radius grows with the dissipation parameter") {
  double previous = 0.0;
  for (double lam : {-1e-3, -1e-2, -1e-1, -1.0}) {
    const MatrixXd a = advection_operator(4, lam, 16);
    const SpectrumReport report = eigenvalues(a);
    CHECK(report.spectral_radius >= previous - 1e-9);
    previous = report.spectral_radius;
  }
}

TEST_CASE("jacobian_fd") {
  SUBCASE("matches the assembled operator for linear advection") {
    const auto semi = std::make_shared<AdvectionUsbp1D>(make_lgl_usbp(3, -0.5),
                                                        Mesh1D{4, -1.0, 1.0}, 1.0);
    const RhsFn rhs = [semi](const VectorXd& u, double t, VectorXd& out) {
      semi->rhs(u, t, out);
    };
    const MatrixXd a = assemble_linear_operator(rhs, semi->dof());
    const MatrixXd j = jacobian_fd(rhs, VectorXd::Random(semi->dof()), 1e-4);
    CHECK((a - j).cwiseAbs().maxCoeff() < 1e-9 * spectral_norm(a));
  }
  SUBCASE("two-step agreement for the quadratic burgers flux") {
    const auto semi = std::make_shared<BurgersFullUpwind1D>(make_lgl_usbp(4, -1e-2),
                                                            Mesh1D{4, -1.0, 1.0});
    const RhsFn rhs = [semi](const VectorXd& u, double t, VectorXd& out) {
      semi->rhs(u, t, out);
    };
    std::mt19937_64 rng(42);
    VectorXd u(semi->dof());
    std::uniform_real_distribution<double> dist(0.1, 1.1);
    for (int i = 0; i < u.size(); ++i) u[i] = dist(rng);
    const MatrixXd j1 = jacobian_fd(rhs, u, 1e-4);
    const MatrixXd j2 = jacobian_fd(rhs, u, 1e-5);
    CHECK((j1 - j2).cwiseAbs().maxCoeff() < 1e-10 * spectral_norm(j1) + 1e-10);
  }
  SUBCASE("burgers full-upwind jacobian is stable at a random nonnegative state") {
    const StabilitySample sample = burgers_stability_sample(4, -0.25, 8, 2024);
    CHECK(sample.max_real <= 1e-10 * sample.operator_norm);
  }
}

TEST_CASE("eigenvalues helper") {
  MatrixXd skew(4, 4);
  skew.setZero();
  skew(0, 1) = 2.0;
  skew(1, 0) = -2.0;
  skew(2, 3) = -0.7;
  skew(3, 2) = 0.7;
  const SpectrumReport s = eigenvalues(skew);
  CHECK(std::abs(s.max_real_part) <= 1e-12 * spectral_norm(skew));

  MatrixXd diag = MatrixXd::Zero(2, 2);
  diag(0, 0) = -1.0;
  diag(1, 1) = -2.0;
  const SpectrumReport d = eigenvalues(diag);
  CHECK(d.max_real_part == doctest::Approx(-1.0));
  CHECK(d.spectral_radius == doctest::Approx(2.0));
}

TEST_CASE("eoc table") {
  const auto rows = eoc_table({4, 8}, {1e-2, 1.25e-3});
  CHECK(std::isnan(rows[0].eoc));
  CHECK(rows[1].eoc == doctest::Approx(3.0).epsilon(1e-14));
  // scale invariance is exact
  const auto scaled = eoc_table({4, 8}, {7e-2, 8.75e-3});
  CHECK(scaled[1].eoc == rows[1].eoc);
  CHECK_THROWS_AS(eoc_table({4, 8}, {1e-2, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eoc_table({8, 4}, {1e-2, 1e-3}), std::invalid_argument);
}
