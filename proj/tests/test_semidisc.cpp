#include <doctest.h>

#include <random>

#include "harness/experiments.hpp"
#include "physics/problems.hpp"
#include "semidisc/curvilinear2d.hpp"
#include "semidisc/euler1d.hpp"
#include "semidisc/euler2d.hpp"
#include "semidisc/scalar1d.hpp"
#include "support/errors.hpp"

using namespace usbp;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("1d advection: constant preservation, upwind transfer, derivative accuracy") {
  SUBCASE("constant state gives zero rhs") {
    const AdvectionUsbp1D semi(make_lgl_usbp(4, -0.5), Mesh1D{8, -1.0, 1.0}, 1.0);
    VectorXd dudt;
    semi.rhs(VectorXd::Constant(semi.dof(), 3.25), 0.0, dudt);
    CHECK(dudt.cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("single periodic element differentiates the sine interpolant exactly") {
    const AdvectionUsbp1D semi(make_lgl_usbp(5, -1.0), Mesh1D{1, -1.0, 1.0}, 1.0);
    const VectorXd u = semi.sample(advection_sine);
    VectorXd dudt;
    semi.rhs(u, 0.0, dudt);
    // independent oracle: fit the degree-4 interpolant through the nodal
    // values via a Vandermonde solve and differentiate it analytically
    const VectorXd& x = semi.op().nodes();
    MatrixXd vander(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) vander(i, k) = std::pow(x[i], k);
    const VectorXd coef = vander.colPivHouseholderQr().solve(u);
    VectorXd interp_deriv(5);
    for (int i = 0; i < 5; ++i) {
      double d = 0.0;
      for (int k = 1; k < 5; ++k) d += k * coef[k] * std::pow(x[i], k - 1);
      interp_deriv[i] = d;
    }
    // the dissipation matrix annihilates the (odd) sine samples, so the rhs
    // is exactly the negated interpolant derivative
    CHECK((dudt + interp_deriv).cwiseAbs().maxCoeff() < 1e-12);
    // and that derivative carries the P_4 interpolation error of sin(pi x),
    // which shrinks to the spectral rate only under element refinement
    const VectorXd expected =
        semi.sample([](double x_) { return -M_PI * std::cos(M_PI * x_); });
    CHECK((dudt - expected).cwiseAbs().maxCoeff() ==
          doctest::Approx(1.586).epsilon(0.01));
  }
  SUBCASE("with f- = 0 the interface transfer is pure upwind") {
    const AdvectionUsbp1D semi(make_lgl_usbp(3, -1.0), Mesh1D{4, -1.0, 1.0}, 1.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorXd u(semi.dof());
    for (int i = 0; i < u.size(); ++i) u[i] = dist(rng);
    VectorXd base;
    semi.rhs(u, 0.0, base);
    // perturbing element 2 must not change the rhs inside element 1
    VectorXd v = u;
    for (int i = 2 * 3; i < 3 * 3; ++i) v[i] += 0.7;
    VectorXd pert;
    semi.rhs(v, 0.0, pert);
    for (int i = 1 * 3; i < 2 * 3; ++i) CHECK(pert[i] == base[i]);
  }
  SUBCASE("linearity") {
    const AdvectionUsbp1D semi(make_lgl_usbp(4, -0.1), Mesh1D{8, -1.0, 1.0}, 1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorXd u(semi.dof()), w(semi.dof());
    for (int i = 0; i < u.size(); ++i) {
      u[i] = dist(rng);
      w[i] = dist(rng);
    }
    VectorXd ru, rw, rc;
    semi.rhs(u, 0.0, ru);
    semi.rhs(w, 0.0, rw);
    semi.rhs(1.7 * u - 0.3 * w, 0.0, rc);
    CHECK((rc - (1.7 * ru - 0.3 * rw)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("1d conservation: quadrature sum of rhs telescopes to zero") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  SUBCASE("advection") {
    const AdvectionUsbp1D semi(make_lgl_usbp(5, -0.3), Mesh1D{6, -1.0, 1.0}, 1.0);
    VectorXd u(semi.dof());
    for (int i = 0; i < u.size(); ++i) u[i] = dist(rng);
    VectorXd dudt;
    semi.rhs(u, 0.0, dudt);
    const VectorXd& w = semi.op().weights();
    double total = 0.0;
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 5; ++i) total += 0.5 * semi.mesh().element_width() * w[i] *
                                           dudt[j * 5 + i];
    CHECK(std::abs(total) < 1e-12);
  }
  SUBCASE("euler, every splitting") {
    for (auto kind : {SplittingKind::LaxFriedrichs, SplittingKind::StegerWarming,
                      SplittingKind::VanLeerHaenel}) {
      const EulerUsbp1D semi(make_lgl_usbp(4, -0.2), Mesh1D{5, 0.0, 2.0}, kind, false,
                             4.0);
      const VectorXd u = semi.sample([&rng, &dist](double x) {
        return euler1::from_primitive(1.0 + 0.3 * std::sin(3.0 * x) + 0.1 * dist(rng),
                                      0.4 * std::cos(x), 1.5 + 0.2 * std::sin(x));
      });
      VectorXd dudt;
      semi.rhs(u, 0.0, dudt);
      const VectorXd& w = semi.op().weights();
      const int stride = 5 * 4;
      for (int v = 0; v < 3; ++v) {
        double total = 0.0;
        for (int j = 0; j < 5; ++j)
          for (int i = 0; i < 4; ++i)
            total += 0.5 * semi.mesh().element_width() * w[i] *
                     dudt[v * stride + j * 4 + i];
        INFO("splitting ", to_string(kind), " variable ", v);
        CHECK(std::abs(total) < 1e-12);
      }
    }
  }
}

TEST_CASE("burgers full-upwind scheme") {
  const BurgersFullUpwind1D semi(make_lgl_usbp(3, -1.0), Mesh1D{4, -1.0, 1.0});
  SUBCASE("conservation: quadrature sum of the rhs vanishes") {
    std::mt19937_64 rng(23);
    VectorXd u(semi.dof());
    for (int i = 0; i < u.size(); ++i) u[i] = random_nonnegative(rng);
    VectorXd dudt;
    semi.rhs(u, 0.0, dudt);
    const VectorXd& w = semi.op().weights();
    double total = 0.0;
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 3; ++i) total += 0.25 * w[i] * dudt[j * 3 + i];
    CHECK(std::abs(total) < 1e-13);
  }
  SUBCASE("constant state gives zero rhs") {
    VectorXd dudt;
    semi.rhs(VectorXd::Constant(semi.dof(), 2.0), 0.0, dudt);
    CHECK(dudt.cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("uses only the left-face coupling") {
    std::mt19937_64 rng(5);
    VectorXd u(semi.dof());
    for (int i = 0; i < u.size(); ++i) u[i] = random_nonnegative(rng);
    VectorXd base;
    semi.rhs(u, 0.0, base);
    // element 1 sees element 0, not element 2
    VectorXd v = u;
    for (int i = 2 * 3; i < 3 * 3; ++i) v[i] += 0.1;
    VectorXd pert;
    semi.rhs(v, 0.0, pert);
    for (int i = 3; i < 6; ++i) CHECK(pert[i] == base[i]);
  }
}

TEST_CASE("baseline central scheme") {
  SUBCASE("constant state gives zero rhs") {
    const BaselineAdvection1D semi(lagrange_sbp(lgl_nodes(5)), Mesh1D{4, -1.0, 1.0});
    VectorXd dudt;
    semi.rhs(VectorXd::Constant(semi.dof(), -1.75), 0.0, dudt);
    CHECK(dudt.cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("matches the upwind SAT scheme for S = 0 advection") {
    const Mesh1D mesh{6, -1.0, 1.0};
    const UsbpPair central_pair = make_lgl_usbp(4, 0.0);
    const AdvectionUsbp1D upwind(central_pair, mesh, 1.0);
    const BaselineAdvection1D baseline(central_pair.base, mesh);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VectorXd u(upwind.dof());
    for (int i = 0; i < u.size(); ++i) u[i] = dist(rng);
    VectorXd a, b;
    upwind.rhs(u, 0.0, a);
    baseline.rhs(u, 0.0, b);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("degree-3 sine advection converges at fourth order") {
    const double e16 = run_advection_baseline_error(4, 16, 0.1, 5.0);
    const double e32 = run_advection_baseline_error(4, 32, 0.1, 5.0);
    CHECK(std::log2(e16 / e32) == doctest::Approx(4.0).epsilon(0.08));
  }
}

TEST_CASE("manufactured euler rhs is consistent with the exact time derivative") {
  // rhs(exact state) should approximate d_t u* = (h_t, h_t, 2 h h_t)
  const EulerUsbp1D semi(make_lgl_usbp(5, -1e-3), Mesh1D{32, 0.0, 2.0},
                         SplittingKind::VanLeerHaenel, true);
  const double t = 0.4;
  const VectorXd u =
      semi.sample([t](double x) { return manufactured::exact_state(t, x); });
  VectorXd dudt;
  semi.rhs(u, t, dudt);
  const double eps = 1e-7;
  const VectorXd fwd =
      semi.sample([t, eps](double x) { return manufactured::exact_state(t + eps, x); });
  const VectorXd bwd =
      semi.sample([t, eps](double x) { return manufactured::exact_state(t - eps, x); });
  const VectorXd exact_rate = (fwd - bwd) / (2.0 * eps);
  CHECK((dudt - exact_rate).cwiseAbs().maxCoeff() < 1e-4);  // discretization error
}

TEST_CASE("simulation abort carries the offending location") {
  const EulerUsbp1D semi(make_lgl_usbp(3, -1.0), Mesh1D{4, 0.0, 2.0},
                         SplittingKind::StegerWarming);
  VectorXd u = semi.sample([](double) { return euler1::from_primitive(1.0, 0.5, 1.0); });
  const int stride = 4 * 3;
  u[2 * 3 + 1] = -0.3;  // negative density in element 2, node 1
  (void)stride;
  VectorXd dudt;
  try {
    semi.rhs(u, 1.5, dudt);
    FAIL("expected SimulationAbort");
  } catch (const SimulationAbort& abort) {
    CHECK(abort.time == 1.5);
    CHECK(abort.element == 2);
    CHECK(abort.node == 1);
  }
  int element = -1, node = -1;
  CHECK_FALSE(semi.admissible(u, &element, &node));
  CHECK(element == 2);
  CHECK(node == 1);
}

TEST_CASE("2d cartesian: free stream, row-wise 1d reduction, rhs probe") {
  const Box2D box{-1.0, 1.0, -1.0, 1.0, 3, 2};
  SUBCASE("free-stream constant gives zero rhs for every splitting") {
    for (auto kind : {SplittingKind::LaxFriedrichs, SplittingKind::StegerWarming,
                      SplittingKind::VanLeerHaenel}) {
      const EulerCartesian2D semi(make_lgl_usbp(4, -1.0), box, kind, 6.0);
      const VectorXd u = semi.sample([](double, double) { return free_stream(); });
      VectorXd dudt;
      semi.rhs(u, 0.0, dudt);
      INFO("splitting ", to_string(kind));
      CHECK(dudt.cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("baseline scheme preserves the free stream too") {
    const BaselineEulerCartesian2D semi(lagrange_sbp(lgl_nodes(4)), box);
    const EulerCartesian2D helper(make_lgl_usbp(4, 0.0), box,
                                  SplittingKind::LaxFriedrichs, 0.0);
    const VectorXd u = helper.sample([](double, double) { return free_stream(); });
    VectorXd dudt;
    semi.rhs(u, 0.0, dudt);
    CHECK(dudt.cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("y-constant data reduces to the 1d scheme row-wise") {
    const int n = 4;
    const Box2D wide{0.0, 2.0, 0.0, 2.0, 4, 3};
    const EulerCartesian2D semi2(make_lgl_usbp(n, -0.4), wide,
                                 SplittingKind::VanLeerHaenel, 0.0);
    const EulerUsbp1D semi1(make_lgl_usbp(n, -0.4), Mesh1D{4, 0.0, 2.0},
                            SplittingKind::VanLeerHaenel);
    auto profile = [](double x) {
      return euler1::from_primitive(2.0 + 0.1 * std::sin(M_PI * x), 1.0,
                                    2.0 + 0.05 * std::cos(M_PI * x));
    };
    const VectorXd u2 = semi2.sample([&profile](double x, double) {
      const Vec3 s = profile(x);
      return Vec4(s[0], s[1], 0.0, s[2]);
    });
    const VectorXd u1 = semi1.sample(profile);
    VectorXd r2, r1;
    semi2.rhs(u2, 0.0, r2);
    semi1.rhs(u1, 0.0, r1);
    const int total2 = semi2.total_nodes();
    const int stride1 = 4 * n;
    double worst = 0.0;
    for (int ex = 0; ex < 4; ++ex) {
      for (int a = 0; a < n; ++a) {
        // all eta rows and elements must agree with the 1d value
        for (int ey = 0; ey < 3; ++ey) {
          for (int b = 0; b < n; ++b) {
            const int idx2 = (ex * 3 + ey) * n * n + a + n * b;
            for (int v1 = 0; v1 < 3; ++v1) {
              const int v2 = v1 == 0 ? 0 : (v1 == 1 ? 1 : 3);
              worst = std::max(worst, std::abs(r2[v2 * total2 + idx2] -
                                               r1[v1 * stride1 + ex * n + a]));
            }
          }
        }
      }
    }
    CHECK(worst < 1e-13);
  }
  SUBCASE("time-derivative probe agrees with a tiny forward-Euler step") {
    const Box2D vbox{-5.0, 5.0, -5.0, 5.0, 4, 4};
    const EulerCartesian2D semi(make_lgl_usbp(4, -1e-3), vbox,
                                SplittingKind::StegerWarming, 0.0);
    const VectorXd u0 = semi.sample(isentropic_vortex);
    VectorXd dudt;
    semi.rhs(u0, 0.0, dudt);
    const double dt = 1e-8;
    VectorXd k1;
    semi.rhs(u0, 0.0, k1);
    const VectorXd u1 = u0 + dt * k1;
    VectorXd k2;
    semi.rhs(u1, dt, k2);
    const VectorXd fd = (u1 + dt * k2 - u0) / (2.0 * dt);  // two-step probe
    CHECK((fd - dudt).cwiseAbs().maxCoeff() / dudt.cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("warped mesh construction") {
  const SbpOperator op = lagrange_sbp(lgl_nodes(4));
  SUBCASE("amplitude zero is the identity map with constant jacobian") {
    const CurvilinearMesh2D mesh = build_warped_mesh(3, 2, 2, 0.0, op);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      CHECK((mesh.jac[e].array() - mesh.jac[0](0, 0)).abs().maxCoeff() < 1e-15);
      CHECK(mesh.x_eta[e].cwiseAbs().maxCoeff() < 1e-15);
      CHECK(mesh.y_xi[e].cwiseAbs().maxCoeff() < 1e-15);
    }
    CHECK(mesh.jac[0](0, 0) == doctest::Approx(1.0 / (6.0 * 4.0)).epsilon(1e-12));
  }
  SUBCASE("bilinear warp has affine metric structure along lines") {
    const CurvilinearMesh2D mesh = build_warped_mesh(2, 2, 1, 0.05, op);
    // X_xi of a bilinear map is constant in xi and affine in eta
    for (int e = 0; e < 4; ++e) {
      for (int b = 0; b < 4; ++b)
        CHECK((mesh.x_xi[e].col(b).array() - mesh.x_xi[e](0, b)).abs().maxCoeff() <
              1e-13);
    }
  }
  SUBCASE("metric identities hold discretely for any geometry degree") {
    for (int n_geo : {1, 2, 3, 4}) {
      const CurvilinearMesh2D mesh = build_warped_mesh(3, 3, n_geo, 0.06, op);
      for (double r : mesh.metric_identity_residual) CHECK(r < 1e-13);
      CHECK(mesh.min_jacobian > 0.0);
    }
  }
  SUBCASE("jacobian positivity across a dense sample grid") {
    const CurvilinearMesh2D mesh = build_warped_mesh(4, 4, 2, 0.08, op);
    // interpolate the nodal jacobian on a 50x50 grid per element
    const VectorXd& nodes = op.nodes.nodes;
    double min_jac = std::numeric_limits<double>::infinity();
    for (int e = 0; e < mesh.num_elements(); ++e) {
      for (int p = 0; p < 50; ++p) {
        const double xi = -1.0 + 2.0 * p / 49.0;
        const VectorXd lx = lagrange_values(nodes, xi);
        for (int q = 0; q < 50; ++q) {
          const double eta = -1.0 + 2.0 * q / 49.0;
          const VectorXd le = lagrange_values(nodes, eta);
          min_jac = std::min(min_jac, lx.dot(mesh.jac[e] * le));
        }
      }
    }
    CHECK(min_jac > 0.0);
  }
  SUBCASE("excessive amplitude raises a mesh error") {
    CHECK_THROWS_AS(build_warped_mesh(4, 4, 2, 0.9, op), MeshError);
  }
}

TEST_CASE("2d curvilinear: identity-map reduction and free-stream preservation") {
  SUBCASE("identity mapping reproduces the cartesian rhs (lax-friedrichs)") {
    const int n = 4;
    const UsbpPair pair = make_lgl_usbp(n, -0.6);
    const CurvilinearMesh2D mesh = build_warped_mesh(3, 3, 1, 0.0, pair.base);
    const double lambda = 5.0;
    const EulerCurvilinear2D curv(pair, mesh, SplittingKind::LaxFriedrichs, lambda,
                                  Boundary2D::Periodic);
    const Box2D box{0.0, 1.0, 0.0, 1.0, 3, 3};
    // the cartesian scheme's global LF constant must match the curvilinear
    // per-element scale lambda * max||k|| = lambda * hy/2
    const EulerCartesian2D cart(pair, box, SplittingKind::LaxFriedrichs, lambda);
    auto field = [](double x, double y) {
      return euler2::from_primitive(1.0 + 0.2 * std::sin(2 * M_PI * x) * std::cos(2 * M_PI * y),
                                    0.3 * std::cos(2 * M_PI * y), -0.2 * std::sin(2 * M_PI * x),
                                    1.0 + 0.1 * std::cos(2 * M_PI * x));
    };
    const VectorXd uc = curv.sample(field);
    const VectorXd ub = cart.sample(field);
    CHECK((uc - ub).cwiseAbs().maxCoeff() < 1e-14);
    VectorXd rc, rb;
    curv.rhs(uc, 0.0, rc);
    cart.rhs(ub, 0.0, rb);
    CHECK((rc - rb).cwiseAbs().maxCoeff() < 1e-11 * rb.cwiseAbs().maxCoeff());
  }
  SUBCASE("element of size 2 matches cartesian for vlh too") {
    const int n = 3;
    const UsbpPair pair = make_lgl_usbp(n, -0.5);
    CurvilinearMesh2D mesh = build_warped_mesh(1, 1, 1, 0.0, pair.base);
    // rescale the unit-box identity map onto [-1,1]^2
    for (auto* field : {&mesh.x, &mesh.y})
      for (auto& m : *field) m = (2.0 * m.array() - 1.0).matrix();
    for (auto* field : {&mesh.x_xi, &mesh.x_eta, &mesh.y_xi, &mesh.y_eta})
      for (auto& m : *field) m *= 2.0;
    for (auto& m : mesh.jac) m *= 4.0;
    const EulerCurvilinear2D curv(pair, mesh, SplittingKind::VanLeerHaenel, 0.0,
                                  Boundary2D::Periodic);
    const Box2D box{-1.0, 1.0, -1.0, 1.0, 1, 1};
    const EulerCartesian2D cart(pair, box, SplittingKind::VanLeerHaenel, 0.0);
    auto field = [](double x, double y) {
      return euler2::from_primitive(1.0 + 0.1 * std::sin(M_PI * x), 0.2, 0.1 * y, 1.5);
    };
    const VectorXd u = curv.sample(field);
    VectorXd rc, rb;
    curv.rhs(u, 0.0, rc);
    cart.rhs(cart.sample(field), 0.0, rb);
    CHECK((rc - rb).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + rb.cwiseAbs().maxCoeff()));
  }
  SUBCASE("free stream: lax-friedrichs preserved, vlh dichotomy cases") {
    const FspResult lf = free_stream_residual(3, -1.0, 4, SplittingKind::LaxFriedrichs,
                                              0.06, 2, 2);
    CHECK(lf.rhs_inf < 1e-11);
    const FspResult bad = free_stream_residual(3, -1.0, 2, SplittingKind::VanLeerHaenel,
                                               0.06, 2, 2);
    CHECK(bad.rhs_inf > 1e-8);
    const FspResult good = free_stream_residual(6, -1.0, 2, SplittingKind::VanLeerHaenel,
                                                0.06, 2, 2);
    CHECK(good.rhs_inf < 1e-11);
  }
}

TEST_CASE("upwind dissipativity: assembled advection operator spectrum") {
  const Eigen::MatrixXd a = advection_operator(4, -0.5, 6);
  const SpectrumReport report = eigenvalues(a);
  CHECK(report.max_real_part <= 1e-10 * spectral_norm(a));
}

TEST_CASE("semi-discretizations reject boundary-excluding node sets") {
  const UsbpPair gauss = make_usbp(gauss_legendre_nodes(4),
                                   DissipationSpec::top_mode(4, -1.0));
  CHECK_THROWS_AS(AdvectionUsbp1D(gauss, Mesh1D{4, -1.0, 1.0}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(EulerUsbp1D(gauss, Mesh1D{4, 0.0, 2.0}, SplittingKind::VanLeerHaenel),
                  std::invalid_argument);
  CHECK_THROWS_AS(EulerCartesian2D(gauss, Box2D{-1.0, 1.0, -1.0, 1.0, 2, 2},
                                   SplittingKind::LaxFriedrichs, 5.0),
                  std::invalid_argument);
}
