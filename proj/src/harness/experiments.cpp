#include "harness/experiments.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <random>

#include <json.hpp>

#include "harness/csv.hpp"
#include "operators/operator_io.hpp"
#include "operators/verify.hpp"
#include "physics/problems.hpp"
#include "semidisc/euler1d.hpp"
#include "semidisc/scalar1d.hpp"
#include "support/errors.hpp"

namespace usbp {

using Eigen::VectorXd;
using nlohmann::json;

namespace {

std::string header_json(const ExperimentConfig& config) {
  json doc = json::parse(config_to_json(config));
  doc["version"] = artifact_version();
  return doc.dump();
}

std::string default_out(const ExperimentConfig& config) {
  if (!config.out.empty()) return config.out;
  if (config.experiment == Experiment::OperatorDump)
    return to_string(config.experiment) + ".json";
  return to_string(config.experiment) + ".csv";
}

// final-state snapshot for the 2D runs (crashed states are results too)
void write_state_2d(const std::string& path, const ExperimentConfig& config,
                    const UsbpPair& op, const Box2D& box, const Eigen::VectorXd& state) {
  const int n = op.size();
  const int total = box.jx * box.jy * n * n;
  std::vector<double> xs(total), ys(total);
  for (int ex = 0; ex < box.jx; ++ex)
    for (int ey = 0; ey < box.jy; ++ey)
      for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
          const int idx = (ex * box.jy + ey) * n * n + a + n * b;
          xs[idx] = box.node_x(ex, op.nodes()[a]);
          ys[idx] = box.node_y(ey, op.nodes()[b]);
        }
  write_snapshot_csv(path, config_to_json(config), box.jx * box.jy, n,
                     {"rho", "rho_v1", "rho_v2", "rho_e"}, xs, ys,
                     {state.data(), state.data() + total, state.data() + 2 * total,
                      state.data() + 3 * total});
}

OdeSystem euler2d_system(const EulerCartesian2D& scheme) {
  OdeSystem sys;
  sys.rhs = [&scheme](const VectorXd& u, double t, VectorXd& out) {
    scheme.rhs(u, t, out);
  };
  sys.step_speed = [&scheme](const VectorXd& u) { return scheme.step_speed(u); };
  sys.check_admissible = [&scheme](const VectorXd& u, CrashInfo* info) {
    int element = -1, node = -1;
    if (scheme.admissible(u, &element, &node)) return true;
    if (info) *info = CrashInfo{0.0, element, node, "nonpositive density or pressure"};
    return false;
  };
  sys.diagnostics = [&scheme](double t, double dt, const VectorXd& u) {
    DiagnosticsRow row;
    row.t = t;
    row.dt = dt;
    row.kinetic_energy = scheme.kinetic_energy(u);
    const int total = scheme.total_nodes();
    double min_rho = std::numeric_limits<double>::infinity();
    double min_p = min_rho;
    for (int idx = 0; idx < total; ++idx) {
      const Vec4 s(u[idx], u[total + idx], u[2 * total + idx], u[3 * total + idx]);
      min_rho = std::min(min_rho, s[0]);
      min_p = std::min(min_p, euler2::pressure(s));
    }
    row.min_density = min_rho;
    row.min_pressure = min_p;
    return row;
  };
  sys.nodes_per_direction = scheme.op().size();
  return sys;
}

double lf_lambda_from_field(const EulerCartesian2D& scheme, const VectorXd& u0) {
  const int total = scheme.total_nodes();
  double peak = 0.0;
  for (int idx = 0; idx < total; ++idx) {
    const Vec4 s(u0[idx], u0[total + idx], u0[2 * total + idx], u0[3 * total + idx]);
    peak = std::max(peak, std::hypot(s[1], s[2]) / s[0] + euler2::sound_speed(s));
  }
  return 1.2 * peak;
}

}  // namespace

double run_advection_error(int n, double lambda, int elements, double cfl, double t_end,
                           TimeScheme scheme) {
  const AdvectionUsbp1D semi(make_lgl_usbp(n, lambda), Mesh1D{elements, -1.0, 1.0}, 1.0);
  OdeSystem sys;
  sys.rhs = [&semi](const VectorXd& u, double t, VectorXd& out) { semi.rhs(u, t, out); };
  sys.step_speed = [&semi](const VectorXd& u) { return semi.step_speed(u); };
  sys.nodes_per_direction = n;
  IntegratorConfig config;
  config.scheme = scheme;
  config.cfl = cfl;
  config.t_end = t_end;
  config.abort_on_inadmissible = false;
  const IntegrateResult result = integrate(sys, semi.sample(advection_sine), config);
  const VectorXd exact =
      semi.sample([t_end](double x) { return std::sin(M_PI * (x - t_end)); });
  return l2_error_p(result.state, exact, semi.mesh(), semi.op().weights(), 1);
}

double run_advection_baseline_error(int n, int elements, double cfl, double t_end) {
  const BaselineAdvection1D semi(lagrange_sbp(lgl_nodes(n)), Mesh1D{elements, -1.0, 1.0});
  OdeSystem sys;
  sys.rhs = [&semi](const VectorXd& u, double t, VectorXd& out) { semi.rhs(u, t, out); };
  sys.step_speed = [&semi](const VectorXd& u) { return semi.step_speed(u); };
  sys.nodes_per_direction = n;
  IntegratorConfig config;
  config.cfl = cfl;
  config.t_end = t_end;
  config.abort_on_inadmissible = false;
  const IntegrateResult result = integrate(sys, semi.sample(advection_sine), config);
  const VectorXd exact =
      semi.sample([t_end](double x) { return std::sin(M_PI * (x - t_end)); });
  return l2_error_p(result.state, exact, semi.mesh(), semi.op().P.diagonal(), 1);
}

double run_euler_manufactured_error(int n, double lambda, SplittingKind splitting,
                                    int elements, double cfl) {
  double lambda_lf = 0.0;
  if (splitting == SplittingKind::LaxFriedrichs) {
    // global bound, frozen for the run: 1.2 * max over the initial condition
    // of |v| + c, with v = 1 and c^2 = gamma(gamma-1)(h - 1/2) at h_max = 2.1
    lambda_lf = 1.2 * (1.0 + std::sqrt(kGamma * (kGamma - 1.0) * (2.1 - 0.5)));
  }
  const EulerUsbp1D semi(make_lgl_usbp(n, lambda), Mesh1D{elements, 0.0, 2.0}, splitting,
                         /*manufactured_source=*/true, lambda_lf);
  OdeSystem sys;
  sys.rhs = [&semi](const VectorXd& u, double t, VectorXd& out) { semi.rhs(u, t, out); };
  sys.step_speed = [&semi](const VectorXd& u) { return semi.step_speed(u); };
  sys.check_admissible = [&semi](const VectorXd& u, CrashInfo* info) {
    int element = -1, node = -1;
    if (semi.admissible(u, &element, &node)) return true;
    if (info) *info = CrashInfo{0.0, element, node, "nonpositive density or pressure"};
    return false;
  };
  sys.nodes_per_direction = n;
  IntegratorConfig config;
  config.cfl = cfl;
  config.t_end = 2.0;
  const IntegrateResult result =
      integrate(sys, semi.sample([](double x) { return manufactured::exact_state(0.0, x); }),
                config);
  if (!result.completed) throw ConstructionError("manufactured Euler run crashed");
  const VectorXd exact =
      semi.sample([](double x) { return manufactured::exact_state(2.0, x); });
  return l2_error_p(result.state, exact, semi.mesh(), semi.op().weights(), 3);
}

Eigen::MatrixXd advection_operator(int n, double lambda, int elements) {
  const auto semi = std::make_shared<AdvectionUsbp1D>(
      make_lgl_usbp(n, lambda), Mesh1D{elements, -1.0, 1.0}, 1.0);
  const RhsFn rhs = [semi](const VectorXd& u, double t, VectorXd& out) {
    semi->rhs(u, t, out);
  };
  return assemble_linear_operator(rhs, semi->dof());
}

StabilitySample burgers_stability_sample(int n, double lambda, int elements,
                                         unsigned long seed) {
  const BurgersFullUpwind1D semi(make_lgl_usbp(n, lambda), Mesh1D{elements, -1.0, 1.0});
  std::mt19937_64 rng(seed);
  VectorXd state(semi.dof());
  for (int i = 0; i < state.size(); ++i) state[i] = random_nonnegative(rng);
  const RhsFn rhs = [&semi](const VectorXd& u, double t, VectorXd& out) {
    semi.rhs(u, t, out);
  };
  const Eigen::MatrixXd jac = jacobian_fd(rhs, state, 1e-5);
  StabilitySample sample;
  sample.max_real = eigenvalues(jac).max_real_part;
  sample.operator_norm = spectral_norm(jac);
  return sample;
}

FspResult free_stream_residual(int n, double lambda, int n_geo, SplittingKind splitting,
                               double amplitude, int jx, int jy) {
  const UsbpPair pair = make_lgl_usbp(n, lambda);
  const CurvilinearMesh2D mesh = build_warped_mesh(jx, jy, n_geo, amplitude, pair.base);
  const Vec4 background = free_stream();
  const double lambda_lf =
      1.2 * (std::hypot(background[1], background[2]) / background[0] +
             euler2::sound_speed(background));
  const EulerCurvilinear2D semi(pair, mesh, splitting, lambda_lf,
                                Boundary2D::DirichletBackground, background);
  const VectorXd u0 = semi.sample([](double, double) { return free_stream(); });
  VectorXd dudt;
  semi.rhs(u0, 0.0, dudt);
  FspResult result;
  result.rhs_inf = dudt.cwiseAbs().maxCoeff();
  result.min_jacobian = mesh.min_jacobian;
  result.max_metric_residual = 0.0;
  for (double r : mesh.metric_identity_residual)
    result.max_metric_residual = std::max(result.max_metric_residual, r);
  return result;
}

namespace {

Run2DResult run_cartesian_2d(const EulerCartesian2D& semi, const VectorXd& u0,
                             TimeScheme scheme, double cfl, double t_end,
                             int diag_stride) {
  OdeSystem sys = euler2d_system(semi);
  IntegratorConfig config;
  config.scheme = scheme;
  config.cfl = cfl;
  config.t_end = t_end;
  config.diagnostics_stride = diag_stride;
  const IntegrateResult r = integrate(sys, u0, config);
  Run2DResult result;
  result.completed = r.completed;
  result.final_time = r.t_final;
  result.steps = r.steps;
  result.diagnostics = r.diagnostics;
  if (r.crash) result.crash = *r.crash;
  result.kinetic_energy_final = semi.kinetic_energy(r.state);
  result.final_state = r.state;
  return result;
}

}  // namespace

Run2DResult run_isentropic_vortex(int n, double lambda, SplittingKind splitting,
                                  int elements_per_dir, double cfl, double t_end,
                                  int diag_stride) {
  const Box2D box{-5.0, 5.0, -5.0, 5.0, elements_per_dir, elements_per_dir};
  EulerCartesian2D semi(make_lgl_usbp(n, lambda), box, splitting, 0.0);
  const VectorXd u0 = semi.sample(isentropic_vortex);
  if (splitting == SplittingKind::LaxFriedrichs) {
    EulerCartesian2D probe(make_lgl_usbp(n, lambda), box, splitting,
                           lf_lambda_from_field(semi, u0));
    semi = probe;
  }
  Run2DResult result = run_cartesian_2d(semi, u0, TimeScheme::RK4Classic, cfl, t_end,
                                        diag_stride);
  if (result.completed) {
    result.density_error = semi.l2_error(
        result.final_state,
        [t_end](double x, double y) { return isentropic_vortex_exact(t_end, x, y); },
        /*density_only=*/true);
  }
  return result;
}

Run2DResult run_isentropic_vortex_baseline(int n, int elements_per_dir, double cfl,
                                           double t_end) {
  const Box2D box{-5.0, 5.0, -5.0, 5.0, elements_per_dir, elements_per_dir};
  const BaselineEulerCartesian2D semi(lagrange_sbp(lgl_nodes(n)), box);
  OdeSystem sys;
  sys.rhs = [&semi](const VectorXd& u, double t, VectorXd& out) { semi.rhs(u, t, out); };
  sys.step_speed = [&semi](const VectorXd& u) { return semi.step_speed(u); };
  sys.check_admissible = [&semi](const VectorXd& u, CrashInfo* info) {
    int element = -1, node = -1;
    if (semi.admissible(u, &element, &node)) return true;
    if (info) *info = CrashInfo{0.0, element, node, "nonpositive density or pressure"};
    return false;
  };
  sys.nodes_per_direction = n;
  IntegratorConfig config;
  config.cfl = cfl;
  config.t_end = t_end;
  const IntegrateResult r = integrate(sys, semi.sample(isentropic_vortex), config);
  Run2DResult result;
  result.completed = r.completed;
  result.final_time = r.t_final;
  result.steps = r.steps;
  if (r.crash) result.crash = *r.crash;
  if (r.completed)
    result.density_error = semi.l2_error(
        r.state,
        [t_end](double x, double y) { return isentropic_vortex_exact(t_end, x, y); },
        /*density_only=*/true);
  return result;
}

Run2DResult run_kelvin_helmholtz(int n, double lambda, SplittingKind splitting,
                                 int elements_per_dir, double cfl, double t_end,
                                 int diag_stride) {
  const Box2D box{-1.0, 1.0, -1.0, 1.0, elements_per_dir, elements_per_dir};
  EulerCartesian2D semi(make_lgl_usbp(n, lambda), box, splitting, 0.0);
  const VectorXd u0 = semi.sample(kelvin_helmholtz);
  if (splitting == SplittingKind::LaxFriedrichs) {
    EulerCartesian2D probe(make_lgl_usbp(n, lambda), box, splitting,
                           lf_lambda_from_field(semi, u0));
    semi = probe;
  }
  return run_cartesian_2d(semi, u0, TimeScheme::SSP33, cfl, t_end, diag_stride);
}

namespace {

ExperimentResult run_convergence(const ExperimentConfig& config) {
  const bool euler = config.experiment == Experiment::ConvergenceEuler;
  CsvWriter csv(default_out(config), header_json(config), {"J", "l2_error", "eoc"});
  auto one = [&config, euler](int j) {
    return euler ? run_euler_manufactured_error(config.n, config.lambda, config.splitting,
                                                j, config.cfl)
                 : run_advection_error(config.n, config.lambda, j, config.cfl,
                                       config.t_end, config.scheme);
  };
  const std::vector<int> elements = config.j_list;
  std::vector<double> errors(elements.size());
  if (config.parallel) {
    std::vector<std::future<double>> futures;
    for (int j : elements)
      futures.push_back(std::async(std::launch::async, one, j));
    for (size_t i = 0; i < futures.size(); ++i) errors[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < elements.size(); ++i) errors[i] = one(elements[i]);
  }
  const auto rows = eoc_table(elements, errors);
  json summary;
  summary["rows"] = json::array();
  for (const auto& row : rows) {
    csv.row({CsvWriter::format(row.elements), CsvWriter::format(row.l2_error),
             std::isnan(row.eoc) ? "" : CsvWriter::format(row.eoc)});
    summary["rows"].push_back({{"J", row.elements},
                               {"l2_error", row.l2_error},
                               {"eoc", std::isnan(row.eoc) ? 0.0 : row.eoc}});
  }
  return {0, summary.dump(), {csv.path()}};
}

ExperimentResult run_spectrum(const ExperimentConfig& config) {
  CsvWriter csv(default_out(config), header_json(config), {"re", "im"});
  const Eigen::MatrixXd a =
      advection_operator(config.n, config.lambda, config.j_list.front());
  const SpectrumReport report = eigenvalues(a);
  for (const auto& ev : report.eigenvalues)
    csv.row({CsvWriter::format(ev.real()), CsvWriter::format(ev.imag())});
  json summary;
  summary["max_real_part"] = report.max_real_part;
  summary["spectral_radius"] = report.spectral_radius;
  summary["operator_norm"] = spectral_norm(a);
  return {0, summary.dump(), {csv.path()}};
}

ExperimentResult run_local_stability(const ExperimentConfig& config) {
  CsvWriter csv(default_out(config), header_json(config),
                {"N", "J", "lambda", "state", "max_real", "operator_norm", "normalized"});
  double worst = -std::numeric_limits<double>::infinity();
  for (int j : config.j_list) {
    for (int state = 0; state < 10; ++state) {
      const StabilitySample sample = burgers_stability_sample(
          config.n, config.lambda, j, config.seed + 1000ul * j + state);
      const double normalized = sample.max_real / sample.operator_norm;
      worst = std::max(worst, normalized);
      csv.row({CsvWriter::format(config.n), CsvWriter::format(j),
               CsvWriter::format(config.lambda), CsvWriter::format(state),
               CsvWriter::format(sample.max_real), CsvWriter::format(sample.operator_norm),
               CsvWriter::format(normalized)});
    }
  }
  json summary;
  summary["worst_normalized_max_real"] = worst;
  return {0, summary.dump(), {csv.path()}};
}

ExperimentResult run_free_stream(const ExperimentConfig& config) {
  CsvWriter csv(default_out(config), header_json(config),
                {"N", "n_geo", "splitting", "rhs_inf", "min_jacobian", "metric_residual"});
  json summary = json::array();
  const int jd = std::max(1, static_cast<int>(std::lround(
                      std::sqrt(double(config.j_list.front())))));
  for (int n_geo : config.n_geo) {
    const FspResult r = free_stream_residual(config.n, config.lambda, n_geo,
                                             config.splitting, config.amplitude, jd, jd);
    csv.row({CsvWriter::format(config.n), CsvWriter::format(n_geo),
             to_string(config.splitting), CsvWriter::format(r.rhs_inf),
             CsvWriter::format(r.min_jacobian), CsvWriter::format(r.max_metric_residual)});
    summary.push_back({{"n_geo", n_geo}, {"rhs_inf", r.rhs_inf}});
  }
  return {0, summary.dump(), {csv.path()}};
}

ExperimentResult run_vortex(const ExperimentConfig& config) {
  const int jd = static_cast<int>(std::lround(std::sqrt(double(config.j_list.front()))));
  CsvWriter csv(default_out(config), header_json(config),
                {"method", "completed", "final_time", "steps", "density_l2_error"});
  const Run2DResult usbp_run = run_isentropic_vortex(
      config.n, config.lambda, config.splitting, jd, config.cfl, config.t_end);
  csv.row({"dg-usbp", usbp_run.completed ? "1" : "0",
           CsvWriter::format(usbp_run.final_time), CsvWriter::format(usbp_run.steps),
           CsvWriter::format(usbp_run.density_error)});
  json summary;
  summary["usbp"] = {{"completed", usbp_run.completed},
                     {"density_error", usbp_run.density_error}};
  if (config.baseline) {
    const Run2DResult base =
        run_isentropic_vortex_baseline(config.n, jd, config.cfl, config.t_end);
    csv.row({"baseline-central", base.completed ? "1" : "0",
             CsvWriter::format(base.final_time), CsvWriter::format(base.steps),
             CsvWriter::format(base.density_error)});
    summary["baseline"] = {{"completed", base.completed},
                           {"density_error", base.density_error}};
  }
  // diagnostics time series and final-state snapshot alongside the summary
  const std::string series = default_out(config) + ".series.csv";
  CsvWriter diag(series, header_json(config),
                 {"t", "dt", "e_kin", "dissipation_rate", "min_rho", "min_p"});
  const std::vector<double> rate = dissipation_rate(usbp_run.diagnostics);
  for (size_t i = 0; i < usbp_run.diagnostics.size(); ++i) {
    const auto& row = usbp_run.diagnostics[i];
    diag.row({CsvWriter::format(row.t), CsvWriter::format(row.dt),
              CsvWriter::format(row.kinetic_energy),
              rate.empty() ? "" : CsvWriter::format(rate[i]),
              CsvWriter::format(row.min_density), CsvWriter::format(row.min_pressure)});
  }
  const std::string snapshot = default_out(config) + ".state.csv";
  const Box2D box{-5.0, 5.0, -5.0, 5.0, jd, jd};
  write_state_2d(snapshot, config, make_lgl_usbp(config.n, config.lambda), box,
                 usbp_run.final_state);
  return {0, summary.dump(), {csv.path(), series, snapshot}};
}

ExperimentResult run_kh(const ExperimentConfig& config) {
  CsvWriter csv(default_out(config), header_json(config),
                {"N", "J", "lambda", "splitting", "status", "final_time", "steps",
                 "crash_element", "crash_node"});
  json summary = json::array();
  std::vector<std::string> outputs = {csv.path()};
  auto one = [&config](int j) {
    const int jd = static_cast<int>(std::lround(std::sqrt(double(j))));
    return run_kelvin_helmholtz(config.n, config.lambda, config.splitting, jd, config.cfl,
                                config.t_end);
  };
  std::vector<Run2DResult> results(config.j_list.size());
  if (config.parallel) {
    std::vector<std::future<Run2DResult>> futures;
    for (int j : config.j_list)
      futures.push_back(std::async(std::launch::async, one, j));
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < config.j_list.size(); ++i) results[i] = one(config.j_list[i]);
  }
  for (size_t i = 0; i < config.j_list.size(); ++i) {
    const int j = config.j_list[i];
    const int jd = static_cast<int>(std::lround(std::sqrt(double(j))));
    const Run2DResult& r = results[i];
    csv.row({CsvWriter::format(config.n), CsvWriter::format(j),
             CsvWriter::format(config.lambda), to_string(config.splitting),
             r.completed ? "finished" : "crashed", CsvWriter::format(r.final_time),
             CsvWriter::format(r.steps),
             CsvWriter::format(r.completed ? -1 : r.crash.element),
             CsvWriter::format(r.completed ? -1 : r.crash.node)});
    summary.push_back({{"J", j},
                       {"status", r.completed ? "finished" : "crashed"},
                       {"final_time", r.final_time}});
    const std::string series =
        default_out(config) + ".J" + std::to_string(j) + ".series.csv";
    CsvWriter diag(series, header_json(config),
                   {"t", "dt", "e_kin", "dissipation_rate", "min_rho", "min_p"});
    const std::vector<double> rate = dissipation_rate(r.diagnostics);
    for (size_t i = 0; i < r.diagnostics.size(); ++i) {
      const auto& row = r.diagnostics[i];
      diag.row({CsvWriter::format(row.t), CsvWriter::format(row.dt),
                CsvWriter::format(row.kinetic_energy),
                rate.empty() ? "" : CsvWriter::format(rate[i]),
                CsvWriter::format(row.min_density), CsvWriter::format(row.min_pressure)});
    }
    outputs.push_back(series);
    const std::string snapshot =
        default_out(config) + ".J" + std::to_string(j) + ".state.csv";
    const Box2D box{-1.0, 1.0, -1.0, 1.0, jd, jd};
    write_state_2d(snapshot, config, make_lgl_usbp(config.n, config.lambda), box,
                   r.final_state);
    outputs.push_back(snapshot);
  }
  return {0, summary.dump(), outputs};
}

ExperimentResult run_operator_dump(const ExperimentConfig& config) {
  UsbpPair pair;
  if (config.family == NodeFamily::LGL) {
    pair = make_lgl_usbp(config.n, config.lambda);
  } else if (config.family == NodeFamily::GaussLegendre) {
    pair = make_usbp(gauss_legendre_nodes(config.n),
                     DissipationSpec::top_mode(config.n, config.lambda));
  } else if (config.family == NodeFamily::Equidistant) {
    if (config.n != 4)
      throw std::invalid_argument("N: the dense-norm equidistant operator requires N = 4");
    const SbpOperator base = dense_norm_sbp_4pt();
    const Eigen::MatrixXd s = dissipation_matrix(
        dop_basis(base.nodes), DissipationSpec::top_mode(4, config.lambda));
    pair = build_usbp(base, s, config.lambda == 0.0 ? 3 : 2);
  } else {
    throw std::invalid_argument("family: must be LGL, GaussLegendre, or Equidistant");
  }
  const std::string path = default_out(config);
  std::ofstream out(path);
  if (!out.good()) throw std::runtime_error("cannot open output file: " + path);
  out << operator_to_json(pair) << "\n";
  const VerificationReport report = verify_usbp(pair);
  json summary;
  summary["verified"] = report.pass;
  summary["exactness_degree"] = report.exactness_degree;
  return {0, summary.dump(), {path}};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  switch (config.experiment) {
    case Experiment::ConvergenceAdvection:
    case Experiment::ConvergenceEuler:
      return run_convergence(config);
    case Experiment::Spectrum:
      return run_spectrum(config);
    case Experiment::LocalStability:
      return run_local_stability(config);
    case Experiment::FreeStream:
      return run_free_stream(config);
    case Experiment::IsentropicVortex:
      return run_vortex(config);
    case Experiment::KelvinHelmholtz:
      return run_kh(config);
    case Experiment::OperatorDump:
      return run_operator_dump(config);
  }
  return {3, "{}", {}};
}

}  // namespace usbp
