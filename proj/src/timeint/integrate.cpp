#include "timeint/integrate.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

TimeScheme time_scheme_from_string(const std::string& name) {
  if (name == "rk4") return TimeScheme::RK4Classic;
  if (name == "ssp33") return TimeScheme::SSP33;
  throw std::invalid_argument("unknown time scheme: " + name);
}

namespace {

using Eigen::VectorXd;

struct StageAbort {
  CrashInfo info;
};

// one step; throws StageAbort when a stage leaves the admissible set
void step_rk4(const OdeSystem& sys, VectorXd& u, double t, double dt, VectorXd work[5]) {
  VectorXd& k1 = work[0];
  VectorXd& k2 = work[1];
  VectorXd& k3 = work[2];
  VectorXd& k4 = work[3];
  VectorXd& tmp = work[4];
  sys.rhs(u, t, k1);
  tmp = u + 0.5 * dt * k1;
  sys.rhs(tmp, t + 0.5 * dt, k2);
  tmp = u + 0.5 * dt * k2;
  sys.rhs(tmp, t + 0.5 * dt, k3);
  tmp = u + dt * k3;
  sys.rhs(tmp, t + dt, k4);
  u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void step_ssp33(const OdeSystem& sys, VectorXd& u, double t, double dt, VectorXd work[5]) {
  VectorXd& k = work[0];
  VectorXd& u1 = work[1];
  VectorXd& u2 = work[2];
  sys.rhs(u, t, k);
  u1 = u + dt * k;
  sys.rhs(u1, t + dt, k);
  u2 = 0.75 * u + 0.25 * (u1 + dt * k);
  sys.rhs(u2, t + 0.5 * dt, k);
  u = (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * k);
}

}  // namespace

IntegrateResult integrate(const OdeSystem& system, VectorXd u0,
                          const IntegratorConfig& config) {
  if (!(config.cfl > 0.0 && config.cfl <= 2.0))
    throw std::invalid_argument("integrate: cfl must be in (0, 2]");
  if (!(config.t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");

  IntegrateResult result;
  result.state = std::move(u0);
  double t = 0.0;
  VectorXd work[5];
  const double denom = 2.0 * system.nodes_per_direction - 1.0;

  while (t < config.t_end - 1e-14) {
    if (result.steps >= config.max_steps)
      throw std::runtime_error("integrate: max_steps exceeded before t_end");
    const double speed = system.step_speed(result.state);
    double dt = config.cfl / (denom * speed);
    if (t + dt > config.t_end) dt = config.t_end - t;

    VectorXd saved = result.state;
    try {
      if (config.scheme == TimeScheme::RK4Classic)
        step_rk4(system, result.state, t, dt, work);
      else
        step_ssp33(system, result.state, t, dt, work);
      if (config.abort_on_inadmissible && system.check_admissible) {
        CrashInfo info;
        if (!system.check_admissible(result.state, &info)) {
          info.time = t + dt;
          if (info.reason.empty()) info.reason = "nonpositive density or pressure";
          result.state = std::move(saved);
          result.t_final = t;
          result.completed = false;
          result.crash = info;
          return result;
        }
      }
    } catch (const SimulationAbort& abort) {
      result.state = std::move(saved);
      result.t_final = t;
      result.completed = false;
      result.crash = CrashInfo{abort.time, abort.element, abort.node, abort.what()};
      return result;
    }

    t += dt;
    ++result.steps;
    if (config.diagnostics_stride > 0 && system.diagnostics &&
        (result.steps % config.diagnostics_stride == 0 || t >= config.t_end - 1e-14)) {
      result.diagnostics.push_back(system.diagnostics(t, dt, result.state));
    }
  }

  result.t_final = t;
  result.completed = true;
  return result;
}

std::vector<double> dissipation_rate(const std::vector<DiagnosticsRow>& series) {
  const size_t n = series.size();
  if (n < 2) return {};
  std::vector<double> rate(n);
  rate[0] = -(series[1].kinetic_energy - series[0].kinetic_energy) /
            (series[1].t - series[0].t);
  rate[n - 1] = -(series[n - 1].kinetic_energy - series[n - 2].kinetic_energy) /
                (series[n - 1].t - series[n - 2].t);
  for (size_t i = 1; i + 1 < n; ++i)
    rate[i] = -(series[i + 1].kinetic_energy - series[i - 1].kinetic_energy) /
              (series[i + 1].t - series[i - 1].t);
  return rate;
}

}  // namespace usbp
