#ifndef USBP_TIMEINT_INTEGRATE_HPP
#define USBP_TIMEINT_INTEGRATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace usbp {

enum class TimeScheme { RK4Classic, SSP33 };

TimeScheme time_scheme_from_string(const std::string& name);

struct IntegratorConfig {
  TimeScheme scheme = TimeScheme::RK4Classic;
  double cfl = 0.1;           // in (0, 2]
  double t_end = 1.0;
  long max_steps = 50'000'000;
  bool abort_on_inadmissible = true;
  int diagnostics_stride = 0;  // 0 disables the time series
};

struct CrashInfo {
  double time = 0.0;
  int element = -1;
  int node = -1;
  std::string reason;
};

struct DiagnosticsRow {
  double t = 0.0;
  double dt = 0.0;
  double kinetic_energy = 0.0;
  double min_density = 0.0;
  double min_pressure = 0.0;
};

struct IntegrateResult {
  Eigen::VectorXd state;
  double t_final = 0.0;
  long steps = 0;
  bool completed = false;
  std::optional<CrashInfo> crash;
  std::vector<DiagnosticsRow> diagnostics;
};

/// Method-of-lines problem: rhs may throw SimulationAbort; step_speed returns
/// the max of sum over directions of (wave speed / element width), so that
/// dt = cfl / ((2N-1) * step_speed) reduces to cfl*h/((2N-1)*lambda_max) in 1D.
struct OdeSystem {
  std::function<void(const Eigen::VectorXd&, double, Eigen::VectorXd&)> rhs;
  std::function<double(const Eigen::VectorXd&)> step_speed;
  std::function<DiagnosticsRow(double t, double dt, const Eigen::VectorXd&)> diagnostics;
  /// Optional cheap admissibility scan of a completed step.
  std::function<bool(const Eigen::VectorXd&, CrashInfo*)> check_admissible;
  int nodes_per_direction = 2;  // N in the dt formula
};

/// Fixed-step explicit integration with CFL-based step selection recomputed
/// each step. On an inadmissible stage (SimulationAbort from the rhs) the
/// crash is recorded and the last admissible state is returned early.
/// Throws std::runtime_error when max_steps is exceeded.
IntegrateResult integrate(const OdeSystem& system, Eigen::VectorXd u0,
                          const IntegratorConfig& config);

/// Kinetic-energy dissipation rate -dE/dt from the diagnostics series by
/// central differences (one-sided at the ends); empty for fewer than 2 rows.
std::vector<double> dissipation_rate(const std::vector<DiagnosticsRow>& series);

}  // namespace usbp

#endif
