#ifndef USBP_HARNESS_EXPERIMENTS_HPP
#define USBP_HARNESS_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "analysis/analysis.hpp"
#include "harness/config.hpp"
#include "operators/usbp_pair.hpp"
#include "semidisc/curvilinear2d.hpp"
#include "semidisc/euler2d.hpp"

namespace usbp {

struct ExperimentResult {
  int exit_code = 0;  // 0 success (crashes are results), 2 usage, 3 internal
  std::string summary_json;
  std::vector<std::string> outputs;
};

/// Dispatch on config.experiment, write the output files, return a summary.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Reusable single-run drivers (the acceptance suite exercises the same code
// paths the CLI uses).

/// Periodic advection of sin(pi x), final-time P-weighted L2 error.
double run_advection_error(int n, double lambda, int elements, double cfl, double t_end,
                           TimeScheme scheme = TimeScheme::RK4Classic);

/// Baseline central scheme on the same problem.
double run_advection_baseline_error(int n, int elements, double cfl, double t_end);

/// Manufactured-solution Euler run, L2 error summed over conserved variables.
double run_euler_manufactured_error(int n, double lambda, SplittingKind splitting,
                                    int elements, double cfl);

/// Assembled periodic-advection operator.
Eigen::MatrixXd advection_operator(int n, double lambda, int elements);

struct StabilitySample {
  double max_real = 0.0;
  double operator_norm = 0.0;
};

/// Central-difference Jacobian spectrum of the full-upwind Burgers scheme at
/// a seeded random nonnegative state.
StabilitySample burgers_stability_sample(int n, double lambda, int elements,
                                         unsigned long seed);

struct FspResult {
  double rhs_inf = 0.0;
  double min_jacobian = 0.0;
  double max_metric_residual = 0.0;
};

/// One free-stream residual evaluation on the warped mesh (Dirichlet
/// background boundary treatment).
FspResult free_stream_residual(int n, double lambda, int n_geo, SplittingKind splitting,
                               double amplitude, int jx, int jy);

struct Run2DResult {
  bool completed = false;
  double final_time = 0.0;
  long steps = 0;
  double density_error = 0.0;
  double kinetic_energy_final = 0.0;
  CrashInfo crash;
  std::vector<DiagnosticsRow> diagnostics;
  Eigen::VectorXd final_state;
};

Run2DResult run_isentropic_vortex(int n, double lambda, SplittingKind splitting,
                                  int elements_per_dir, double cfl, double t_end,
                                  int diag_stride = 20);
Run2DResult run_isentropic_vortex_baseline(int n, int elements_per_dir, double cfl,
                                           double t_end);
Run2DResult run_kelvin_helmholtz(int n, double lambda, SplittingKind splitting,
                                 int elements_per_dir, double cfl, double t_end,
                                 int diag_stride = 50);

}  // namespace usbp

#endif
