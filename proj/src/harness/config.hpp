#ifndef USBP_HARNESS_CONFIG_HPP
#define USBP_HARNESS_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "operators/node_sets.hpp"
#include "physics/splittings.hpp"
#include "timeint/integrate.hpp"

namespace usbp {

enum class Experiment {
  ConvergenceAdvection,
  ConvergenceEuler,
  Spectrum,
  LocalStability,
  FreeStream,
  IsentropicVortex,
  KelvinHelmholtz,
  OperatorDump
};

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& name);

/// Everything an experiment run needs. 2D experiments read J as the total
/// element count (a perfect square, arranged sqrt(J) x sqrt(J)).
struct ExperimentConfig {
  Experiment experiment = Experiment::ConvergenceAdvection;
  int n = 3;                       // nodes per element and direction
  double lambda = -1.0;            // dissipation for the top DOP mode
  SplittingKind splitting = SplittingKind::LaxFriedrichs;
  std::vector<int> j_list;         // element counts
  double cfl = 0.1;
  double t_end = 0.0;              // 0 = experiment default
  unsigned long seed = 12345;
  std::string out;                 // output path ("" = derived default)
  std::vector<int> n_geo = {1, 2, 3, 4};
  double amplitude = 0.06;
  NodeFamily family = NodeFamily::LGL;
  TimeScheme scheme = TimeScheme::RK4Classic;
  bool baseline = true;            // run the comparison scheme where it applies
  bool parallel = false;           // opt-in concurrent J sweeps

  /// Raised to a usage error by the CLI / C API on failure.
  void validate() const;
};

/// Parse a JSON config document; unknown keys and out-of-range values raise
/// std::invalid_argument naming the offending field. Defaults are filled per
/// experiment.
ExperimentConfig parse_config(const std::string& json_text);

/// Config echo used in output headers (stable key order).
std::string config_to_json(const ExperimentConfig& config);

}  // namespace usbp

#endif
