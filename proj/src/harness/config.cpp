#include "harness/config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace usbp {

using nlohmann::json;

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::ConvergenceAdvection: return "convergence-advection";
    case Experiment::ConvergenceEuler: return "convergence-euler";
    case Experiment::Spectrum: return "spectrum";
    case Experiment::LocalStability: return "local-stability";
    case Experiment::FreeStream: return "free-stream";
    case Experiment::IsentropicVortex: return "isentropic-vortex";
    case Experiment::KelvinHelmholtz: return "kelvin-helmholtz";
    case Experiment::OperatorDump: return "operator-dump";
  }
  return "convergence-advection";
}

Experiment experiment_from_string(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Experiment::OperatorDump); ++i) {
    const auto e = static_cast<Experiment>(i);
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("experiment: unknown value '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (n < 2 || n > 12) throw std::invalid_argument("N: must be in [2, 12]");
  if (lambda > 0.0) throw std::invalid_argument("lambda: must be <= 0");
  if (!(cfl > 0.0 && cfl <= 2.0)) throw std::invalid_argument("cfl: must be in (0, 2]");
  if (t_end < 0.0) throw std::invalid_argument("t_end: must be positive");
  for (int j : j_list)
    if (j < 1) throw std::invalid_argument("J: element counts must be positive");
  const bool two_dim = experiment == Experiment::IsentropicVortex ||
                       experiment == Experiment::KelvinHelmholtz;
  if (two_dim) {
    for (int j : j_list) {
      const int r = static_cast<int>(std::lround(std::sqrt(double(j))));
      if (r * r != j)
        throw std::invalid_argument("J: 2D experiments need perfect-square element counts");
    }
  }
  for (int g : n_geo)
    if (g < 1 || g > 4) throw std::invalid_argument("n_geo: must be in {1,2,3,4}");
  if (experiment == Experiment::FreeStream && amplitude < 0.0)
    throw std::invalid_argument("amplitude: must be nonnegative");
}

namespace {

std::vector<int> default_j_list(Experiment e) {
  switch (e) {
    case Experiment::ConvergenceAdvection:
    case Experiment::ConvergenceEuler:
      return {2, 4, 8, 16, 32, 64, 128};
    case Experiment::Spectrum:
      return {16};
    case Experiment::LocalStability:
      return {2, 4, 8, 16};
    case Experiment::FreeStream:
      return {4};
    case Experiment::IsentropicVortex:
      return {256};
    case Experiment::KelvinHelmholtz:
      return {64};
    case Experiment::OperatorDump:
      return {1};
  }
  return {1};
}

ExperimentConfig parse_validated(const json& doc);

double default_t_end(Experiment e) {
  switch (e) {
    case Experiment::ConvergenceAdvection: return 5.0;
    case Experiment::ConvergenceEuler: return 2.0;
    case Experiment::IsentropicVortex: return 10.0;
    case Experiment::KelvinHelmholtz: return 15.0;
    default: return 1.0;
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");

  static const std::set<std::string> known = {
      "experiment", "N", "lambda", "splitting", "J", "cfl", "t_end",
      "seed", "out", "n_geo", "amplitude", "family", "scheme", "baseline",
      "parallel"};
  for (const auto& item : doc.items())
    if (!known.count(item.key()))
      throw std::invalid_argument("config: unknown key '" + item.key() + "'");

  if (!doc.contains("experiment"))
    throw std::invalid_argument("experiment: missing required key");
  try {
    return parse_validated(doc);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

namespace {

ExperimentConfig parse_validated(const json& doc) {
  ExperimentConfig config;
  config.experiment = experiment_from_string(doc.at("experiment").get<std::string>());
  config.n = doc.value("N", 3);
  config.lambda = doc.value("lambda", -1.0);
  if (doc.contains("splitting"))
    config.splitting = splitting_from_string(doc.at("splitting").get<std::string>());
  else if (config.experiment == Experiment::ConvergenceEuler ||
           config.experiment == Experiment::KelvinHelmholtz)
    config.splitting = SplittingKind::VanLeerHaenel;
  else if (config.experiment == Experiment::IsentropicVortex)
    config.splitting = SplittingKind::StegerWarming;

  if (doc.contains("J")) {
    if (doc.at("J").is_array())
      config.j_list = doc.at("J").get<std::vector<int>>();
    else
      config.j_list = {doc.at("J").get<int>()};
  } else {
    config.j_list = default_j_list(config.experiment);
  }
  config.cfl = doc.value("cfl", config.experiment == Experiment::KelvinHelmholtz ? 0.4 : 0.1);
  config.t_end = doc.value("t_end", default_t_end(config.experiment));
  config.seed = doc.value("seed", 12345ul);
  config.out = doc.value("out", std::string());
  if (doc.contains("n_geo")) {
    if (doc.at("n_geo").is_array())
      config.n_geo = doc.at("n_geo").get<std::vector<int>>();
    else
      config.n_geo = {doc.at("n_geo").get<int>()};
  }
  config.amplitude = doc.value("amplitude", 0.06);
  if (doc.contains("family"))
    config.family = node_family_from_string(doc.at("family").get<std::string>());
  if (doc.contains("scheme"))
    config.scheme = time_scheme_from_string(doc.at("scheme").get<std::string>());
  else if (config.experiment == Experiment::KelvinHelmholtz)
    config.scheme = TimeScheme::SSP33;
  config.baseline = doc.value("baseline", true);
  config.parallel = doc.value("parallel", false);

  config.validate();
  return config;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) {
  json doc;
  doc["experiment"] = to_string(config.experiment);
  doc["N"] = config.n;
  doc["lambda"] = config.lambda;
  doc["splitting"] = to_string(config.splitting);
  doc["J"] = config.j_list;
  doc["cfl"] = config.cfl;
  doc["t_end"] = config.t_end;
  doc["seed"] = config.seed;
  doc["n_geo"] = config.n_geo;
  doc["amplitude"] = config.amplitude;
  doc["family"] = to_string(config.family);
  doc["scheme"] = config.scheme == TimeScheme::RK4Classic ? "rk4" : "ssp33";
  doc["baseline"] = config.baseline;
  doc["parallel"] = config.parallel;
  return doc.dump();
}

}  // namespace usbp
