// usbp-dg: experiment CLI. Builds a JSON config from flags (optionally merged
// over a config file) and drives the shared library through its C API.
//
//   usbp-dg <experiment> [--config file] [--N int] [--lambda float]
//           [--splitting name] [--J list] [--cfl float] [--t-end float]
//           [--seed int] [--out path] [--n-geo list] [--amplitude float]
//           [--family name] [--scheme name] [--no-baseline]
//
// Exit codes: 0 success (recorded crashes included), 2 usage, 3 internal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "usbp/usbp.h"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) values.push_back(std::stoi(item));
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DG-USBP experiment driver"};
  app.set_version_flag("--version", usbp_version());

  std::string experiment;
  app.add_option("experiment", experiment,
                 "convergence-advection | convergence-euler | spectrum | "
                 "local-stability | free-stream | isentropic-vortex | "
                 "kelvin-helmholtz | operator-dump")
      ->required();

  std::string config_path, splitting, j_text, n_geo_text, out, family, scheme;
  int n_nodes = 0;
  double lambda = 1.0, cfl = 0.0, t_end = 0.0, amplitude = -1.0;
  long seed = -1;
  bool no_baseline = false;
  bool parallel = false;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--N", n_nodes, "nodes per element and direction");
  app.add_option("--lambda", lambda, "dissipation eigenvalue for the top mode (<= 0)");
  app.add_option("--splitting", splitting,
                 "lax-friedrichs | steger-warming | van-leer-haenel | full-upwind");
  app.add_option("--J", j_text, "element count or comma list, e.g. 2,4,8");
  app.add_option("--cfl", cfl, "CFL number in (0, 2]");
  app.add_option("--t-end", t_end, "final time");
  app.add_option("--seed", seed, "random seed for sampled states");
  app.add_option("--out", out, "output path");
  app.add_option("--n-geo", n_geo_text, "mesh polynomial orders, e.g. 1,2,3,4");
  app.add_option("--amplitude", amplitude, "mesh warp amplitude");
  app.add_option("--family", family, "LGL | GaussLegendre | Equidistant");
  app.add_option("--scheme", scheme, "rk4 | ssp33");
  app.add_flag("--no-baseline", no_baseline, "skip the comparison scheme");
  app.add_flag("--parallel", parallel, "run sweep combinations concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  nlohmann::json config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in.good()) {
      std::cerr << "usbp-dg: cannot read config file: " << config_path << "\n";
      return 2;
    }
    try {
      in >> config;
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "usbp-dg: config parse error: " << e.what() << "\n";
      return 2;
    }
  }
  config["experiment"] = experiment;
  if (app.count("--N")) config["N"] = n_nodes;
  if (app.count("--lambda")) config["lambda"] = lambda;
  if (app.count("--splitting")) config["splitting"] = splitting;
  if (app.count("--J")) config["J"] = parse_int_list(j_text);
  if (app.count("--cfl")) config["cfl"] = cfl;
  if (app.count("--t-end")) config["t_end"] = t_end;
  if (app.count("--seed")) config["seed"] = seed;
  if (app.count("--out")) config["out"] = out;
  if (app.count("--n-geo")) config["n_geo"] = parse_int_list(n_geo_text);
  if (app.count("--amplitude")) config["amplitude"] = amplitude;
  if (app.count("--family")) config["family"] = family;
  if (app.count("--scheme")) config["scheme"] = scheme;
  if (no_baseline) config["baseline"] = false;
  if (parallel) config["parallel"] = true;

  char* summary = nullptr;
  const usbp_status status = usbp_experiment_run(config.dump().c_str(), &summary);
  if (status == USBP_OK) {
    if (summary) {
      std::cout << summary << "\n";
      usbp_string_free(summary);
    }
    return 0;
  }
  std::cerr << "usbp-dg: " << usbp_last_error() << "\n";
  if (status == USBP_ERR_BAD_CONFIG || status == USBP_ERR_INVALID_ARGUMENT) return 2;
  return 3;
}
