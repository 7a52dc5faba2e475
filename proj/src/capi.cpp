#include "usbp/usbp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "harness/csv.hpp"
#include "harness/experiments.hpp"
#include "operators/operator_io.hpp"
#include "operators/verify.hpp"
#include "support/errors.hpp"

struct usbp_operator {
  usbp::UsbpPair pair;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// map C++ exceptions from the core onto status codes
template <typename Fn>
usbp_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return USBP_ERR_INVALID_ARGUMENT;
  } catch (const usbp::SimulationAbort& e) {
    g_last_error = e.what();
    return USBP_ERR_INADMISSIBLE_STATE;
  } catch (const usbp::MeshError& e) {
    g_last_error = e.what();
    return USBP_ERR_MESH;
  } catch (const usbp::ConstructionError& e) {
    g_last_error = e.what();
    return USBP_ERR_CONSTRUCTION;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return USBP_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return USBP_ERR_INTERNAL;
  }
}

usbp::UsbpPair build_pair(const std::string& family, int n_nodes,
                          const double* eigenvalues, int n_eigenvalues,
                          double lambda_top) {
  usbp::DissipationSpec spec;
  if (eigenvalues && n_eigenvalues > 0) {
    if (n_eigenvalues != n_nodes)
      throw std::invalid_argument("usbp_operator_create: need N eigenvalues");
    spec.eigenvalues = Eigen::Map<const Eigen::VectorXd>(eigenvalues, n_nodes);
    // degree from the leading zero run: lambda_k = 0 for k <= degree+1
    int leading = 0;
    while (leading < n_nodes && spec.eigenvalues[leading] == 0.0) ++leading;
    if (leading == 0)
      throw std::invalid_argument("usbp_operator_create: lambda_1 must be zero");
    spec.degree = (leading == n_nodes) ? n_nodes - 1 : leading - 1;
    spec.validate();
  } else {
    spec = usbp::DissipationSpec::top_mode(n_nodes, lambda_top);
  }

  const usbp::NodeFamily fam = usbp::node_family_from_string(family);
  if (fam == usbp::NodeFamily::LGL)
    return usbp::make_usbp(usbp::lgl_nodes(n_nodes), spec);
  if (fam == usbp::NodeFamily::GaussLegendre)
    return usbp::make_usbp(usbp::gauss_legendre_nodes(n_nodes), spec);
  if (fam == usbp::NodeFamily::Equidistant) {
    if (n_nodes != 4)
      throw std::invalid_argument("the dense-norm equidistant operator requires N = 4");
    const usbp::SbpOperator base = usbp::dense_norm_sbp_4pt();
    const Eigen::MatrixXd s =
        usbp::dissipation_matrix(usbp::dop_basis(base.nodes), spec);
    return usbp::build_usbp(base, s, spec.degree);
  }
  throw std::invalid_argument("unsupported node family: " + family);
}

}  // namespace

extern "C" {

const char* usbp_version(void) {
  static const std::string version = usbp::artifact_version();
  return version.c_str();
}

const char* usbp_last_error(void) { return g_last_error.c_str(); }

usbp_status usbp_operator_create(const char* family, int n_nodes,
                                 const double* eigenvalues, int n_eigenvalues,
                                 double lambda_top, usbp_operator** out) {
  return guarded([&]() {
    if (!family || !out)
      throw std::invalid_argument("usbp_operator_create: null argument");
    auto handle = std::make_unique<usbp_operator>();
    handle->pair = build_pair(family, n_nodes, eigenvalues, n_eigenvalues, lambda_top);
    *out = handle.release();
    return USBP_OK;
  });
}

void usbp_operator_destroy(usbp_operator* op) { delete op; }

int usbp_operator_num_nodes(const usbp_operator* op) { return op ? op->pair.size() : 0; }

int usbp_operator_degree(const usbp_operator* op) { return op ? op->pair.degree : -1; }

usbp_status usbp_operator_matrix(const usbp_operator* op, const char* name,
                                 double* buffer, int length) {
  return guarded([&]() {
    if (!op || !name || !buffer)
      throw std::invalid_argument("usbp_operator_matrix: null argument");
    const int n = op->pair.size();
    const std::string key = name;
    if (key == "nodes" || key == "weights") {
      const Eigen::VectorXd& v =
          key == "nodes" ? op->pair.nodes() : op->pair.base.nodes.weights;
      if (length != static_cast<int>(v.size()))
        throw std::invalid_argument("usbp_operator_matrix: buffer length != N");
      for (int i = 0; i < length; ++i) buffer[i] = v[i];
      return USBP_OK;
    }
    const Eigen::MatrixXd* m = nullptr;
    if (key == "P") m = &op->pair.base.P;
    else if (key == "Q") m = &op->pair.base.Q;
    else if (key == "B") m = &op->pair.base.B;
    else if (key == "D") m = &op->pair.base.D;
    else if (key == "S") m = &op->pair.S;
    else if (key == "Dplus") m = &op->pair.Dplus;
    else if (key == "Dminus") m = &op->pair.Dminus;
    else if (key == "Qplus") m = &op->pair.Qplus;
    else if (key == "Qminus") m = &op->pair.Qminus;
    else throw std::invalid_argument("usbp_operator_matrix: unknown matrix '" + key + "'");
    if (length != n * n)
      throw std::invalid_argument("usbp_operator_matrix: buffer length != N*N");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) buffer[i * n + j] = (*m)(i, j);
    return USBP_OK;
  });
}

usbp_status usbp_operator_verify(const usbp_operator* op, int* pass,
                                 double* max_residual, int* exactness_degree) {
  return guarded([&]() {
    if (!op) throw std::invalid_argument("usbp_operator_verify: null operator");
    const usbp::VerificationReport report = usbp::verify_usbp(op->pair);
    if (pass) *pass = report.pass ? 1 : 0;
    if (max_residual) {
      double worst = 0.0;
      for (const auto& check : report.checks) worst = std::max(worst, check.residual);
      *max_residual = worst;
    }
    if (exactness_degree) *exactness_degree = report.exactness_degree;
    return USBP_OK;
  });
}

usbp_status usbp_operator_verify_json(const usbp_operator* op, char** json) {
  return guarded([&]() {
    if (!op || !json)
      throw std::invalid_argument("usbp_operator_verify_json: null argument");
    const usbp::VerificationReport report = usbp::verify_usbp(op->pair);
    nlohmann::json doc;
    doc["pass"] = report.pass;
    doc["exactness_degree"] = report.exactness_degree;
    doc["checks"] = nlohmann::json::array();
    for (const auto& check : report.checks)
      doc["checks"].push_back({{"name", check.name},
                               {"residual", check.residual},
                               {"tolerance", check.tolerance},
                               {"pass", check.pass}});
    *json = dup_string(doc.dump(2));
    return USBP_OK;
  });
}

usbp_status usbp_operator_to_json(const usbp_operator* op, char** json) {
  return guarded([&]() {
    if (!op || !json) throw std::invalid_argument("usbp_operator_to_json: null argument");
    *json = dup_string(usbp::operator_to_json(op->pair));
    return USBP_OK;
  });
}

usbp_status usbp_operator_from_json(const char* json, usbp_operator** out) {
  return guarded([&]() {
    if (!json || !out)
      throw std::invalid_argument("usbp_operator_from_json: null argument");
    auto handle = std::make_unique<usbp_operator>();
    handle->pair = usbp::operator_from_json(json);
    *out = handle.release();
    return USBP_OK;
  });
}

usbp_status usbp_experiment_run(const char* config_json, char** summary_json) {
  return guarded([&]() {
    if (!config_json) throw std::invalid_argument("usbp_experiment_run: null config");
    usbp::ExperimentConfig config;
    try {
      config = usbp::parse_config(config_json);
    } catch (const std::invalid_argument& e) {
      g_last_error = e.what();
      return USBP_ERR_BAD_CONFIG;
    }
    const usbp::ExperimentResult result = usbp::run_experiment(config);
    if (summary_json) {
      nlohmann::json doc;
      doc["summary"] = nlohmann::json::parse(result.summary_json);
      doc["outputs"] = result.outputs;
      *summary_json = dup_string(doc.dump(2));
    }
    return USBP_OK;
  });
}

void usbp_string_free(char* text) { std::free(text); }

}  // extern "C"
