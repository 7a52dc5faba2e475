#include "operators/operator_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace usbp {

namespace {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, int n) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("operator_from_json: bad matrix shape");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("operator_from_json: bad matrix row length");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

}  // namespace

std::string operator_to_json(const UsbpPair& pair) {
  json doc;
  doc["family"] = to_string(pair.base.nodes.family);
  doc["N"] = pair.size();
  doc["degree"] = pair.degree;
  doc["x_left"] = pair.base.nodes.x_left;
  doc["x_right"] = pair.base.nodes.x_right;
  doc["includes_boundary"] = pair.base.nodes.includes_boundary;
  doc["nodes"] = std::vector<double>(pair.nodes().begin(), pair.nodes().end());
  doc["weights"] = std::vector<double>(pair.base.nodes.weights.begin(),
                                       pair.base.nodes.weights.end());
  doc["P"] = matrix_to_json(pair.base.P);
  doc["Q"] = matrix_to_json(pair.base.Q);
  doc["B"] = matrix_to_json(pair.base.B);
  doc["S"] = matrix_to_json(pair.S);
  doc["Dplus"] = matrix_to_json(pair.Dplus);
  doc["Dminus"] = matrix_to_json(pair.Dminus);
  return doc.dump(2);
}

UsbpPair operator_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("operator_from_json: ") + e.what());
  }
  const int n = doc.at("N").get<int>();
  if (n < 1) throw std::invalid_argument("operator_from_json: bad N");

  UsbpPair pair;
  pair.degree = doc.at("degree").get<int>();
  NodeSet& nodes = pair.base.nodes;
  nodes.family = node_family_from_string(doc.at("family").get<std::string>());
  nodes.x_left = doc.value("x_left", -1.0);
  nodes.x_right = doc.value("x_right", 1.0);
  nodes.includes_boundary = doc.value("includes_boundary", true);
  const auto node_list = doc.at("nodes").get<std::vector<double>>();
  const auto weight_list = doc.at("weights").get<std::vector<double>>();
  if (static_cast<int>(node_list.size()) != n)
    throw std::invalid_argument("operator_from_json: node count mismatch");
  nodes.nodes = Eigen::Map<const Eigen::VectorXd>(node_list.data(), n);
  nodes.weights = Eigen::Map<const Eigen::VectorXd>(
      weight_list.data(), static_cast<Eigen::Index>(weight_list.size()));

  pair.base.P = matrix_from_json(doc.at("P"), n);
  pair.base.Q = matrix_from_json(doc.at("Q"), n);
  pair.base.B = matrix_from_json(doc.at("B"), n);
  pair.S = matrix_from_json(doc.at("S"), n);
  pair.Dplus = matrix_from_json(doc.at("Dplus"), n);
  pair.Dminus = matrix_from_json(doc.at("Dminus"), n);
  pair.base.D = 0.5 * (pair.Dplus + pair.Dminus);
  pair.base.degree = pair.degree;
  pair.Qplus = pair.base.Q + 0.5 * pair.S;
  pair.Qminus = pair.base.Q - 0.5 * pair.S;
  return pair;
}

}  // namespace usbp
