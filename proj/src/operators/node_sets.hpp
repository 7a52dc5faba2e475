#ifndef USBP_OPERATORS_NODE_SETS_HPP
#define USBP_OPERATORS_NODE_SETS_HPP

#include <Eigen/Dense>
#include <string>

namespace usbp {

enum class NodeFamily { LGL, GaussLegendre, Equidistant, Custom };

std::string to_string(NodeFamily family);
NodeFamily node_family_from_string(const std::string& name);

/// Nodes and quadrature weights on a reference interval [x_left, x_right].
/// Dense-norm constructions carry no weights (weights has size 0).
struct NodeSet {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  bool includes_boundary = false;
  NodeFamily family = NodeFamily::Custom;
  double x_left = -1.0;
  double x_right = 1.0;

  int size() const { return static_cast<int>(nodes.size()); }
  bool has_weights() const { return weights.size() == nodes.size(); }

  /// Throws std::invalid_argument if ordering, bounds, or weight
  /// positivity/normalization (sum = x_right - x_left to 1e-13) fail.
  void validate() const;
};

/// Legendre-Gauss-Lobatto nodes and weights on [-1,1], 2 <= n <= 12.
NodeSet lgl_nodes(int n);

/// Gauss-Legendre nodes and weights on [-1,1], 1 <= n <= 12.
/// Boundary points are not included.
NodeSet gauss_legendre_nodes(int n);

/// Uniformly spaced nodes including the endpoints; no weights attached.
NodeSet equidistant_nodes(int n, double x_left, double x_right);

/// Legendre polynomial value and first derivative at x.
void legendre_eval(int degree, double x, double* value, double* derivative);

}  // namespace usbp

#endif
