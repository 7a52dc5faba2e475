#include "operators/node_sets.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

std::string to_string(NodeFamily family) {
  switch (family) {
    case NodeFamily::LGL: return "LGL";
    case NodeFamily::GaussLegendre: return "GaussLegendre";
    case NodeFamily::Equidistant: return "Equidistant";
    case NodeFamily::Custom: return "Custom";
  }
  return "Custom";
}

NodeFamily node_family_from_string(const std::string& name) {
  if (name == "LGL") return NodeFamily::LGL;
  if (name == "GaussLegendre") return NodeFamily::GaussLegendre;
  if (name == "Equidistant") return NodeFamily::Equidistant;
  if (name == "Custom") return NodeFamily::Custom;
  throw std::invalid_argument("unknown node family: " + name);
}

void NodeSet::validate() const {
  const int n = size();
  if (n < 1) throw std::invalid_argument("NodeSet: empty");
  for (int i = 1; i < n; ++i) {
    if (!(nodes[i] > nodes[i - 1]))
      throw std::invalid_argument("NodeSet: nodes not strictly increasing");
  }
  if (nodes[0] < x_left - 1e-14 || nodes[n - 1] > x_right + 1e-14)
    throw std::invalid_argument("NodeSet: nodes outside [x_left, x_right]");
  if (has_weights()) {
    if (weights.minCoeff() <= 0.0)
      throw std::invalid_argument("NodeSet: nonpositive quadrature weight");
    if (std::abs(weights.sum() - (x_right - x_left)) > 1e-13)
      throw std::invalid_argument("NodeSet: weights do not sum to interval length");
  }
}

void legendre_eval(int degree, double x, double* value, double* derivative) {
  if (degree == 0) {
    *value = 1.0;
    *derivative = 0.0;
    return;
  }
  double p_prev = 1.0, p = x;
  for (int k = 2; k <= degree; ++k) {
    const double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  *value = p;
  if (std::abs(1.0 - x * x) < 1e-300) {
    // endpoint limit: P_n'(±1) = ±^{n+1} n(n+1)/2
    const double s = (x > 0 || degree % 2 == 1) ? 1.0 : -1.0;
    *derivative = s * 0.5 * degree * (degree + 1);
  } else {
    *derivative = degree * (p_prev - x * p) / (1.0 - x * x);
  }
}

NodeSet lgl_nodes(int n) {
  if (n < 2 || n > 12)
    throw std::invalid_argument("lgl_nodes: need 2 <= n <= 12");
  NodeSet set;
  set.family = NodeFamily::LGL;
  set.includes_boundary = true;
  set.nodes.resize(n);
  set.weights.resize(n);
  const int m = n - 1;
  set.nodes[0] = -1.0;
  set.nodes[m] = 1.0;
  // interior nodes are the roots of P'_{n-1}; Newton from Chebyshev-Lobatto guesses
  for (int i = 1; i < m; ++i) {
    double x = -std::cos(M_PI * i / m);
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre_eval(m, x, &p, &dp);
      const double d2p = (2.0 * x * dp - m * (m + 1) * p) / (1.0 - x * x);
      const double step = dp / d2p;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    set.nodes[i] = x;
  }
  // enforce exact symmetry
  for (int i = 0; i < n / 2; ++i) {
    const double v = 0.5 * (set.nodes[n - 1 - i] - set.nodes[i]);
    set.nodes[i] = -v;
    set.nodes[n - 1 - i] = v;
  }
  if (n % 2 == 1) set.nodes[n / 2] = 0.0;
  for (int i = 0; i < n; ++i) {
    double p, dp;
    legendre_eval(m, set.nodes[i], &p, &dp);
    set.weights[i] = 2.0 / (m * (m + 1) * p * p);
  }
  set.validate();
  return set;
}

NodeSet gauss_legendre_nodes(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("gauss_legendre_nodes: need 1 <= n <= 12");
  NodeSet set;
  set.family = NodeFamily::GaussLegendre;
  set.includes_boundary = false;
  set.nodes.resize(n);
  set.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = -std::cos((2.0 * i + 1.0) * M_PI / (2.0 * n));
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre_eval(n, x, &p, &dp);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    set.nodes[i] = x;
  }
  for (int i = 0; i < n / 2; ++i) {
    const double v = 0.5 * (set.nodes[n - 1 - i] - set.nodes[i]);
    set.nodes[i] = -v;
    set.nodes[n - 1 - i] = v;
  }
  if (n % 2 == 1) set.nodes[n / 2] = 0.0;
  for (int i = 0; i < n; ++i) {
    double p, dp;
    legendre_eval(n, set.nodes[i], &p, &dp);
    set.weights[i] = 2.0 / ((1.0 - set.nodes[i] * set.nodes[i]) * dp * dp);
    double r;
    legendre_eval(n, set.nodes[i], &r, &dp);
    if (std::abs(r) > 1e-14)
      throw ConstructionError("gauss_legendre_nodes: Newton residual above 1e-14");
  }
  set.validate();
  return set;
}

NodeSet equidistant_nodes(int n, double x_left, double x_right) {
  if (n < 2) throw std::invalid_argument("equidistant_nodes: need n >= 2");
  if (!(x_right > x_left))
    throw std::invalid_argument("equidistant_nodes: need x_right > x_left");
  NodeSet set;
  set.family = NodeFamily::Equidistant;
  set.includes_boundary = true;
  set.x_left = x_left;
  set.x_right = x_right;
  set.nodes.resize(n);
  for (int i = 0; i < n; ++i)
    set.nodes[i] = x_left + (x_right - x_left) * i / (n - 1);
  set.validate();
  return set;
}

}  // namespace usbp
