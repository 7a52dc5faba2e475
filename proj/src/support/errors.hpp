#ifndef USBP_SUPPORT_ERRORS_HPP
#define USBP_SUPPORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace usbp {

/// Numerical construction produced residuals above tolerance.
class ConstructionError : public std::runtime_error {
public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// A simulation state left the admissible set (rho <= 0 or p <= 0).
/// Carries the location so crash times can be reported as results.
class SimulationAbort : public std::runtime_error {
public:
  SimulationAbort(double time, int element, int node, const std::string& what)
      : std::runtime_error(what), time(time), element(element), node(node) {}
  double time;
  int element;
  int node;
};

/// Mesh geometry failure (non-positive mapping Jacobian).
class MeshError : public std::runtime_error {
public:
  explicit MeshError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace usbp

#endif
