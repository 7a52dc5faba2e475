#ifndef USBP_OPERATORS_VERIFY_HPP
#define USBP_OPERATORS_VERIFY_HPP

#include <string>
#include <vector>

#include "operators/usbp_pair.hpp"

namespace usbp {

/// Per-invariant residuals for an operator pair. Failures are data, not errors.
struct VerificationReport {
  struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
  };
  std::vector<Check> checks;
  /// Largest k with ||D± x^k - k x^{k-1}||_inf < 1e-9 (monomials on the
  /// reference interval mapped to [-1,1]).
  int exactness_degree = 0;
  bool pass = false;

  std::string summary() const;
};

VerificationReport verify_usbp(const UsbpPair& pair);

}  // namespace usbp

#endif
