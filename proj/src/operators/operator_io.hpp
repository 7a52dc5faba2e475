#ifndef USBP_OPERATORS_OPERATOR_IO_HPP
#define USBP_OPERATORS_OPERATOR_IO_HPP

#include <string>

#include "operators/usbp_pair.hpp"

namespace usbp {

/// Serialize the pair as {family, N, degree, nodes[], weights[], P[][], Q[][],
/// B[][], S[][], Dplus[][], Dminus[][]}, row-major, full double precision.
std::string operator_to_json(const UsbpPair& pair);

/// Inverse of operator_to_json. Throws invalid_argument on malformed input.
UsbpPair operator_from_json(const std::string& text);

}  // namespace usbp

#endif
