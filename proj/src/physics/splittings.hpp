#ifndef USBP_PHYSICS_SPLITTINGS_HPP
#define USBP_PHYSICS_SPLITTINGS_HPP

#include <string>

#include "physics/euler.hpp"

namespace usbp {

enum class SplittingKind { LaxFriedrichs, StegerWarming, VanLeerHaenel, FullUpwind };

std::string to_string(SplittingKind kind);
SplittingKind splitting_from_string(const std::string& name);

/// Polynomial order of the splitting's dependence on the metric vector
/// (1 for Lax-Friedrichs, 2 for Steger-Warming and van Leer-Haenel).
int metric_order(SplittingKind kind);

/// f±(u) = (f(u) ± lambda_max u)/2 for a scalar conservation law.
inline double lax_friedrichs_scalar(double u, double f, double lambda_max, int sign) {
  return 0.5 * (f + sign * lambda_max * u);
}

/// 1D Euler splittings. sign = +1 selects f+, -1 selects f-.
Vec3 split_flux_1d(SplittingKind kind, const Vec3& u, int sign, double lambda_max);

/// Directional 2D Euler splittings evaluated with the metric vector
/// (k1, k2) in its polynomial-in-metric form: van Leer-Haenel and
/// Steger-Warming use the unnormalized contravariant velocity k.v, so van
/// Leer-Haenel is an exact quadratic in (k1, k2); Lax-Friedrichs is
/// (k.f ± lambda u)/2 with the lambda supplied by the caller (held constant
/// per element and direction).
Vec4 split_flux_2d(SplittingKind kind, const Vec4& u, double k1, double k2, int sign,
                   double lambda);

/// Both throw SimulationAbort (location unknown, indices -1) on rho <= 0 or
/// p <= 0; semidiscretizations pre-check states and annotate the location.

}  // namespace usbp

#endif
