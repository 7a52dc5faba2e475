#include "physics/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace usbp {

InitialCondition initial_condition_from_string(const std::string& name) {
  if (name == "advection-sine") return InitialCondition::AdvectionSine;
  if (name == "isentropic-vortex") return InitialCondition::IsentropicVortex;
  if (name == "kelvin-helmholtz") return InitialCondition::KelvinHelmholtz;
  if (name == "free-stream") return InitialCondition::FreeStream;
  if (name == "random-nonnegative") return InitialCondition::RandomNonnegative;
  throw std::invalid_argument("unknown initial condition: " + name);
}

namespace {
constexpr double kVortexStrength = 10.0;
constexpr double kVortexRho0 = 1.0;
constexpr double kVortexP0 = 10.0;
constexpr double kVortexV0 = 1.0;  // both components
}  // namespace

Vec4 isentropic_vortex(double x, double y) {
  const double r2 = x * x + y * y;
  const double t0 = kVortexP0 / kVortexRho0;
  const double temp = t0 - (kGamma - 1.0) * kVortexStrength * kVortexStrength /
                               (8.0 * kGamma * M_PI * M_PI) * std::exp(1.0 - r2);
  const double rho = kVortexRho0 * std::pow(temp / t0, 1.0 / (kGamma - 1.0));
  const double swirl = kVortexStrength / (2.0 * M_PI) * std::exp(0.5 * (1.0 - r2));
  const double v1 = kVortexV0 - swirl * y;
  const double v2 = kVortexV0 + swirl * x;
  const double p = rho * temp;
  return euler2::from_primitive(rho, v1, v2, p);
}

Vec4 isentropic_vortex_exact(double t, double x, double y) {
  // advected by the background velocity on the periodic box [-5,5]^2
  auto wrap = [](double v) {
    v = std::fmod(v + 5.0, 10.0);
    if (v < 0.0) v += 10.0;
    return v - 5.0;
  };
  return isentropic_vortex(wrap(x - kVortexV0 * t), wrap(y - kVortexV0 * t));
}

Vec4 kelvin_helmholtz(double x, double y) {
  const double b = std::tanh(15.0 * y + 7.5) - std::tanh(15.0 * y - 7.5);
  const double rho = 0.5 + 0.75 * b;
  const double v1 = 0.5 * (b - 1.0);
  const double v2 = 0.1 * std::sin(2.0 * M_PI * x);
  return euler2::from_primitive(rho, v1, v2, 1.0);
}

Vec4 free_stream() { return Vec4(1.0, 0.1, -0.2, 10.0); }

double random_nonnegative(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.1, 1.1);
  return dist(rng);
}

}  // namespace usbp
