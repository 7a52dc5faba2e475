#ifndef USBP_PHYSICS_PROBLEMS_HPP
#define USBP_PHYSICS_PROBLEMS_HPP

#include <functional>
#include <random>
#include <string>

#include "physics/euler.hpp"

namespace usbp {

/// Manufactured 1D Euler solution rho = h, v = 1, rho e = h^2 with
/// h = 2 + 0.1 sin(pi (x - t)) on t in [0,2], x in [0,2].
namespace manufactured {

inline double h(double t, double x) { return 2.0 + 0.1 * std::sin(M_PI * (x - t)); }

inline Vec3 exact_state(double t, double x) {
  const double hv = h(t, x);
  return Vec3(hv, hv, hv * hv);
}

/// source = d_t u* + d_x f(u*); the mass component vanishes identically and
/// the momentum/energy components both equal d_x p = (gamma-1)(2h - 1/2) h_x.
inline Vec3 source(double t, double x) {
  const double hv = h(t, x);
  const double hx = 0.1 * M_PI * std::cos(M_PI * (x - t));
  const double px = (kGamma - 1.0) * (2.0 * hv - 0.5) * hx;
  return Vec3(0.0, px, px);
}

}  // namespace manufactured

enum class InitialCondition {
  AdvectionSine,
  IsentropicVortex,
  KelvinHelmholtz,
  FreeStream,
  RandomNonnegative
};

InitialCondition initial_condition_from_string(const std::string& name);

/// u(0,x) = sin(pi x) on [-1,1].
inline double advection_sine(double x) { return std::sin(M_PI * x); }

/// Isentropic vortex on [-5,5]^2: strength eps=10, background rho0=1,
/// v0=(1,1), p0=10. Exact solution at time t is the initial state advected
/// by the background velocity (periodic wrap).
Vec4 isentropic_vortex(double x, double y);
Vec4 isentropic_vortex_exact(double t, double x, double y);

/// Kelvin-Helmholtz shear layer on [-1,1]^2 with smoothed step
/// B = tanh(15y + 7.5) - tanh(15y - 7.5).
Vec4 kelvin_helmholtz(double x, double y);

/// Constant state u_inf = (1.0, 0.1, -0.2, 10.0) in conserved variables.
Vec4 free_stream();

/// Componentwise uniform on [0.1, 1.1] from a seeded generator (Burgers states).
double random_nonnegative(std::mt19937_64& rng);

}  // namespace usbp

#endif
