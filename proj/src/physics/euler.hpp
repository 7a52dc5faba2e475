#ifndef USBP_PHYSICS_EULER_HPP
#define USBP_PHYSICS_EULER_HPP

#include <Eigen/Dense>

namespace usbp {

/// Ratio of specific heats for all Euler runs.
inline constexpr double kGamma = 1.4;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

/// 1D compressible Euler, conserved variables (rho, rho v, rho e).
namespace euler1 {

inline double pressure(const Vec3& u) {
  return (kGamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
}

inline double sound_speed(const Vec3& u) {
  return std::sqrt(kGamma * pressure(u) / u[0]);
}

inline bool admissible(const Vec3& u) {
  return u[0] > 0.0 && pressure(u) > 0.0;
}

inline Vec3 flux(const Vec3& u) {
  const double v = u[1] / u[0];
  const double p = pressure(u);
  return Vec3(u[1], u[1] * v + p, (u[2] + p) * v);
}

inline double max_wave_speed(const Vec3& u) {
  return std::abs(u[1] / u[0]) + sound_speed(u);
}

inline Vec3 from_primitive(double rho, double v, double p) {
  return Vec3(rho, rho * v, p / (kGamma - 1.0) + 0.5 * rho * v * v);
}

}  // namespace euler1

/// 2D compressible Euler, conserved variables (rho, rho v1, rho v2, rho e).
namespace euler2 {

inline double pressure(const Vec4& u) {
  return (kGamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
}

inline double sound_speed(const Vec4& u) {
  return std::sqrt(kGamma * pressure(u) / u[0]);
}

inline bool admissible(const Vec4& u) {
  return u[0] > 0.0 && pressure(u) > 0.0;
}

/// Contravariant flux k1 f1(u) + k2 f2(u).
inline Vec4 flux(const Vec4& u, double k1, double k2) {
  const double v1 = u[1] / u[0];
  const double v2 = u[2] / u[0];
  const double p = pressure(u);
  const double vn = k1 * v1 + k2 * v2;
  return Vec4(u[0] * vn, u[1] * vn + k1 * p, u[2] * vn + k2 * p, (u[3] + p) * vn);
}

inline Vec4 from_primitive(double rho, double v1, double v2, double p) {
  return Vec4(rho, rho * v1, rho * v2,
              p / (kGamma - 1.0) + 0.5 * rho * (v1 * v1 + v2 * v2));
}

}  // namespace euler2

}  // namespace usbp

#endif
