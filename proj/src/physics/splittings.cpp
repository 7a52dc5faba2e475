#include "physics/splittings.hpp"

#include <cmath>
#include <stdexcept>

#include "support/errors.hpp"

namespace usbp {

std::string to_string(SplittingKind kind) {
  switch (kind) {
    case SplittingKind::LaxFriedrichs: return "lax-friedrichs";
    case SplittingKind::StegerWarming: return "steger-warming";
    case SplittingKind::VanLeerHaenel: return "van-leer-haenel";
    case SplittingKind::FullUpwind: return "full-upwind";
  }
  return "lax-friedrichs";
}

SplittingKind splitting_from_string(const std::string& name) {
  if (name == "lax-friedrichs" || name == "lf") return SplittingKind::LaxFriedrichs;
  if (name == "steger-warming" || name == "sw") return SplittingKind::StegerWarming;
  if (name == "van-leer-haenel" || name == "vlh") return SplittingKind::VanLeerHaenel;
  if (name == "full-upwind") return SplittingKind::FullUpwind;
  throw std::invalid_argument("unknown splitting: " + name);
}

int metric_order(SplittingKind kind) {
  return kind == SplittingKind::LaxFriedrichs || kind == SplittingKind::FullUpwind ? 1 : 2;
}

namespace {

[[noreturn]] void abort_inadmissible() {
  throw SimulationAbort(-1.0, -1, -1, "inadmissible state: nonpositive density or pressure");
}

inline double sign_split(double lambda, int sign) {
  return 0.5 * (lambda + sign * std::abs(lambda));
}

Vec3 steger_warming_1d(const Vec3& u, int sign) {
  const double rho = u[0];
  const double v = u[1] / rho;
  const double p = euler1::pressure(u);
  if (rho <= 0.0 || p <= 0.0) abort_inadmissible();
  const double a = std::sqrt(kGamma * p / rho);
  const double l1 = sign_split(v, sign);
  const double l2 = sign_split(v + a, sign);
  const double l3 = sign_split(v - a, sign);
  Vec3 f;
  f[0] = 2.0 * (kGamma - 1.0) * l1 + l2 + l3;
  f[1] = 2.0 * (kGamma - 1.0) * l1 * v + l2 * (v + a) + l3 * (v - a);
  f[2] = (kGamma - 1.0) * l1 * v * v + 0.5 * l2 * (v + a) * (v + a) +
         0.5 * l3 * (v - a) * (v - a) +
         (3.0 - kGamma) * (l2 + l3) * a * a / (2.0 * (kGamma - 1.0));
  return rho / (2.0 * kGamma) * f;
}

Vec3 van_leer_haenel_1d(const Vec3& u, int sign) {
  const double rho = u[0];
  const double v = u[1] / rho;
  const double p = euler1::pressure(u);
  if (rho <= 0.0 || p <= 0.0) abort_inadmissible();
  const double a = std::sqrt(kGamma * p / rho);
  const double mach = v / a;
  if (mach >= 1.0) return sign > 0 ? euler1::flux(u) : Vec3::Zero();
  if (mach <= -1.0) return sign > 0 ? Vec3::Zero() : euler1::flux(u);
  const double f_mass = sign * 0.25 * rho * a * (mach + sign) * (mach + sign);
  const double p_split = 0.5 * p * (1.0 + sign * kGamma * mach);
  const double enthalpy = (u[2] + p) / rho;
  return Vec3(f_mass, f_mass * v + p_split, f_mass * enthalpy);
}

Vec4 steger_warming_2d(const Vec4& u, double k1, double k2, int sign) {
  const double rho = u[0];
  const double v1 = u[1] / rho;
  const double v2 = u[2] / rho;
  const double p = euler2::pressure(u);
  if (rho <= 0.0 || p <= 0.0) abort_inadmissible();
  const double a = std::sqrt(kGamma * p / rho);
  const double vn = k1 * v1 + k2 * v2;
  const double l1 = sign_split(vn, sign);
  const double l2 = sign_split(vn + a, sign);
  const double l3 = sign_split(vn - a, sign);
  const double vv = v1 * v1 + v2 * v2;
  Vec4 f;
  f[0] = 2.0 * (kGamma - 1.0) * l1 + l2 + l3;
  f[1] = 2.0 * (kGamma - 1.0) * l1 * v1 + l2 * (v1 + a * k1) + l3 * (v1 - a * k1);
  f[2] = 2.0 * (kGamma - 1.0) * l1 * v2 + l2 * (v2 + a * k2) + l3 * (v2 - a * k2);
  f[3] = (kGamma - 1.0) * l1 * vv + 0.5 * l2 * (vv + 2.0 * a * vn + a * a) +
         0.5 * l3 * (vv - 2.0 * a * vn + a * a) +
         (3.0 - kGamma) * (l2 + l3) * a * a / (2.0 * (kGamma - 1.0));
  return rho / (2.0 * kGamma) * f;
}

Vec4 van_leer_haenel_2d(const Vec4& u, double k1, double k2, int sign) {
  const double rho = u[0];
  const double v1 = u[1] / rho;
  const double v2 = u[2] / rho;
  const double p = euler2::pressure(u);
  if (rho <= 0.0 || p <= 0.0) abort_inadmissible();
  const double a = std::sqrt(kGamma * p / rho);
  const double vn = k1 * v1 + k2 * v2;
  const double mach = vn / a;
  if (mach >= 1.0) return sign > 0 ? euler2::flux(u, k1, k2) : Vec4::Zero();
  if (mach <= -1.0) return sign > 0 ? Vec4::Zero() : euler2::flux(u, k1, k2);
  const double f_mass = sign * 0.25 * rho * a * (mach + sign) * (mach + sign);
  const double p_split = 0.5 * p * (1.0 + sign * kGamma * mach);
  const double enthalpy = (u[3] + p) / rho;
  return Vec4(f_mass, f_mass * v1 + k1 * p_split, f_mass * v2 + k2 * p_split,
              f_mass * enthalpy);
}

}  // namespace

Vec3 split_flux_1d(SplittingKind kind, const Vec3& u, int sign, double lambda_max) {
  switch (kind) {
    case SplittingKind::LaxFriedrichs:
      if (u[0] <= 0.0 || euler1::pressure(u) <= 0.0) abort_inadmissible();
      return 0.5 * (euler1::flux(u) + sign * lambda_max * u);
    case SplittingKind::StegerWarming:
      return steger_warming_1d(u, sign);
    case SplittingKind::VanLeerHaenel:
      return van_leer_haenel_1d(u, sign);
    case SplittingKind::FullUpwind:
      if (u[0] <= 0.0 || euler1::pressure(u) <= 0.0) abort_inadmissible();
      return sign > 0 ? euler1::flux(u) : Vec3::Zero();
  }
  throw std::invalid_argument("split_flux_1d: unknown splitting");
}

Vec4 split_flux_2d(SplittingKind kind, const Vec4& u, double k1, double k2, int sign,
                   double lambda) {
  switch (kind) {
    case SplittingKind::LaxFriedrichs:
      if (u[0] <= 0.0 || euler2::pressure(u) <= 0.0) abort_inadmissible();
      return 0.5 * (euler2::flux(u, k1, k2) + sign * lambda * u);
    case SplittingKind::StegerWarming:
      return steger_warming_2d(u, k1, k2, sign);
    case SplittingKind::VanLeerHaenel:
      return van_leer_haenel_2d(u, k1, k2, sign);
    case SplittingKind::FullUpwind:
      if (u[0] <= 0.0 || euler2::pressure(u) <= 0.0) abort_inadmissible();
      return sign > 0 ? euler2::flux(u, k1, k2) : Vec4::Zero();
  }
  throw std::invalid_argument("split_flux_2d: unknown splitting");
}

}  // namespace usbp
