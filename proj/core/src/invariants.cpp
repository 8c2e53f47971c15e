#include "qutrit/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qutrit {

namespace {

double checked_sqrt(double radicand, const char* who) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandClamp) return 0.0;
  throw InvalidArgument(std::string(who) + ": negative radicand " +
                        std::to_string(radicand));
}

}  // namespace

double squared_norm(const Real3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

Real3 compute_w(const SpinParams& p) {
  validate(p);
  Real3 w;
  const auto om = p.omega();
  for (std::size_t k = 0; k < 3; ++k) w[k] = checked_sqrt(om[k], "compute_w");
  return w;
}

Real3 compute_u(const SpinParams& p) {
  validate(p);
  const auto om = p.omega();
  const auto a = p.a();
  const auto q = p.q();
  Real3 u;
  for (std::size_t k = 0; k < 3; ++k)
    u[k] = std::sqrt(om[k] * om[k] + 0.5 * (q[k] * q[k] + a[k] * a[k]));
  return u;
}

double cubic_scalar(const SpinParams& p) {
  const double triple = p.a2 * p.a3 * p.q1 + p.a3 * p.a1 * p.q2 +
                        p.a1 * p.a2 * p.q3 - p.q1 * p.q2 * p.q3;
  return 1.0 / 3.0 - 2.0 * p.omega1 * p.omega2 * p.omega3 - 0.5 * triple;
}

Real3 compute_v(const SpinParams& p) {
  validate(p);
  const double x = cubic_scalar(p);
  const auto om = p.omega();
  const auto a = p.a();
  const auto q = p.q();
  Real3 v;
  for (std::size_t k = 0; k < 3; ++k)
    v[k] = checked_sqrt(x + 1.5 * om[k] * (q[k] * q[k] + a[k] * a[k]), "compute_v");
  return v;
}

Real3 printed_v_squared(const SpinParams& p) {
  const double x = cubic_scalar(p);
  const auto a = p.a();
  const auto q = p.q();
  Real3 v2;
  for (std::size_t k = 0; k < 3; ++k) v2[k] = x + 1.5 * (q[k] * q[k] + a[k] * a[k]);
  return v2;
}

InvariantVectors compute_invariants(const SpinParams& p) {
  return {compute_w(p), compute_u(p), compute_v(p), cubic_scalar(p)};
}

SphericalAngles vector_angles(const Real3& vec) {
  for (double c : vec)
    if (!(c >= 0.0)) throw InvalidArgument("vector_angles: components must be >= 0");
  const double n = std::sqrt(squared_norm(vec));
  if (n == 0.0) throw InvalidArgument("vector_angles: zero vector");
  SphericalAngles s;
  s.psi = std::acos(std::min(1.0, vec[2] / n));
  s.chi = (vec[0] == 0.0 && vec[1] == 0.0) ? 0.0 : std::atan2(vec[1], vec[0]);
  return s;
}

}  // namespace qutrit
