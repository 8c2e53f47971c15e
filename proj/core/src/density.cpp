#include "qutrit/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qutrit {

std::array<double, 9> SpinParams::as_array() const {
  return {omega1, omega2, omega3, a1, a2, a3, q1, q2, q3};
}

SpinParams SpinParams::from_array(const std::array<double, 9>& x) {
  return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8]};
}

double SpinParams::max_abs_diff(const SpinParams& x, const SpinParams& y) {
  const auto a = x.as_array();
  const auto b = y.as_array();
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void validate(const SpinParams& p) {
  const double sum = p.omega1 + p.omega2 + p.omega3;
  if (!(std::abs(sum - 1.0) <= kTraceTol))
    throw InvalidArgument("populations must sum to 1 (got " + std::to_string(sum) + ")");
  for (double w : p.omega())
    if (!(w >= -kTraceTol && w <= 1.0 + kTraceTol))
      throw InvalidArgument("population outside [0, 1]");
  for (double x : p.as_array())
    if (!std::isfinite(x)) throw InvalidArgument("non-finite parameter");
}

QutritState::QutritState(const Vec3& amps) : amps_(amps) {
  if (!(std::abs(amps.norm() - 1.0) <= kUnitNormTol))
    throw InvalidArgument("qutrit state must have unit norm");
}

QutritState QutritState::normalize(const Vec3& amps) {
  return QutritState(amps.normalized());
}

double QutritState::overlap(const QutritState& other) const {
  return std::abs(amps_.dot(other.amps_));
}

Mat3 params_to_matrix(const SpinParams& p) {
  validate(p);
  const Complex i{0.0, 1.0};
  Mat3 m;
  m(0, 0) = p.omega1;
  m(1, 1) = p.omega2;
  m(2, 2) = p.omega3;
  m(0, 1) = 0.5 * (p.q3 + i * p.a3);
  m(1, 0) = 0.5 * (p.q3 - i * p.a3);
  m(0, 2) = 0.5 * (p.q2 - i * p.a2);
  m(2, 0) = 0.5 * (p.q2 + i * p.a2);
  m(1, 2) = -0.5 * (p.q1 + i * p.a1);
  m(2, 1) = -0.5 * (p.q1 - i * p.a1);
  return m;
}

SpinParams matrix_to_params(const Mat3& rho) {
  if (!hermitian_check(rho, kHermitianTol))
    throw InvalidArgument("matrix_to_params: matrix is not Hermitian");
  if (!(std::abs(rho.trace().real() - 1.0) <= kTraceTol))
    throw InvalidArgument("matrix_to_params: trace is not 1");
  SpinParams p;
  p.omega1 = rho(0, 0).real();
  p.omega2 = rho(1, 1).real();
  p.omega3 = rho(2, 2).real();
  p.q3 = 2.0 * rho(0, 1).real();
  p.a3 = 2.0 * rho(0, 1).imag();
  p.q2 = 2.0 * rho(0, 2).real();
  p.a2 = -2.0 * rho(0, 2).imag();
  p.q1 = -2.0 * rho(1, 2).real();
  p.a1 = -2.0 * rho(1, 2).imag();
  return p;
}

SpinParams pure_from_state(const QutritState& psi) {
  const Vec3& c = psi.amplitudes();
  // The diagonal is taken as |c_i|^2 directly rather than from the outer
  // product so the populations are exactly real.
  Mat3 rho = Mat3::outer(c, c);
  for (std::size_t k = 0; k < 3; ++k) rho(k, k) = std::norm(c[k]);
  return matrix_to_params(rho);
}

PurityReport check_purity_constraints(const SpinParams& p, double tol) {
  PurityReport r;
  const auto w = p.omega();
  const auto a = p.a();
  const auto q = p.q();
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t i = (k + 1) % 3;
    const std::size_t j = (k + 2) % 3;
    r.pair_residual[k] = q[k] * q[k] + a[k] * a[k] - 4.0 * w[i] * w[j];
    r.passed[k] = std::abs(r.pair_residual[k]) <= tol;
  }
  const double cubic = p.a2 * p.a3 * p.q1 + p.a3 * p.a1 * p.q2 +
                       p.a1 * p.a2 * p.q3 - p.q1 * p.q2 * p.q3;
  r.cubic_residual = cubic - 8.0 * p.omega1 * p.omega2 * p.omega3;
  r.passed[3] = std::abs(r.cubic_residual) <= tol;
  return r;
}

bool is_positive_semidefinite(const SpinParams& p) {
  return eigensystem(params_to_matrix(p))[0].value >= kPsdFloor;
}

SpinExpectations spin_expectations(const Mat3& rho) {
  const auto& s = spin_operators();
  const std::array<const Mat3*, 3> ops{&s.s1, &s.s2, &s.s3};
  auto expect = [&rho](const Mat3& op) { return (rho * op).trace().real(); };

  SpinExpectations e;
  for (std::size_t k = 0; k < 3; ++k) {
    const Mat3& sk = *ops[k];
    const Mat3& si = *ops[(k + 1) % 3];
    const Mat3& sj = *ops[(k + 2) % 3];
    e.squares[k] = expect(sk * sk);
    e.linear[k] = expect(sk);
    e.anticommutators[k] = expect(si * sj + sj * si);
  }
  return e;
}

QutritState state_from_pure_params(const SpinParams& p, double tol) {
  const Mat3 rho = params_to_matrix(p);
  const double purity = trace_powers(rho).tr2;
  if (purity < 1.0 - tol)
    throw InvalidArgument("mixed state has no state vector (Tr rho^2 = " +
                          std::to_string(purity) + ")");
  Vec3 v = eigensystem(rho)[2].vector;
  std::size_t big = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (std::abs(v[k]) > std::abs(v[big])) big = k;
  v *= std::conj(v[big]) / std::abs(v[big]);
  v[big] = std::abs(v[big]);
  return QutritState::normalize(v);
}

}  // namespace qutrit
