#include "qutrit/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qutrit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double wrap_azimuth(double phi) {
  double r = std::fmod(phi, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

// A root held as num/den so that den = 0 represents infinity without
// overflow.
struct ProjectiveRoot {
  Complex num;
  Complex den;

  Star star() const {
    if (den == Complex{}) return Star{kPi, 0.0};
    if (num == Complex{}) return Star{0.0, 0.0};
    const double theta = 2.0 * std::atan2(std::abs(num), std::abs(den));
    return Star::make(theta, std::arg(num) - std::arg(den));
  }

  StereoPoint stereo() const {
    if (den == Complex{}) return StereoPoint::infinity();
    return StereoPoint::finite(num / den);
  }
};

std::array<ProjectiveRoot, 2> star_polynomial_roots(const QutritState& psi) {
  const Complex c1 = psi[0];
  const Complex c0 = psi[1];
  const Complex cm = psi[2];
  // (c1/sqrt2) z^2 - c0 z + cm/sqrt2 = 0  <=>  c1 z^2 - sqrt2 c0 z + cm = 0,
  // roots (c0 +- sqrt(c0^2 - 2 c1 cm)) / (sqrt2 c1). Take the branch without
  // cancellation and recover the other root from z1 z2 = cm / c1.
  const Complex sq = std::sqrt(c0 * c0 - 2.0 * c1 * cm);
  const Complex plus = c0 + sq;
  const Complex minus = c0 - sq;
  const Complex q = std::abs(plus) >= std::abs(minus) ? plus : minus;

  if (q == Complex{}) {
    // c0 = 0 and c1 cm = 0: a double root at 0 or at infinity.
    if (c1 != Complex{}) return {ProjectiveRoot{0.0, 1.0}, ProjectiveRoot{0.0, 1.0}};
    return {ProjectiveRoot{1.0, 0.0}, ProjectiveRoot{1.0, 0.0}};
  }
  return {ProjectiveRoot{q, kSqrt2 * c1}, ProjectiveRoot{kSqrt2 * cm, q}};
}

}  // namespace

Star Star::make(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw InvalidArgument("star angles must be finite");
  if (theta < 0.0 || theta > kPi)
    throw InvalidArgument("star colatitude must lie in [0, pi]");
  return Star{theta, wrap_azimuth(phi)};
}

std::array<double, 3> Star::cartesian() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

bool Star::at_infinity() const { return theta >= kPi; }

double angular_distance(const Star& a, const Star& b) {
  const auto x = a.cartesian();
  const auto y = b.cartesian();
  const std::array<double, 3> cross{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                                    x[0] * y[1] - x[1] * y[0]};
  const double s = std::sqrt(cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]);
  const double c = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  return std::atan2(s, c);
}

double StarPair::distance_up_to_swap(const StarPair& a, const StarPair& b) {
  const double same = std::max(angular_distance(a.first, b.first),
                               angular_distance(a.second, b.second));
  const double swapped = std::max(angular_distance(a.first, b.second),
                                  angular_distance(a.second, b.first));
  return std::min(same, swapped);
}

Complex StereoPoint::zeta() const {
  if (infinite_) throw InvalidArgument("point at infinity has no finite coordinate");
  return zeta_;
}

StereoPoint star_to_zeta(const Star& star) {
  if (star.at_infinity()) return StereoPoint::infinity();
  return StereoPoint::finite(std::tan(0.5 * star.theta) * std::polar(1.0, star.phi));
}

Star zeta_to_star(const StereoPoint& z) {
  if (z.is_infinite()) return Star{kPi, 0.0};
  const Complex zeta = z.zeta();
  if (zeta == Complex{}) return Star{0.0, 0.0};
  return Star::make(2.0 * std::atan(std::abs(zeta)), std::arg(zeta));
}

QutritState stars_to_state(const StarPair& stars) {
  const StereoPoint z1 = star_to_zeta(stars.first);
  const StereoPoint z2 = star_to_zeta(stars.second);
  if (z1.is_infinite() && z2.is_infinite()) return QutritState(Vec3{0.0, 0.0, 1.0});
  if (z1.is_infinite() || z2.is_infinite()) {
    // Dividing (1, (z1 + z2)/sqrt2, z1 z2) by the infinite root leaves
    // (0, 1/sqrt2, z_finite).
    const Complex zf = z1.is_infinite() ? z2.zeta() : z1.zeta();
    return QutritState::normalize(Vec3{0.0, 1.0, kSqrt2 * zf});
  }
  const Complex a = z1.zeta();
  const Complex b = z2.zeta();
  return QutritState::normalize(Vec3{1.0, (a + b) / kSqrt2, a * b});
}

std::array<StereoPoint, 2> state_to_zetas(const QutritState& psi) {
  const auto roots = star_polynomial_roots(psi);
  return {roots[0].stereo(), roots[1].stereo()};
}

StarPair state_to_stars(const QutritState& psi) {
  const auto roots = star_polynomial_roots(psi);
  return {roots[0].star(), roots[1].star()};
}

double msr_norm_squared(Complex z1, Complex z2) {
  return 1.0 + 0.5 * std::norm(z1 + z2) + std::norm(z1 * z2);
}

Mat3 msr_density_matrix(const StarPair& stars) {
  const StereoPoint p1 = star_to_zeta(stars.first);
  const StereoPoint p2 = star_to_zeta(stars.second);
  if (p1.is_infinite() || p2.is_infinite()) {
    const Vec3& c = stars_to_state(stars).amplitudes();
    return Mat3::outer(c, c);
  }
  const Complex z1 = p1.zeta();
  const Complex z2 = p2.zeta();
  const Complex s = z1 + z2;
  const Complex p = z1 * z2;
  const double inv = 1.0 / msr_norm_squared(z1, z2);

  Mat3 m;
  m(0, 0) = 1.0;
  m(0, 1) = std::conj(s) / kSqrt2;
  m(0, 2) = std::conj(p);
  m(1, 0) = s / kSqrt2;
  m(1, 1) = 0.5 * std::norm(s);
  m(1, 2) = std::conj(p) * s / kSqrt2;
  m(2, 0) = p;
  m(2, 1) = p * std::conj(s) / kSqrt2;
  m(2, 2) = std::norm(p);
  m *= inv;
  return m;
}

MsrParams msr_to_ivr_params(const StarPair& stars) {
  MsrParams out;
  out.readout = matrix_to_params(msr_density_matrix(stars));

  const StereoPoint p1 = star_to_zeta(stars.first);
  const StereoPoint p2 = star_to_zeta(stars.second);
  if (p1.is_infinite() || p2.is_infinite()) return out;

  const double al1 = p1.alpha(), be1 = p1.beta();
  const double al2 = p2.alpha(), be2 = p2.beta();
  const double r1 = al1 * al1 + be1 * be1;
  const double r2 = al2 * al2 + be2 * be2;
  const double inv = 1.0 / msr_norm_squared(p1.zeta(), p2.zeta());

  SpinParams f;
  f.omega1 = inv;
  f.omega2 = 0.5 * inv * ((al1 + al2) * (al1 + al2) + (be1 + be2) * (be1 + be2));
  f.omega3 = inv * r1 * r2;
  f.q1 = -kSqrt2 * inv * (al1 * r2 + al2 * r1);
  f.a1 = -kSqrt2 * inv * (be1 * r2 + be2 * r1);
  f.q2 = 2.0 * inv * (al1 * al2 - be1 * be2);
  f.a2 = 2.0 * inv * (al1 * be2 + al2 * be1);
  f.q3 = kSqrt2 * inv * (al1 + al2);
  f.a3 = -kSqrt2 * inv * (be1 + be2);
  out.closed_form = f;

  static constexpr std::array<const char*, 9> kNames{
      "omega1", "omega2", "omega3", "a1", "a2", "a3", "q1", "q2", "q3"};
  const auto cf = f.as_array();
  const auto rd = out.readout.as_array();
  for (std::size_t k = 0; k < 9; ++k)
    if (std::abs(cf[k] - rd[k]) > kMsrParamTol)
      out.discrepancies.push_back({kNames[k], cf[k], rd[k]});
  return out;
}

std::vector<SweepRow> msr_angle_sweep(double theta1, double phi1, double phi2,
                                      const std::vector<double>& theta2_grid) {
  if (theta2_grid.empty()) throw InvalidArgument("msr_angle_sweep: empty grid");
  const Star fixed = Star::make(theta1, phi1);
  std::vector<SweepRow> rows;
  rows.reserve(theta2_grid.size());
  for (double th2 : theta2_grid) {
    const StarPair stars{fixed, Star::make(th2, phi2)};
    const InvariantVectors iv = compute_invariants(pure_from_state(stars_to_state(stars)));
    rows.push_back(SweepRow{
        th2, {vector_angles(iv.w), vector_angles(iv.u), vector_angles(iv.v)}});
  }
  return rows;
}

}  // namespace qutrit
