#pragma once

// Majorana stars of a spin-1 (qutrit) pure state.
//
// A state (C1, C0, C-1) corresponds to the two roots of
//   (C1/sqrt2) z^2 - C0 z + C-1/sqrt2 = 0,
// each root mapped to the unit sphere by z = tan(theta/2) e^{i phi}. The
// inverse direction uses Vieta: state ~ (1, (z1 + z2)/sqrt2, z1 z2).
// A star at the south pole (theta = pi) is the root at infinity and lowers
// the degree of the polynomial; it is carried explicitly, never as a huge
// float.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qutrit/density.hpp"
#include "qutrit/invariants.hpp"

namespace qutrit {

struct Star {
  double theta = 0.0;  ///< colatitude, [0, pi]
  double phi = 0.0;    ///< azimuth, [0, 2pi)

  /// Normalizes the azimuth into [0, 2pi) and checks theta in [0, pi].
  static Star make(double theta, double phi);

  std::array<double, 3> cartesian() const;
  bool at_infinity() const;
};

/// Great-circle angle between two stars.
double angular_distance(const Star& a, const Star& b);

/// Unordered pair of stars.
struct StarPair {
  Star first;
  Star second;

  /// Max angular error after choosing the better of the two pairings.
  static double distance_up_to_swap(const StarPair& a, const StarPair& b);
};

/// Stereographic image of a star: a finite point zeta = alpha + i beta of the
/// equatorial plane, or the point at infinity.
class StereoPoint {
public:
  static StereoPoint finite(Complex zeta) { return StereoPoint(zeta, false); }
  static StereoPoint infinity() { return StereoPoint({}, true); }

  bool is_infinite() const { return infinite_; }
  /// Throws InvalidArgument for the point at infinity.
  Complex zeta() const;
  double alpha() const { return zeta().real(); }
  double beta() const { return zeta().imag(); }

private:
  StereoPoint(Complex z, bool inf) : zeta_(z), infinite_(inf) {}
  Complex zeta_;
  bool infinite_;
};

/// zeta = tan(theta/2) e^{i phi}; theta = pi maps to infinity.
StereoPoint star_to_zeta(const Star& star);
/// Inverse of star_to_zeta.
Star zeta_to_star(const StereoPoint& z);

QutritState stars_to_state(const StarPair& stars);

/// Roots of the star polynomial (unordered). Throws on a zero state.
std::array<StereoPoint, 2> state_to_zetas(const QutritState& psi);
StarPair state_to_stars(const QutritState& psi);

/// Closed-form density matrix in terms of zeta1, zeta2 with 1/N^2 prefactor;
/// falls back to the outer product when a star is at infinity.
Mat3 msr_density_matrix(const StarPair& stars);

/// N^2 = 1 + |z1 + z2|^2 / 2 + |z1 z2|^2 (both stars finite).
double msr_norm_squared(Complex z1, Complex z2);

struct MsrParamDiscrepancy {
  std::string parameter;
  double closed_form = 0.0;
  double readout = 0.0;
};

struct MsrParams {
  /// Layout readout of the density matrix built from the stars.
  SpinParams readout;
  /// Closed-form star-coordinate expressions, as published; empty when a
  /// star is at infinity.
  std::optional<SpinParams> closed_form;
  /// Entries where closed_form and readout differ by more than 1e-12.
  std::vector<MsrParamDiscrepancy> discrepancies;
};

inline constexpr double kMsrParamTol = 1e-12;

MsrParams msr_to_ivr_params(const StarPair& stars);

struct SweepRow {
  double theta2 = 0.0;
  std::array<SphericalAngles, 3> angles{};
};

/// Star 1 fixed at (theta1, phi1), star 2 at azimuth phi2 with colatitude
/// swept over `theta2_grid` (each in [0, pi]).
std::vector<SweepRow> msr_angle_sweep(double theta1, double phi1, double phi2,
                                      const std::vector<double>& theta2_grid);

}  // namespace qutrit
