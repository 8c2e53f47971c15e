#pragma once

// Invariant vectors w, u, v of a qutrit density matrix.
//
// Their squared norms are the first three unitary invariants:
//   |w|^2 = Tr rho,  |u|^2 = Tr rho^2,  |v|^2 = 3 Tr rho^2 - 2 Tr rho^3.
//
// The third vector uses v_k^2 = X + (3/2) w_k (q_k^2 + a_k^2). The commonly
// quoted form without the w_k weight breaks the norm identity on any state
// with coherences; it is kept as printed_v_squared() for diagnostics only.

#include "qutrit/density.hpp"

namespace qutrit {

struct InvariantVectors {
  Real3 w{};
  Real3 u{};
  Real3 v{};
  double x = 0.0;  ///< cubic scalar shared by all components of v
};

struct SphericalAngles {
  double psi = 0.0;  ///< colatitude from the third axis, [0, pi/2]
  double chi = 0.0;  ///< azimuth in the first-second plane, [0, pi/2]
};

/// Radicands in [-kRadicandClamp, 0) are clamped to zero; anything more
/// negative is rejected.
inline constexpr double kRadicandClamp = 1e-12;

Real3 compute_w(const SpinParams& p);
Real3 compute_u(const SpinParams& p);
Real3 compute_v(const SpinParams& p);

/// 1/3 - 2 w1w2w3 - (a2a3q1 + a3a1q2 + a1a2q3 - q1q2q3)/2
double cubic_scalar(const SpinParams& p);

/// v_k^2 = X + 3(q_k^2 + a_k^2)/2, without clamping or square roots.
Real3 printed_v_squared(const SpinParams& p);

InvariantVectors compute_invariants(const SpinParams& p);

/// Throws InvalidArgument on a zero or negative-component vector.
SphericalAngles vector_angles(const Real3& vec);

double squared_norm(const Real3& v);

}  // namespace qutrit
