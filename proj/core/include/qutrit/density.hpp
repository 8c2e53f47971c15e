#pragma once

// Nine-parameter spin-1 layout of a qutrit density matrix:
//
//        [ w1              (q3 + i a3)/2    (q2 - i a2)/2 ]
//   rho = [ (q3 - i a3)/2   w2              -(q1 + i a1)/2 ]
//        [ (q2 + i a2)/2   -(q1 - i a1)/2   w3            ]
//
// Parameters are always read from and written to this layout. The
// spin-operator traces <S_i^2>, <S_i>, <{S_i,S_j}> are reported separately by
// spin_expectations() and do NOT coincide with the layout parameters (their
// populations sum to 2, not 1).

#include <array>

#include "qutrit/linalg.hpp"

namespace qutrit {

struct SpinParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  Real3 omega() const { return {omega1, omega2, omega3}; }
  Real3 a() const { return {a1, a2, a3}; }
  Real3 q() const { return {q1, q2, q3}; }

  /// Order: omega1..3, a1..3, q1..3.
  std::array<double, 9> as_array() const;
  static SpinParams from_array(const std::array<double, 9>& x);

  static double max_abs_diff(const SpinParams& x, const SpinParams& y);

  bool operator==(const SpinParams&) const = default;
};

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

/// Throws InvalidArgument unless sum(omega) = 1 within kTraceTol and every
/// omega_i lies in [-kTraceTol, 1 + kTraceTol].
void validate(const SpinParams& p);

/// Unit-norm amplitudes of a pure qutrit state.
class QutritState {
public:
  /// Throws InvalidArgument unless |amps| = 1 within kUnitNormTol.
  explicit QutritState(const Vec3& amps);
  /// Normalizes; throws InvalidArgument on the zero vector.
  static QutritState normalize(const Vec3& amps);

  const Vec3& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  /// |<this|other>|, i.e. overlap modulo global phase.
  double overlap(const QutritState& other) const;

private:
  Vec3 amps_;
};

/// Exact layout; Hermitian by construction. Throws on trace violation.
Mat3 params_to_matrix(const SpinParams& p);

/// Exact inverse of params_to_matrix. Throws on non-Hermitian or
/// non-unit-trace input.
SpinParams matrix_to_params(const Mat3& rho);

/// Parameters of |psi><psi|.
SpinParams pure_from_state(const QutritState& psi);

struct PurityReport {
  /// Relations (i)-(iii): q_k^2 + a_k^2 - 4 w_i w_j for cyclic (k,i,j).
  std::array<double, 3> pair_residual{};
  /// Relation (iv): a2a3q1 + a3a1q2 + a1a2q3 - q1q2q3 - 8 w1w2w3.
  double cubic_residual = 0.0;
  std::array<bool, 4> passed{};

  bool all_passed() const { return passed[0] && passed[1] && passed[2] && passed[3]; }
};

inline constexpr double kPurityTol = 1e-9;

/// Reports the four algebraic pure-state relations; never throws on failure.
PurityReport check_purity_constraints(const SpinParams& p, double tol = kPurityTol);

/// Smallest eigenvalue of the reconstructed matrix is >= kPsdFloor.
bool is_positive_semidefinite(const SpinParams& p);

/// Diagnostic only: spin-1 operator expectation values of rho.
struct SpinExpectations {
  Real3 squares{};         ///< <S_i^2>
  Real3 linear{};          ///< <S_i>
  Real3 anticommutators{}; ///< <S_j S_k + S_k S_j>, indexed by the missing i
};

SpinExpectations spin_expectations(const Mat3& rho);

/// Dominant eigenvector of a rank-1 density matrix, phased so its largest
/// component is real and positive. Throws InvalidArgument when Tr rho^2 is
/// below 1 - tol (mixed state).
QutritState state_from_pure_params(const SpinParams& p, double tol = kPurityTol);

}  // namespace qutrit
