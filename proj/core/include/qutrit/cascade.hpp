#pragma once

// Cascade (ladder) three-level model with equal level spacing and equal
// nearest-neighbour couplings. In the reduced form
//
//   H = w [ -cos t          sin t e^{-id}/r2   0               ]
//         [ sin t e^{id}/r2  0                 sin t e^{-id}/r2 ]
//         [ 0                sin t e^{id}/r2   cos t            ]
//
// (w = frequency, t = mixing angle, d = coupling phase, r2 = sqrt 2) the
// spectrum is (-w, 0, w) and evolution from |0> is available in closed form.
//
// Two parameter sources exist for trajectories. `pipeline` builds rho from the
// evolved state and reads the layout parameters off it. `paper-formulas`
// evaluates a published set of closed forms literally; those closed forms do
// not agree with the pipeline (see audit_parameters) and are kept so the
// published figure data can be regenerated.

#include <array>
#include <string>
#include <vector>

#include "qutrit/density.hpp"
#include "qutrit/invariants.hpp"

namespace qutrit {

/// Raw level/coupling inputs before the cascade reductions are applied.
struct LevelInputs {
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  std::array<double, 6> g{};  ///< g1..g6 of the general coupling matrix
  double field = 0.0;         ///< external field amplitude phi
};

class CascadeParams {
public:
  /// Direct form. Requires frequency > 0 and finite angles.
  CascadeParams(double frequency, double mixing_angle, double phase);

  /// From detuning eps1, coupling magnitude G, coupling phase and field phi:
  /// frequency = sqrt(eps1^2 + 2 phi^2 G^2), angle = atan2(phi G sqrt2, eps1).
  static CascadeParams from_couplings(double eps1, double coupling, double phase,
                                      double field);

  /// From g1 + i g2 = G e^{i delta}.
  static CascadeParams from_components(double eps1, double g1, double g2,
                                       double field);

  /// Applies the cascade reductions to general inputs. Requires eps2 = eps1,
  /// g5 = g1 and g6 = g2 (within 1e-12, relative to the input scale); the
  /// 1<->3 couplings g3, g4 are discarded.
  static CascadeParams from_levels(const LevelInputs& in);

  double frequency() const { return frequency_; }
  double mixing_angle() const { return mixing_angle_; }
  double phase() const { return phase_; }

  /// eps1 = w cos(theta)
  double eps1() const;
  /// phi G sqrt2 = w sin(theta)
  double field_coupling() const;

private:
  double frequency_;
  double mixing_angle_;
  double phase_;
};

Mat3 build_hamiltonian(const CascadeParams& p);

/// Eigenvectors for eigenvalues (-w, 0, w), in that order.
std::array<Vec3, 3> analytic_eigenvectors(const CascadeParams& p);

/// Closed-form state at time t starting from (1, 0, 0).
QutritState evolve_closed_form(const CascadeParams& p, double t);

/// Literal evaluation of the published population/coherence closed forms.
SpinParams closed_form_parameters(const CascadeParams& p, double t);

/// Layout parameters of |psi(t)><psi(t)|.
SpinParams pipeline_parameters(const CascadeParams& p, double t);

enum class ParamSource { ClosedForm, Pipeline };

std::string to_string(ParamSource s);
/// Accepts "paper-formulas" or "pipeline".
ParamSource parse_source(const std::string& s);

struct AuditSample {
  double t = 0.0;
  SpinParams closed_form;
  SpinParams pipeline;
  std::array<double, 9> abs_diff{};  ///< same order as SpinParams::as_array()
};

struct AuditReport {
  std::vector<AuditSample> samples;
  std::array<double, 9> max_abs_diff{};
  /// Per-parameter agreement at the audit tolerance.
  std::array<bool, 9> agrees{};
  double tolerance = 0.0;
  bool all_agree() const;
  std::vector<std::string> notes;
};

inline constexpr double kAuditTol = 1e-9;

/// Compares the two parameter sources over a time grid. Never throws on
/// divergence; throws InvalidArgument on an empty grid.
AuditReport audit_parameters(const CascadeParams& p, const std::vector<double>& t_grid);

struct TrajectorySample {
  double t = 0.0;
  double phase_angle = 0.0;  ///< w t
  QutritState state;
  SpinParams params;
  InvariantVectors vectors;
  /// v is unavailable (NaN) when the source parameters are not a physical
  /// density matrix and its radicand is negative.
  std::array<SphericalAngles, 3> angles{};
};

struct Trajectory {
  ParamSource source = ParamSource::Pipeline;
  std::vector<TrajectorySample> samples;
};

/// Requires a nonempty, strictly increasing grid of t >= 0.
Trajectory angle_trajectory(const CascadeParams& p, const std::vector<double>& t_grid,
                            ParamSource source);

/// n >= 2 uniformly spaced points on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace qutrit
