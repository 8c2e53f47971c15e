#include "qutrit/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qutrit {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool close_rel(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, scale);
}

}  // namespace

CascadeParams::CascadeParams(double frequency, double mixing_angle, double phase)
    : frequency_(frequency), mixing_angle_(mixing_angle), phase_(phase) {
  if (!(std::isfinite(frequency) && frequency > 0.0))
    throw InvalidArgument("cascade frequency must be finite and > 0");
  if (!std::isfinite(mixing_angle) || !std::isfinite(phase))
    throw InvalidArgument("cascade angles must be finite");
}

CascadeParams CascadeParams::from_couplings(double eps1, double coupling,
                                            double phase, double field) {
  const double off = field * coupling * kSqrt2;
  const double w = std::hypot(eps1, off);
  return CascadeParams(w, std::atan2(off, eps1), phase);
}

CascadeParams CascadeParams::from_components(double eps1, double g1, double g2,
                                             double field) {
  return from_couplings(eps1, std::hypot(g1, g2), std::atan2(g2, g1), field);
}

CascadeParams CascadeParams::from_levels(const LevelInputs& in) {
  const double eps1 = (-2.0 * in.e0 + in.e1 + in.e2) / 3.0;
  const double eps2 = (-in.e0 - in.e1 + 2.0 * in.e2) / 3.0;
  const double escale = std::max({std::abs(in.e0), std::abs(in.e1), std::abs(in.e2)});
  if (!close_rel(eps1, eps2, escale))
    throw InvalidArgument("cascade reduction requires eps2 = eps1 (equal level spacing)");
  const double gscale = std::max({std::abs(in.g[0]), std::abs(in.g[1]),
                                  std::abs(in.g[4]), std::abs(in.g[5])});
  if (!close_rel(in.g[0], in.g[4], gscale) || !close_rel(in.g[1], in.g[5], gscale))
    throw InvalidArgument("cascade reduction requires g5 = g1 and g6 = g2");
  return from_components(eps1, in.g[0], in.g[1], in.field);
}

double CascadeParams::eps1() const { return frequency_ * std::cos(mixing_angle_); }

double CascadeParams::field_coupling() const {
  return frequency_ * std::sin(mixing_angle_);
}

Mat3 build_hamiltonian(const CascadeParams& p) {
  const double w = p.frequency();
  const double c = std::cos(p.mixing_angle());
  const Complex hop = w * std::sin(p.mixing_angle()) / kSqrt2 *
                      std::polar(1.0, p.phase());
  Mat3 h;
  h(0, 0) = -w * c;
  h(2, 2) = w * c;
  h(1, 0) = hop;
  h(2, 1) = hop;
  h(0, 1) = std::conj(hop);
  h(1, 2) = std::conj(hop);
  return h;
}

std::array<Vec3, 3> analytic_eigenvectors(const CascadeParams& p) {
  const double th = p.mixing_angle();
  const double ch2 = std::pow(std::cos(th / 2.0), 2);
  const double sh2 = std::pow(std::sin(th / 2.0), 2);
  const double s = std::sin(th) / kSqrt2;
  const Complex em = std::polar(1.0, -p.phase());
  const Complex ep = std::polar(1.0, p.phase());
  return {
      Vec3{em * ch2, -s, ep * sh2},
      Vec3{em * s, std::cos(th), -ep * s},
      Vec3{em * sh2, s, ep * ch2},
  };
}

QutritState evolve_closed_form(const CascadeParams& p, double t) {
  const double th = p.mixing_angle();
  const double wt = p.frequency() * t;
  const double s = std::sin(th);
  const double c = std::cos(th);
  const double s2 = s * s;
  const double cw = std::cos(wt);
  const double sw = std::sin(wt);
  const Complex i{0.0, 1.0};

  Vec3 psi;
  psi[0] = (1.0 - 0.5 * s2) * cw + 0.5 * s2 + i * sw * c;
  psi[1] = s / kSqrt2 * (c * (1.0 - cw) - i * sw) * std::polar(1.0, p.phase());
  psi[2] = -0.5 * s2 * (1.0 - cw) * std::polar(1.0, 2.0 * p.phase());
  // The amplitudes are unit norm analytically; renormalizing only removes
  // roundoff.
  return QutritState::normalize(psi);
}

SpinParams closed_form_parameters(const CascadeParams& p, double t) {
  const double th = p.mixing_angle();
  const double d = p.phase();
  const double wt = p.frequency() * t;
  const double st = std::sin(th);
  const double ct = std::cos(th);
  const double c2t = std::cos(2.0 * th);
  const double cw = std::cos(wt);
  const double sw = std::sin(wt);
  const double cd = std::cos(d);
  const double sd = std::sin(d);
  const double c2d = std::cos(2.0 * d);
  const double s2d = std::sin(2.0 * d);

  SpinParams r;
  r.omega1 = 0.25 * (3.0 + c2t) * cw * cw;
  r.omega2 = 0.25 * (3.0 + c2t) * sw * sw;
  r.omega3 = 0.25 * (1.0 - c2t);

  // (q1, a1): the repeated (1 - cos wt) factor is evaluated as printed.
  {
    const double pre = st / (2.0 * kSqrt2) * (1.0 - c2t) * (1.0 - cw);
    const double even = ct * (1.0 - cw);
    r.q1 = pre * (even * cd - sw * sd);
    r.a1 = pre * (-even * sd - sw * cd);
  }
  // (q2, a2)
  {
    const double pre = (1.0 - c2t) / 8.0 * (1.0 - cw);
    const double even = -((1.0 - c2t) + (3.0 + c2t) * cw);
    const double odd = 4.0 * ct * sw;
    r.q2 = pre * (even * c2d - odd * s2d);
    r.a2 = pre * (even * s2d + odd * c2d);
  }
  // (q3, a3): prefactor applied to both bracketed terms, cos(theta) to the
  // first only, mirroring the (q1, a1) structure.
  {
    const double pre = st / (4.0 * kSqrt2);
    const double even = ct * (-(5.0 + 3.0 * c2t) + 4.0 * (1.0 + c2t) * cw +
                              (1.0 - c2t) * std::cos(2.0 * wt));
    const double odd = 2.0 * (3.0 + c2t) * sw + (1.0 - c2t) * std::sin(2.0 * wt);
    r.q3 = pre * (even * cd + odd * sd);
    r.a3 = pre * (-even * sd + odd * cd);
  }
  return r;
}

SpinParams pipeline_parameters(const CascadeParams& p, double t) {
  return pure_from_state(evolve_closed_form(p, t));
}

std::string to_string(ParamSource s) {
  return s == ParamSource::ClosedForm ? "paper-formulas" : "pipeline";
}

ParamSource parse_source(const std::string& s) {
  if (s == "paper-formulas") return ParamSource::ClosedForm;
  if (s == "pipeline") return ParamSource::Pipeline;
  throw InvalidArgument("unknown parameter source '" + s +
                        "' (expected paper-formulas or pipeline)");
}

bool AuditReport::all_agree() const {
  return std::all_of(agrees.begin(), agrees.end(), [](bool b) { return b; });
}

AuditReport audit_parameters(const CascadeParams& p, const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw InvalidArgument("audit_parameters: empty time grid");
  AuditReport rep;
  rep.tolerance = kAuditTol;
  for (double t : t_grid) {
    AuditSample s{t, closed_form_parameters(p, t), pipeline_parameters(p, t), {}};
    const auto a = s.closed_form.as_array();
    const auto b = s.pipeline.as_array();
    for (std::size_t k = 0; k < 9; ++k) {
      s.abs_diff[k] = std::abs(a[k] - b[k]);
      rep.max_abs_diff[k] = std::max(rep.max_abs_diff[k], s.abs_diff[k]);
    }
    rep.samples.push_back(s);
  }
  for (std::size_t k = 0; k < 9; ++k) rep.agrees[k] = rep.max_abs_diff[k] <= rep.tolerance;
  rep.notes.push_back(
      "q1/a1 closed form carries a repeated (1 - cos wt) factor of ambiguous "
      "grouping; evaluated as printed");
  rep.notes.push_back(
      "q3/a3 closed form: leading prefactor applied to both bracketed terms");
  if (!rep.all_agree())
    rep.notes.push_back("closed-form parameters diverge from the evolved-state readout");
  return rep;
}

namespace {

void require_grid(const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw InvalidArgument("empty time grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0)) throw InvalidArgument("time grid must be >= 0");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw InvalidArgument("time grid must be strictly increasing");
  }
}

}  // namespace

Trajectory angle_trajectory(const CascadeParams& p, const std::vector<double>& t_grid,
                            ParamSource source) {
  require_grid(t_grid);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  Trajectory traj;
  traj.source = source;
  traj.samples.reserve(t_grid.size());
  for (double t : t_grid) {
    QutritState psi = evolve_closed_form(p, t);
    const SpinParams params = source == ParamSource::Pipeline
                                  ? pure_from_state(psi)
                                  : closed_form_parameters(p, t);
    InvariantVectors iv;
    iv.w = compute_w(params);
    iv.u = compute_u(params);
    iv.x = cubic_scalar(params);
    std::array<SphericalAngles, 3> ang{vector_angles(iv.w), vector_angles(iv.u), {}};
    try {
      iv.v = compute_v(params);
      ang[2] = vector_angles(iv.v);
    } catch (const InvalidArgument&) {
      // Only reachable for the closed-form source, whose parameters need
      // not describe a positive semidefinite matrix.
      if (source == ParamSource::Pipeline) throw;
      iv.v = {nan, nan, nan};
      ang[2] = {nan, nan};
    }
    traj.samples.push_back(TrajectorySample{t, p.frequency() * t, std::move(psi),
                                            params, iv, ang});
  }
  return traj;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw InvalidArgument("linspace needs at least 2 points");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

}  // namespace qutrit
