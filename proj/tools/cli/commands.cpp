#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qutrit/cascade.hpp"
#include "qutrit/majorana.hpp"
#include "qutrit/serialize.hpp"

namespace qutrit::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

struct ModelOptions {
  double omega = 1.0;
  double theta = 3.0;
  double delta = 0.0;
  std::optional<double> eps1;
  std::optional<double> coupling;
  std::optional<double> field;
  std::optional<double> g1;
  std::optional<double> g2;

  CascadeParams resolve() const {
    const bool raw = eps1 || coupling || field || g1 || g2;
    if (!raw) return CascadeParams(omega, theta, delta);
    if (!eps1 || !field)
      throw InvalidArgument("--eps1 and --phi are both required for raw model inputs");
    if (coupling && (g1 || g2))
      throw InvalidArgument("give either --G (with --delta) or --g1/--g2, not both");
    if (coupling) return CascadeParams::from_couplings(*eps1, *coupling, delta, *field);
    return CascadeParams::from_components(*eps1, g1.value_or(0.0), g2.value_or(0.0), *field);
  }
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  bool degrees = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& m) {
  cmd->add_option("--omega", m.omega, "Cascade frequency (> 0)")->capture_default_str();
  cmd->add_option("--theta", m.theta, "Mixing angle in radians")->capture_default_str();
  cmd->add_option("--delta", m.delta, "Coupling phase in radians")->capture_default_str();
  cmd->add_option("--eps1", m.eps1, "Raw input: detuning eps1");
  cmd->add_option("--G", m.coupling, "Raw input: coupling magnitude");
  cmd->add_option("--phi", m.field, "Raw input: field amplitude");
  cmd->add_option("--g1", m.g1, "Raw input: real part of the coupling");
  cmd->add_option("--g2", m.g2, "Raw input: imaginary part of the coupling");
}

void add_output_options(CLI::App* cmd, OutputOptions& o, bool with_format) {
  if (with_format)
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  cmd->add_option("-o,--output", o.path, "Output file (default: standard output)");
  cmd->add_flag("--degrees", o.degrees, "Emit angles in degrees instead of radians");
}

// Writes to the --output file, or to `out` when none was given.
void emit(const OutputOptions& o, std::ostream& out, const std::string& text) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file '" + o.path + "'");
  f << text;
}

std::vector<double> parse_list(const std::string& s, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double x = std::stod(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(x);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(what) + ": '" + item + "' is not a number");
    }
  }
  if (out.size() != expected)
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(expected) +
                          " comma-separated numbers, got " + std::to_string(out.size()));
  for (double x : out)
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + ": values must be finite");
  return out;
}

std::vector<double> time_grid(const CascadeParams& p, double phase_max, int samples,
                              const std::vector<double>& extra_phases = {}) {
  if (!(phase_max > 0.0) || !std::isfinite(phase_max))
    throw InvalidArgument("--t-max must be finite and > 0");
  if (samples < 2) throw InvalidArgument("--samples must be >= 2");
  std::vector<double> phases = linspace(0.0, phase_max, static_cast<std::size_t>(samples));
  for (double x : extra_phases) {
    if (!(x >= 0.0)) throw InvalidArgument("--at values must be >= 0");
    phases.push_back(x);
  }
  std::sort(phases.begin(), phases.end());
  phases.erase(std::unique(phases.begin(), phases.end()), phases.end());
  std::vector<double> t;
  t.reserve(phases.size());
  for (double x : phases) t.push_back(x / p.frequency());
  return t;
}

json model_json(const CascadeParams& p) {
  return {{"omega", p.frequency()},
          {"theta", p.mixing_angle()},
          {"delta", p.phase()},
          {"eps1", p.eps1()},
          {"field_coupling", p.field_coupling()}};
}

json purity_json(const PurityReport& r) {
  return {{"pair_residuals", r.pair_residual},
          {"cubic_residual", r.cubic_residual},
          {"passed", r.passed},
          {"all_passed", r.all_passed()}};
}

// Printed third-invariant form vs the corrected one, both against the trace
// oracle 3 Tr rho^2 - 2 Tr rho^3.
json erratum_json(const SpinParams& p) {
  const TracePowers tp = trace_powers(params_to_matrix(p));
  const double oracle = 3.0 * tp.tr2 - 2.0 * tp.tr3;
  const Real3 printed = printed_v_squared(p);
  const double printed_sum = printed[0] + printed[1] + printed[2];
  const double corrected_sum = squared_norm(compute_v(p));
  return {{"trace_oracle", oracle},
          {"printed_sum_v2", printed_sum},
          {"corrected_sum_v2", corrected_sum},
          {"printed_residual", printed_sum - oracle},
          {"corrected_residual", corrected_sum - oracle}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- evolve

struct EvolveOptions {
  ModelOptions model;
  OutputOptions output;
  double phase_max = 4.0 * kPi;
  int samples = 400;
  std::string source = "paper-formulas";
};

void cmd_evolve(const EvolveOptions& o, std::ostream& out) {
  const CascadeParams p = o.model.resolve();
  const Trajectory traj =
      angle_trajectory(p, time_grid(p, o.phase_max, o.samples), parse_source(o.source));
  for (const auto& s : traj.samples)
    if (std::abs(s.state.amplitudes().norm() - 1.0) > kUnitNormTol)
      throw InvariantViolation("trajectory state lost unit norm");
  if (o.output.format == "json") {
    json j = trajectory_to_json(traj, o.output.degrees);
    j["model"] = model_json(p);
    emit(o.output, out, dump(j));
  } else {
    std::ostringstream ss;
    write_trajectory_csv(ss, traj, o.output.degrees);
    emit(o.output, out, ss.str());
  }
}

// ---------------------------------------------------------------- audit

struct AuditOptions {
  ModelOptions model;
  OutputOptions output;
  double phase_max = 4.0 * kPi;
  int samples = 9;
  std::vector<double> at;
  std::string injected;
};

void cmd_audit(const AuditOptions& o, std::ostream& out) {
  const CascadeParams p = o.model.resolve();
  const auto grid = time_grid(p, o.phase_max, o.samples, o.at);
  const AuditReport rep = audit_parameters(p, grid);

  json pipeline_purity = json::array();
  json closed_form_purity = json::array();
  json erratum = json::array();
  double max_purity = 0.0;
  double max_printed = 0.0;
  double max_corrected = 0.0;
  for (const auto& s : rep.samples) {
    const PurityReport pr = check_purity_constraints(s.pipeline);
    for (double r : pr.pair_residual) max_purity = std::max(max_purity, std::abs(r));
    max_purity = std::max(max_purity, std::abs(pr.cubic_residual));
    pipeline_purity.push_back(purity_json(pr));
    closed_form_purity.push_back(purity_json(check_purity_constraints(s.closed_form)));
    json e = erratum_json(s.pipeline);
    max_printed = std::max(max_printed, std::abs(e["printed_residual"].get<double>()));
    max_corrected = std::max(max_corrected, std::abs(e["corrected_residual"].get<double>()));
    e["t"] = s.t;
    erratum.push_back(std::move(e));
  }
  if (max_purity > kPurityTol)
    throw InvariantViolation("pipeline state violates the pure-state relations");

  json report{{"model", model_json(p)},
              {"parameter_audit", to_json(rep)},
              {"pipeline_purity",
               {{"max_abs_residual", max_purity},
                {"all_passed", max_purity <= kPurityTol},
                {"samples", std::move(pipeline_purity)}}},
              {"closed_form_purity", {{"samples", std::move(closed_form_purity)}}},
              {"third_invariant_erratum",
               {{"max_abs_printed_residual", max_printed},
                {"max_abs_corrected_residual", max_corrected},
                {"samples", std::move(erratum)}}}};

  if (!o.injected.empty()) {
    const auto x = parse_list(o.injected, 9, "--params");
    std::array<double, 9> arr{};
    std::copy(x.begin(), x.end(), arr.begin());
    const SpinParams ip = SpinParams::from_array(arr);
    validate(ip);
    const PurityReport pr = check_purity_constraints(ip);
    report["injected"] = {{"params", to_json(ip)},
                          {"purity", purity_json(pr)},
                          {"pure_constraint_failure", !pr.all_passed()},
                          {"third_invariant_erratum", erratum_json(ip)}};
  }
  emit(o.output, out, dump(report));
}

// ---------------------------------------------------------------- msr-sweep

struct SweepOptions {
  OutputOptions output;
  double theta1 = 1.0;
  double phi1 = 1.0;
  double phi2 = 4.0;
  double theta2_min = 0.0;
  double theta2_max = kPi;
  int samples = 361;
};

void cmd_msr_sweep(const SweepOptions& o, std::ostream& out) {
  if (o.samples < 2) throw InvalidArgument("--samples must be >= 2");
  if (!(o.theta2_min >= 0.0 && o.theta2_max <= kPi && o.theta2_min < o.theta2_max))
    throw InvalidArgument("theta2 range must satisfy 0 <= min < max <= pi");
  const auto grid =
      linspace(o.theta2_min, o.theta2_max, static_cast<std::size_t>(o.samples));
  const auto rows = msr_angle_sweep(o.theta1, o.phi1, o.phi2, grid);
  if (o.output.format == "json") {
    json j = sweep_to_json(rows, o.output.degrees);
    j["fixed"] = {{"theta1", o.theta1}, {"phi1", o.phi1}, {"phi2", o.phi2}};
    emit(o.output, out, dump(j));
  } else {
    std::ostringstream ss;
    write_sweep_csv(ss, rows, o.output.degrees);
    emit(o.output, out, ss.str());
  }
}

// ---------------------------------------------------------------- convert

struct ConvertOptions {
  OutputOptions output;
  std::string state;
  std::string stars;
  std::string params;
  std::string params_json;
};

json state_block(const QutritState& psi, bool degrees) {
  const StarPair stars = state_to_stars(psi);
  const QutritState back = stars_to_state(stars);
  if (back.overlap(psi) < 1.0 - 1e-9)
    throw InvariantViolation("state -> stars -> state round trip failed");
  const MsrParams msr = msr_to_ivr_params(stars);
  json discrepancies = json::array();
  for (const auto& d : msr.discrepancies)
    discrepancies.push_back(
        {{"parameter", d.parameter}, {"closed_form", d.closed_form}, {"readout", d.readout}});
  return {{"state", to_json(psi)},
          {"stars", to_json(stars, degrees)},
          {"msr_closed_form_discrepancies", std::move(discrepancies)}};
}

void cmd_convert(const ConvertOptions& o, std::ostream& out, std::ostream& err) {
  const int given = !o.state.empty() + !o.stars.empty() + !o.params.empty() +
                    !o.params_json.empty();
  if (given != 1)
    throw InvalidArgument("give exactly one of --state, --stars, --params, --params-json");

  json result;
  SpinParams params;
  if (!o.state.empty()) {
    const auto x = parse_list(o.state, 6, "--state");
    const QutritState psi =
        QutritState::normalize(Vec3{{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}});
    result = state_block(psi, o.output.degrees);
    result["input"] = "state";
    params = pure_from_state(psi);
  } else if (!o.stars.empty()) {
    const auto x = parse_list(o.stars, 4, "--stars");
    const StarPair stars{Star::make(x[0], x[1]), Star::make(x[2], x[3])};
    const QutritState psi = stars_to_state(stars);
    result = state_block(psi, o.output.degrees);
    result["input"] = "stars";
    params = pure_from_state(psi);
  } else {
    if (!o.params.empty()) {
      const auto x = parse_list(o.params, 9, "--params");
      std::array<double, 9> arr{};
      std::copy(x.begin(), x.end(), arr.begin());
      params = SpinParams::from_array(arr);
    } else {
      std::ifstream f(o.params_json);
      if (!f) throw InvalidArgument("cannot read '" + o.params_json + "'");
      json j;
      try {
        f >> j;
      } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
      }
      params = spin_params_from_json(j);
    }
    validate(params);
    if (!is_positive_semidefinite(params))
      throw InvalidArgument("density parameters are not positive semidefinite");
    const double purity = trace_powers(params_to_matrix(params)).tr2;
    if (purity >= 1.0 - kPurityTol) {
      result = state_block(state_from_pure_params(params), o.output.degrees);
    } else {
      result["state"] = nullptr;
      result["stars"] = nullptr;
      result["msr_error"] = "mixed state has no MSR";
      err << "note: mixed state has no MSR (Tr rho^2 = " << format_number(purity) << ")\n";
    }
    result["input"] = "params";
  }

  const TracePowers tp = trace_powers(params_to_matrix(params));
  result["params"] = to_json(params);
  result["trace_powers"] = {tp.tr1, tp.tr2, tp.tr3};
  result["purity"] = purity_json(check_purity_constraints(params));
  result["invariants"] = to_json(compute_invariants(params), o.output.degrees);
  result["angle_unit"] = o.output.degrees ? "degrees" : "radians";
  emit(o.output, out, dump(result));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant-vector and Majorana-star tools for qutrit states"};
  app.name(args.empty() ? "qutrit" : args.front());
  app.require_subcommand(1);

  EvolveOptions evolve;
  auto* ev = app.add_subcommand("evolve", "Cascade-model trajectory with invariant-vector angles");
  add_model_options(ev, evolve.model);
  add_output_options(ev, evolve.output, true);
  ev->add_option("--t-max", evolve.phase_max, "Grid end in units of 1/omega (omega t)")
      ->capture_default_str();
  ev->add_option("--samples", evolve.samples, "Number of grid points")->capture_default_str();
  ev->add_option("--source", evolve.source, "Parameter source")
      ->check(CLI::IsMember({"paper-formulas", "pipeline"}))
      ->capture_default_str();

  AuditOptions audit;
  auto* au = app.add_subcommand("audit", "Compare closed-form and evolved-state parameters");
  add_model_options(au, audit.model);
  add_output_options(au, audit.output, false);
  au->add_option("--t-max", audit.phase_max, "Grid end in units of 1/omega (omega t)")
      ->capture_default_str();
  au->add_option("--samples", audit.samples, "Number of grid points")->capture_default_str();
  au->add_option("--at", audit.at, "Extra omega t values to include (repeatable)");
  au->add_option("--params", audit.injected,
                 "Also check nine parameters omega1..3,a1..3,q1..3 (comma-separated)");

  SweepOptions sweep;
  auto* sw = app.add_subcommand("msr-sweep", "Invariant-vector angles along a star sweep");
  add_output_options(sw, sweep.output, true);
  sw->add_option("--theta1", sweep.theta1, "Fixed star colatitude")->capture_default_str();
  sw->add_option("--phi1", sweep.phi1, "Fixed star azimuth")->capture_default_str();
  sw->add_option("--phi2", sweep.phi2, "Swept star azimuth")->capture_default_str();
  sw->add_option("--theta2-min", sweep.theta2_min, "Sweep start")->capture_default_str();
  sw->add_option("--theta2-max", sweep.theta2_max, "Sweep end")->capture_default_str();
  sw->add_option("--samples", sweep.samples, "Number of sweep points")->capture_default_str();

  ConvertOptions conv;
  auto* cv = app.add_subcommand("convert", "Convert between state, stars and density parameters");
  add_output_options(cv, conv.output, false);
  cv->add_option("--state", conv.state, "re0,im0,re1,im1,re2,im2");
  cv->add_option("--stars", conv.stars, "theta1,phi1,theta2,phi2 (radians)");
  cv->add_option("--params", conv.params, "omega1,omega2,omega3,a1,a2,a3,q1,q2,q3");
  cv->add_option("--params-json", conv.params_json, "JSON file with omega1..q3 fields");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kBadInput;
  }

  try {
    if (*ev) cmd_evolve(evolve, out);
    else if (*au) cmd_audit(audit, out);
    else if (*sw) cmd_msr_sweep(sweep, out);
    else if (*cv) cmd_convert(conv, out, err);
    return kSuccess;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace qutrit::cli
