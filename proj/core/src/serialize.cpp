#include "qutrit/serialize.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

namespace qutrit {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double angle_out(double rad, bool degrees) { return degrees ? rad * kRadToDeg : rad; }

nlohmann::json real3(const Real3& v) { return nlohmann::json::array({v[0], v[1], v[2]}); }

std::vector<double> trajectory_row(const TrajectorySample& s, bool degrees) {
  std::vector<double> row{s.t, s.phase_angle};
  for (std::size_t k = 0; k < 3; ++k) {
    row.push_back(s.state[k].real());
    row.push_back(s.state[k].imag());
  }
  for (double x : s.params.omega()) row.push_back(x);
  for (double x : s.params.q()) row.push_back(x);
  for (double x : s.params.a()) row.push_back(x);
  for (const Real3* v : {&s.vectors.w, &s.vectors.u, &s.vectors.v})
    for (double x : *v) row.push_back(x);
  for (const auto& a : s.angles) row.push_back(angle_out(a.psi, degrees));
  for (const auto& a : s.angles) row.push_back(angle_out(a.chi, degrees));
  return row;
}

void write_csv_line(std::ostream& os, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << format_number(row[i]);
  }
  os << '\n';
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  return fmt::format("{:.17g}", x);
}

nlohmann::json to_json(const SpinParams& p) {
  return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"omega3", p.omega3},
          {"a1", p.a1},         {"a2", p.a2},         {"a3", p.a3},
          {"q1", p.q1},         {"q2", p.q2},         {"q3", p.q3}};
}

SpinParams spin_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("spin params: expected a JSON object");
  auto get = [&j](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number())
      throw InvalidArgument(std::string("spin params: missing numeric field '") + key + "'");
    return it->get<double>();
  };
  return {get("omega1"), get("omega2"), get("omega3"), get("a1"), get("a2"),
          get("a3"),     get("q1"),     get("q2"),     get("q3")};
}

nlohmann::json to_json(const InvariantVectors& iv, bool degrees) {
  nlohmann::json j{{"w", real3(iv.w)}, {"u", real3(iv.u)}, {"v", real3(iv.v)}, {"X", iv.x}};
  const std::array<const Real3*, 3> vecs{&iv.w, &iv.u, &iv.v};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string idx = std::to_string(k + 1);
    if (std::isnan((*vecs[k])[0])) {
      j["psi" + idx] = nullptr;
      j["chi" + idx] = nullptr;
      continue;
    }
    const SphericalAngles a = vector_angles(*vecs[k]);
    j["psi" + idx] = angle_out(a.psi, degrees);
    j["chi" + idx] = angle_out(a.chi, degrees);
  }
  return j;
}

nlohmann::json to_json(const QutritState& psi) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 0; k < 3; ++k) arr.push_back({psi[k].real(), psi[k].imag()});
  return arr;
}

nlohmann::json to_json(const StarPair& stars, bool degrees) {
  auto one = [degrees](const Star& s) {
    const auto xyz = s.cartesian();
    return nlohmann::json{{"theta", angle_out(s.theta, degrees)},
                          {"phi", angle_out(s.phi, degrees)},
                          {"cartesian", {xyz[0], xyz[1], xyz[2]}},
                          {"at_infinity", s.at_infinity()}};
  };
  return nlohmann::json::array({one(stars.first), one(stars.second)});
}

std::vector<std::string> trajectory_columns() {
  return {"t",      "omega_t", "re_psi0", "im_psi0", "re_psi1", "im_psi1", "re_psi2",
          "im_psi2", "omega1", "omega2",  "omega3",  "q1",      "q2",      "q3",
          "a1",     "a2",      "a3",      "w1",      "w2",      "w3",      "u1",
          "u2",     "u3",      "v1",      "v2",      "v3",      "psi1",    "psi2",
          "psi3",   "chi1",    "chi2",    "chi3"};
}

const std::string& trajectory_csv_header() {
  static const std::string header = [] {
    std::string h;
    for (const auto& c : trajectory_columns()) {
      if (!h.empty()) h += ',';
      h += c;
    }
    return h;
  }();
  return header;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, bool degrees) {
  os << trajectory_csv_header() << '\n';
  for (const auto& s : traj.samples) write_csv_line(os, trajectory_row(s, degrees));
}

nlohmann::json trajectory_to_json(const Trajectory& traj, bool degrees) {
  const auto cols = trajectory_columns();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : traj.samples) {
    const auto row = trajectory_row(s, degrees);
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return {{"source", to_string(traj.source)},
          {"angle_unit", degrees ? "degrees" : "radians"},
          {"samples", std::move(rows)}};
}

const std::string& sweep_csv_header() {
  static const std::string header = "theta2,psi1,chi1,psi2,chi2,psi3,chi3";
  return header;
}

namespace {

std::vector<double> sweep_row(const SweepRow& r, bool degrees) {
  std::vector<double> row{angle_out(r.theta2, degrees)};
  for (const auto& a : r.angles) {
    row.push_back(angle_out(a.psi, degrees));
    row.push_back(angle_out(a.chi, degrees));
  }
  return row;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool degrees) {
  os << sweep_csv_header() << '\n';
  for (const auto& r : rows) write_csv_line(os, sweep_row(r, degrees));
}

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, bool degrees) {
  static const std::array<const char*, 7> kCols{"theta2", "psi1", "chi1", "psi2",
                                                "chi2",   "psi3", "chi3"};
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    const auto row = sweep_row(r, degrees);
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < kCols.size(); ++i) obj[kCols[i]] = row[i];
    out.push_back(std::move(obj));
  }
  return {{"angle_unit", degrees ? "degrees" : "radians"}, {"rows", std::move(out)}};
}

nlohmann::json to_json(const AuditReport& rep) {
  static const std::array<const char*, 9> kNames{
      "omega1", "omega2", "omega3", "a1", "a2", "a3", "q1", "q2", "q3"};
  nlohmann::json max_diff = nlohmann::json::object();
  nlohmann::json agrees = nlohmann::json::object();
  for (std::size_t k = 0; k < 9; ++k) {
    max_diff[kNames[k]] = rep.max_abs_diff[k];
    agrees[kNames[k]] = rep.agrees[k];
  }
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : rep.samples) {
    nlohmann::json diff = nlohmann::json::object();
    for (std::size_t k = 0; k < 9; ++k) diff[kNames[k]] = s.abs_diff[k];
    samples.push_back({{"t", s.t},
                       {"closed_form", to_json(s.closed_form)},
                       {"pipeline", to_json(s.pipeline)},
                       {"abs_diff", std::move(diff)}});
  }
  return {{"tolerance", rep.tolerance},
          {"all_agree", rep.all_agree()},
          {"max_abs_diff", std::move(max_diff)},
          {"agrees", std::move(agrees)},
          {"notes", rep.notes},
          {"samples", std::move(samples)}};
}

}  // namespace qutrit
