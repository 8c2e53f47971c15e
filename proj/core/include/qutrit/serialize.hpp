#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qutrit/cascade.hpp"
#include "qutrit/majorana.hpp"

namespace qutrit {

/// Decimal with 17 significant digits.
std::string format_number(double x);

/// Keys omega1..3, a1..3, q1..3.
nlohmann::json to_json(const SpinParams& p);
/// Throws InvalidArgument on missing or non-numeric fields.
SpinParams spin_params_from_json(const nlohmann::json& j);

/// Keys w, u, v, X, psi1..3, chi1..3. Angles in degrees when `degrees`.
nlohmann::json to_json(const InvariantVectors& iv, bool degrees = false);

nlohmann::json to_json(const QutritState& psi);
nlohmann::json to_json(const StarPair& stars, bool degrees = false);

/// Exact header of the trajectory CSV, without trailing newline.
const std::string& trajectory_csv_header();
std::vector<std::string> trajectory_columns();

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, bool degrees = false);
nlohmann::json trajectory_to_json(const Trajectory& traj, bool degrees = false);

const std::string& sweep_csv_header();
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool degrees = false);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, bool degrees = false);

nlohmann::json to_json(const AuditReport& rep);

}  // namespace qutrit
