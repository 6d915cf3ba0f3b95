#ifndef SURVEIL_SCENARIO_HPP
#define SURVEIL_SCENARIO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "surveil/approach.hpp"
#include "surveil/simulator.hpp"

namespace surveil {

/// One engagement setup as read from a config file: flat `key = value`
/// lines, one key per line, `#` starts a comment. Required keys: alpha,
/// radius, x_O, y_O, y_T. Optional: dt, phase3_pick (lo|mid|hi), horizon.
struct ScenarioConfig {
  double alpha = 0.0;
  double radius = 0.0;
  double x_o = 0.0;
  double y_o = 0.0;
  double y_t = 0.0;
  double dt = 0.01;
  IntervalPick phase3_pick = IntervalPick::mid;
  std::optional<double> horizon;

  EngagementParams params() const { return {alpha, radius}; }
  WorldState state() const { return {x_o, y_o, y_t}; }
};

/// Throws std::runtime_error with a line-numbered message on malformed
/// input, unknown keys, or missing required keys.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);

/// Writes every key with round-trip precision; parsing the output yields an
/// identical config.
void write_config(std::ostream& out, const ScenarioConfig& cfg);

/// Built-in reference scenarios A, B, C.
ScenarioConfig builtin_scenario(char id);

const char* pick_name(IntervalPick pick);
IntervalPick parse_pick(const std::string& name);

/// Columns: t,x_O,y_O,y_T,rho,phase with rho the observer-target distance
/// and phase 1 before contact, 2 from contact on. Six significant digits;
/// the exact event rows are part of the sample list.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Human-readable plan summary (headings in degrees, 4 decimals).
void print_plan(std::ostream& out, const EngagementParams& params,
                const StrategyPlan& plan);

/// Reference table for a built-in scenario: initial, contact and escape
/// states from an exact simulation of the planned headings. Scenario C
/// prints both extreme approach headings.
void render_table(std::ostream& out, char id);

}  // namespace surveil

#endif
