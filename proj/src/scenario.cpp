#include "surveil/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace surveil {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing junk");
    if (!std::isfinite(v)) throw std::invalid_argument("not finite");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line) +
                             ": not a finite number: '" + value + "'");
  }
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig cfg;
  std::map<std::string, bool> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (seen[key])
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": duplicate key '" + key + "'");
    seen[key] = true;

    if (key == "alpha") cfg.alpha = parse_number(value, lineno);
    else if (key == "radius") cfg.radius = parse_number(value, lineno);
    else if (key == "x_O") cfg.x_o = parse_number(value, lineno);
    else if (key == "y_O") cfg.y_o = parse_number(value, lineno);
    else if (key == "y_T") cfg.y_t = parse_number(value, lineno);
    else if (key == "dt") cfg.dt = parse_number(value, lineno);
    else if (key == "horizon") cfg.horizon = parse_number(value, lineno);
    else if (key == "phase3_pick") cfg.phase3_pick = parse_pick(value);
    else
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
  }
  for (const char* req : {"alpha", "radius", "x_O", "y_O", "y_T"})
    if (!seen[req])
      throw std::runtime_error(std::string("config: missing key '") + req +
                               "'");
  if (!(cfg.dt > 0.0))
    throw std::runtime_error("config: dt must be positive");
  if (cfg.horizon && !(*cfg.horizon > 0.0))
    throw std::runtime_error("config: horizon must be positive");
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in);
}

void write_config(std::ostream& out, const ScenarioConfig& cfg) {
  out << "alpha = " << fmt("%.17g", cfg.alpha) << "\n"
      << "radius = " << fmt("%.17g", cfg.radius) << "\n"
      << "x_O = " << fmt("%.17g", cfg.x_o) << "\n"
      << "y_O = " << fmt("%.17g", cfg.y_o) << "\n"
      << "y_T = " << fmt("%.17g", cfg.y_t) << "\n"
      << "dt = " << fmt("%.17g", cfg.dt) << "\n"
      << "phase3_pick = " << pick_name(cfg.phase3_pick) << "\n";
  if (cfg.horizon) out << "horizon = " << fmt("%.17g", *cfg.horizon) << "\n";
}

ScenarioConfig builtin_scenario(char id) {
  ScenarioConfig cfg;
  switch (id) {
    case 'A': cfg.alpha = 0.6; cfg.x_o = 8.0; cfg.y_o = 4.0; break;
    case 'B': cfg.alpha = 0.8; cfg.x_o = 5.0; cfg.y_o = 2.0; break;
    case 'C': cfg.alpha = 0.7; cfg.x_o = 3.0; cfg.y_o = 6.0; break;
    default:
      throw std::runtime_error(std::string("unknown scenario '") + id +
                               "' (expected A, B, or C)");
  }
  cfg.radius = 2.0;
  cfg.y_t = 0.0;
  return cfg;
}

const char* pick_name(IntervalPick pick) {
  switch (pick) {
    case IntervalPick::lo: return "lo";
    case IntervalPick::mid: return "mid";
    case IntervalPick::hi: return "hi";
  }
  return "?";
}

IntervalPick parse_pick(const std::string& name) {
  if (name == "lo") return IntervalPick::lo;
  if (name == "mid") return IntervalPick::mid;
  if (name == "hi") return IntervalPick::hi;
  throw std::runtime_error("phase3_pick must be lo, mid, or hi (got '" + name +
                           "')");
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,x_O,y_O,y_T,rho,phase\n";
  for (const auto& s : traj.samples) {
    const double rho = std::hypot(s.state.x_o, s.state.y_o - s.state.y_t);
    const int phase = (traj.t2 && s.t >= *traj.t2) ? 2 : 1;
    out << fmt("%.6g", s.t) << ',' << fmt("%.6g", s.state.x_o) << ','
        << fmt("%.6g", s.state.y_o) << ',' << fmt("%.6g", s.state.y_t) << ','
        << fmt("%.6g", rho) << ',' << phase << "\n";
  }
}

void print_plan(std::ostream& out, const EngagementParams& params,
                const StrategyPlan& plan) {
  out << "region: " << region_short_name(plan.region) << " / "
      << region_long_name(plan.region) << "\n";
  if (plan.already_inside)
    out << "note: target already within range; no approach phase\n";

  if (plan.region == RegionLabel::NoObservation && !plan.already_inside) {
    out << "observation is not possible from this state\n";
    out << "observation time: 0.0000 TU\n";
    return;
  }

  if (plan.has_single()) {
    out << "phase-1 heading: " << fmt("%.4f", rad2deg(plan.single()))
        << " deg\n";
  } else if (plan.has_interval()) {
    out << "phase-1 heading range: [" << fmt("%.4f", rad2deg(plan.interval().lo))
        << ", " << fmt("%.4f", rad2deg(plan.interval().hi)) << "] deg\n";
    out << "phase-1 heading chosen: " << fmt("%.4f", rad2deg(*plan.chosen_phase1))
        << " deg\n";
  }
  if (plan.phase2) {
    out << "phase-2 heading: " << fmt("%.4f", rad2deg(plan.phase2->heading))
        << " deg\n";
    out << "contact bearing: " << fmt("%.4f", rad2deg(plan.phase2->lambda.lambda))
        << " deg\n";
  }
  if (plan.t_apr)
    out << "approach time: " << fmt("%.4f", *plan.t_apr) << " TU\n";
  out << "observation time: " << fmt("%.4f", plan.t_obs) << " TU\n";
  out << "max observation time: " << fmt("%.4f", max_observation_time(params))
      << " TU\n";
}

namespace {

void print_event_rows(std::ostream& out, const Trajectory& traj) {
  out << "      t [TU]   x_O [DU]   y_O [DU]   y_T [DU]\n";
  // Keep residuals far below the printed precision from showing as -0.0000.
  const auto snap = [](double v) { return std::fabs(v) < 1e-9 ? 0.0 : v; };
  const auto row = [&out, &snap](const char* tag, const Trajectory::Sample& s) {
    out << tag << fmt("%9.4f", snap(s.t)) << "  "
        << fmt("%9.4f", snap(s.state.x_o)) << "  "
        << fmt("%9.4f", snap(s.state.y_o)) << "  "
        << fmt("%9.4f", snap(s.state.y_t)) << "\n";
  };
  row("t1 ", traj.samples.front());
  for (const auto& s : traj.samples) {
    if (traj.t2 && s.t == *traj.t2) row("t2 ", s);
  }
  if (traj.tf) row("tf ", traj.samples.back());
}

}  // namespace

void render_table(std::ostream& out, char id) {
  const ScenarioConfig cfg = builtin_scenario(id);
  const EngagementParams params = cfg.params();
  const WorldState start = cfg.state();

  out << "scenario " << id << ": alpha=" << fmt("%.2f", cfg.alpha)
      << " R=" << fmt("%.2f", cfg.radius) << " start=("
      << fmt("%.4f", cfg.x_o) << ", " << fmt("%.4f", cfg.y_o) << ", "
      << fmt("%.4f", cfg.y_t) << ")\n";

  const StrategyPlan plan = solve(params, start);
  out << "region: " << region_short_name(plan.region) << " / "
      << region_long_name(plan.region) << "\n";

  if (plan.region == RegionLabel::NoObservation) {
    out << "observation is not possible from this state\n";
    return;
  }

  if (plan.has_single()) {
    out << "phase-1 heading: " << fmt("%.4f", rad2deg(plan.single()))
        << " deg   phase-2 heading: "
        << fmt("%.4f", rad2deg(plan.phase2->heading)) << " deg\n";
    const Trajectory traj = simulate(params, start, plan.single(),
                                     plan.phase2->heading, {cfg.dt, {}});
    print_event_rows(out, traj);
    return;
  }

  // Both extreme headings of the optimal range.
  out << "phase-1 heading range: [" << fmt("%.4f", rad2deg(plan.interval().lo))
      << ", " << fmt("%.4f", rad2deg(plan.interval().hi))
      << "] deg   phase-2 heading: "
      << fmt("%.4f", rad2deg(plan.phase2->heading)) << " deg\n";
  const struct { const char* name; double psi; } cases[] = {
      {"case A", plan.interval().hi},
      {"case B", plan.interval().lo},
  };
  for (const auto& c : cases) {
    out << c.name << " (phase-1 heading " << fmt("%.4f", rad2deg(c.psi))
        << " deg):\n";
    const Trajectory traj =
        simulate(params, start, c.psi, plan.phase2->heading, {cfg.dt, {}});
    print_event_rows(out, traj);
  }
}

}  // namespace surveil
