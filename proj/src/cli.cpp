#include "surveil/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "surveil/oracle.hpp"
#include "surveil/scenario.hpp"

namespace surveil {

namespace {

std::optional<double> env_horizon() {
  if (const char* s = std::getenv("PH_HORIZON")) {
    double h = 0.0;
    try {
      h = std::stod(s);
    } catch (const std::exception&) {
      throw std::runtime_error("PH_HORIZON is not a number");
    }
    if (!std::isfinite(h) || h <= 0.0)
      throw std::runtime_error("PH_HORIZON must be a positive time");
    return h;
  }
  return std::nullopt;
}

nlohmann::json plan_to_json(const ScenarioConfig& cfg, const StrategyPlan& plan) {
  nlohmann::json j;
  j["alpha"] = cfg.alpha;
  j["radius"] = cfg.radius;
  j["state"] = {{"x_O", cfg.x_o}, {"y_O", cfg.y_o}, {"y_T", cfg.y_t}};
  j["region"] = region_short_name(plan.region);
  j["already_inside"] = plan.already_inside;

  // Angles in radians throughout; the human-readable output uses degrees.
  nlohmann::json p1;
  if (plan.has_single()) {
    p1["kind"] = "single";
    p1["heading"] = plan.single();
  } else if (plan.has_interval()) {
    p1["kind"] = "interval";
    p1["lo"] = plan.interval().lo;
    p1["hi"] = plan.interval().hi;
  } else {
    p1["kind"] = "undefined";
  }
  if (plan.chosen_phase1) p1["chosen"] = *plan.chosen_phase1;
  j["phase1"] = p1;

  if (plan.phase2) {
    j["phase2"] = {{"heading", plan.phase2->heading},
                   {"lambda", plan.phase2->lambda.lambda}};
  } else {
    j["phase2"] = nullptr;
  }
  j["t_apr"] = plan.t_apr ? nlohmann::json(*plan.t_apr) : nlohmann::json();
  j["t_obs"] = plan.t_obs;
  return j;
}

int do_verify(const ScenarioConfig& cfg, std::size_t n1, std::size_t n2,
              std::ostream& out) {
  const SweepReport rep = sweep(cfg.params(), cfg.state(), n1, n2);
  out << "sweep grids: " << rep.grid_n1 << " x " << rep.grid_n2 << "\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "best swept:  t_obs=%.6f TU  (psi1=%.4f deg, psi2=%.4f deg)\n",
                rep.best_t_obs, rad2deg(rep.best_psi1), rad2deg(rep.best_psi2));
  out << buf;
  std::snprintf(buf, sizeof(buf), "closed form: t_obs=%.6f TU\n",
                rep.closed_form_t_obs);
  out << buf;
  std::snprintf(buf, sizeof(buf), "gap: %.6g TU\n", rep.gap);
  out << buf;

  const bool sound = rep.best_t_obs <= rep.closed_form_t_obs + 1e-6;
  const bool resolved = rep.closed_form_t_obs > 0.0
                            ? rep.gap <= 0.005 * rep.closed_form_t_obs
                            : rep.best_t_obs == 0.0;
  out << (sound ? "PASS" : "FAIL")
      << ": swept best does not exceed the closed form\n";
  out << (resolved ? "PASS" : "FAIL")
      << ": closed form is reached within sweep resolution\n";
  return (sound && resolved) ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "two-phase observation planner for a faster straight-line target\n"
      "Angles are degrees in human-readable output and radians in machine\n"
      "output files (plan JSON). Set PH_HORIZON to cap no-contact runs."};
  app.require_subcommand(1);

  std::string config_path;
  std::string plan_out;
  std::string traj_out;
  std::string table_id;
  std::size_t n1 = 3600;
  std::size_t n2 = 720;

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "report the region of the initial state");
  cmd_classify->add_option("config", config_path, "scenario config file")
      ->required();

  CLI::App* cmd_solve =
      app.add_subcommand("solve", "print the optimal two-phase plan");
  cmd_solve->add_option("config", config_path, "scenario config file")
      ->required();
  cmd_solve->add_option("--plan-out", plan_out,
                        "write the plan as JSON (angles in radians)");

  CLI::App* cmd_simulate = app.add_subcommand(
      "simulate", "solve, then fly the plan and export the trajectory");
  cmd_simulate->add_option("config", config_path, "scenario config file")
      ->required();
  cmd_simulate->add_option("--out", traj_out,
                           "trajectory CSV path (default: stdout)");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "brute-force sweep check of the closed-form plan");
  cmd_verify->add_option("config", config_path, "scenario config file")
      ->required();
  cmd_verify->add_option("--n1", n1, "approach heading grid size");
  cmd_verify->add_option("--n2", n2, "observation heading grid size");

  CLI::App* cmd_table = app.add_subcommand(
      "table", "print the reference results for a built-in scenario");
  cmd_table->add_option("scenario", table_id, "one of A, B, C")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (app.got_subcommand(cmd_table)) {
      if (table_id.size() != 1) throw std::runtime_error("expected A, B, or C");
      render_table(out, table_id[0]);
      return 0;
    }

    const ScenarioConfig cfg = load_config(config_path);
    const EngagementParams params = cfg.params();
    const WorldState state = cfg.state();

    if (app.got_subcommand(cmd_classify)) {
      const RegionLabel region = classify(params, to_relative(state));
      out << region_short_name(region) << " / " << region_long_name(region)
          << "\n";
      char buf[64];
      std::snprintf(buf, sizeof(buf), "decision line slope: %.4f\n",
                    decision_line_slope(params));
      out << buf;
      return 0;
    }

    if (app.got_subcommand(cmd_solve)) {
      const StrategyPlan plan = solve(params, state, cfg.phase3_pick);
      print_plan(out, params, plan);
      if (!plan_out.empty()) {
        std::ofstream f(plan_out);
        if (!f) throw std::runtime_error("cannot write plan file: " + plan_out);
        f << plan_to_json(cfg, plan).dump(2) << "\n";
        out << "plan written to " << plan_out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_simulate)) {
      const StrategyPlan plan = solve(params, state, cfg.phase3_pick);
      if (plan.region == RegionLabel::NoObservation && !plan.already_inside) {
        print_plan(out, params, plan);
        out << "nothing to simulate\n";
        return 0;
      }
      SimulateOptions opts;
      opts.dt = cfg.dt;
      opts.horizon = cfg.horizon;
      if (const auto h = env_horizon()) opts.horizon = h;
      const Trajectory traj = simulate(params, state, *plan.chosen_phase1,
                                       plan.phase2->heading, opts);
      if (traj_out.empty()) {
        write_trajectory_csv(out, traj);
      } else {
        std::ofstream f(traj_out);
        if (!f)
          throw std::runtime_error("cannot write trajectory file: " + traj_out);
        write_trajectory_csv(f, traj);
        print_plan(out, params, plan);
        char buf[128];
        std::snprintf(buf, sizeof(buf), "contact t2=%.4f escape tf=%.4f\n",
                      traj.t2.value_or(-1.0), traj.tf.value_or(-1.0));
        out << buf;
        out << traj.samples.size() << " samples written to " << traj_out
            << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) return do_verify(cfg, n1, n2, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace surveil
