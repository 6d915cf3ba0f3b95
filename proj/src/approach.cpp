#include "surveil/approach.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "surveil/simulator.hpp"

namespace surveil {

namespace {

void require_region(const EngagementParams& params, const RelativeState& rel,
                    RegionLabel expected, const char* what) {
  if (classify(params, rel) != expected) throw std::domain_error(what);
}

double mirror_heading(double psi) {
  double out = kPi - psi;
  if (out < 0.0) out += 2.0 * kPi;
  return out;
}

}  // namespace

double phase1_heading_case2(const EngagementParams& params) {
  return std::acos(params.alpha) + kPi / 2.0;
}

ApproachTimes phase1_time_case2(const EngagementParams& params,
                                const RelativeState& rel,
                                const DiskLineIntersection& inter) {
  require_region(params, rel, RegionLabel::LimitedObservation,
                 "phase1_time_case2 requires a limited-observation state");
  if (inter.points.size() != 2)
    throw std::domain_error("expected two decision-line crossings");

  const double a = params.alpha;
  const Vec2 i = inter.points.front();
  const double t_apr = std::hypot(i.x, i.y) / std::sqrt(1.0 - a * a);
  const double t_obs = 2.0 * params.radius *
                       (a + (rel.y - i.y) / params.radius) / (1.0 - a * a);
  return {t_apr, std::max(0.0, t_obs)};
}

HeadingInterval phase1_interval_case3(const EngagementParams& params,
                                      const RelativeState& rel) {
  require_region(params, rel, RegionLabel::MaximumObservation,
                 "phase1_interval_case3 requires a maximum-observation state");
  if (rel.x * rel.x + rel.y * rel.y <= params.radius * params.radius)
    throw std::domain_error(
        "phase1_interval_case3 requires the target outside the disk");

  const double wy = rel.y - params.radius;
  const double xi = std::asin(rel.x / std::hypot(rel.x, wy));
  // On or above the decision line, sin(xi) <= alpha. States inside the
  // on-line tolerance band of classify() can overshoot 1 by ~1e-9 and
  // collapse to the degenerate interval; anything beyond that is a logic
  // error.
  const double s = std::sin(xi) / params.alpha;
  if (s > 1.0 + 1e-5)
    throw std::domain_error("interception angle outside the reachable range");
  const double gamma = std::asin(std::min(1.0, s));
  return {kPi / 2.0 - xi + gamma, 3.0 * kPi / 2.0 - xi - gamma};
}

double phase1_time_case3(const EngagementParams& params,
                         const RelativeState& rel, double psi1) {
  require_region(params, rel, RegionLabel::MaximumObservation,
                 "phase1_time_case3 requires a maximum-observation state");
  if (!phase1_interval_case3(params, rel).contains(psi1))
    throw std::domain_error("heading outside the optimal approach range");
  return (rel.y - params.radius) / (1.0 - params.alpha * std::sin(psi1));
}

StrategyPlan solve(const EngagementParams& params, const WorldState& state,
                   IntervalPick pick) {
  const RelativeState rel = to_relative(state);

  StrategyPlan plan;
  plan.region = classify(params, rel);

  const double r2 = params.radius * params.radius;
  if (rel.x * rel.x + rel.y * rel.y <= r2) {
    // Target already within range: no approach phase. Extension beyond the
    // closed forms, which assume contact starts on the boundary.
    plan.already_inside = true;
    plan.t_apr = 0.0;
    const double lambda =
        (rel.x == 0.0 && rel.y == 0.0) ? 0.0 : std::atan2(rel.x, rel.y);
    const double psi2 = detail::phase2_heading_unchecked(params, lambda);
    const double dur = escape_time(params, rel, psi2);
    plan.phase1 = psi2;
    plan.phase2 = Phase2Solution{psi2, dur, ContactBearing{lambda}};
    plan.t_obs = dur;
    plan.chosen_phase1 = psi2;
  } else {
    switch (plan.region) {
      case RegionLabel::NoObservation:
        plan.t_obs = 0.0;
        break;
      case RegionLabel::LimitedObservation: {
        const DiskLineIntersection inter = intersect_disk_dl(params, rel);
        const Vec2 i = inter.points.front();
        const ApproachTimes times = phase1_time_case2(params, rel, inter);
        const double lambda = std::atan2(rel.x - i.x, rel.y - i.y);
        plan.phase1 = phase1_heading_case2(params);
        plan.phase2 = Phase2Solution{
            detail::phase2_heading_unchecked(params, lambda), times.t_obs,
            ContactBearing{lambda}};
        plan.t_apr = times.t_apr;
        plan.t_obs = times.t_obs;
        plan.chosen_phase1 = plan.single();
        break;
      }
      case RegionLabel::MaximumObservation: {
        const HeadingInterval range = phase1_interval_case3(params, rel);
        double rep = range.midpoint();
        if (pick == IntervalPick::lo) rep = range.lo;
        if (pick == IntervalPick::hi) rep = range.hi;
        plan.phase1 = range;
        plan.phase2 =
            Phase2Solution{kPi / 2.0, max_observation_time(params),
                           ContactBearing{0.0}};
        plan.t_apr = phase1_time_case3(params, rel, rep);
        plan.t_obs = max_observation_time(params);
        plan.chosen_phase1 = rep;
        break;
      }
    }
  }

  if (rel.mirrored) {
    if (plan.has_single()) plan.phase1 = mirror_heading(plan.single());
    if (plan.has_interval()) {
      const HeadingInterval r = plan.interval();
      plan.phase1 = HeadingInterval{kPi - r.hi, kPi - r.lo};
    }
    if (plan.chosen_phase1) plan.chosen_phase1 = kPi - *plan.chosen_phase1;
    if (plan.phase2) {
      plan.phase2->heading = kPi - plan.phase2->heading;
      plan.phase2->lambda.lambda = -plan.phase2->lambda.lambda;
    }
  }
  return plan;
}

}  // namespace surveil
