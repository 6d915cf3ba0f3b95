#ifndef SURVEIL_APPROACH_HPP
#define SURVEIL_APPROACH_HPP

#include <optional>
#include <variant>

#include "surveil/engagement.hpp"
#include "surveil/observation.hpp"

namespace surveil {

/// Closed range of equally good approach headings (radians). Degenerate
/// (lo == hi) when the bottom of the disk sits exactly on the decision
/// line. For mirrored inputs the reflected range may start below zero;
/// headings are equivalent mod 2*pi.
struct HeadingInterval {
  double lo;
  double hi;

  bool contains(double psi, double tol = 1e-9) const {
    return psi >= lo - tol && psi <= hi + tol;
  }
  double midpoint() const { return 0.5 * (lo + hi); }
};

/// Which representative of a heading interval to fly.
enum class IntervalPick { lo, mid, hi };

/// Full two-phase plan for one initial state.
struct StrategyPlan {
  RegionLabel region;

  // Approach heading: absent for B1, a single value for B2, a range for B3.
  std::variant<std::monostate, double, HeadingInterval> phase1;
  std::optional<Phase2Solution> phase2;

  std::optional<double> t_apr;  // nullopt: the approach never ends (B1)
  double t_obs = 0.0;
  std::optional<double> chosen_phase1;  // representative used for simulation

  // Target already within range at t = 0. The plan skips the approach and
  // reports the honest in-range time from the interior point; the region
  // label keeps its geometric meaning but its time semantics do not apply.
  bool already_inside = false;

  bool has_interval() const {
    return std::holds_alternative<HeadingInterval>(phase1);
  }
  const HeadingInterval& interval() const {
    return std::get<HeadingInterval>(phase1);
  }
  bool has_single() const { return std::holds_alternative<double>(phase1); }
  double single() const { return std::get<double>(phase1); }
};

/// Unique optimal approach heading for a limited-observation state:
/// acos(alpha) + pi/2. Carries the lower decision-line crossing of the disk
/// onto the target's track exactly when the target arrives.
double phase1_heading_case2(const EngagementParams& params);

/// Approach and observation times for a limited-observation state, from the
/// leftmost decision-line crossing I = inter.points.front():
///   t_apr = |I| / sqrt(1 - alpha^2)
///   t_obs = 2R(alpha + (y - y_I)/R) / (1 - alpha^2)
/// Throws std::domain_error unless the state classifies as B2.
struct ApproachTimes {
  double t_apr;
  double t_obs;
};
ApproachTimes phase1_time_case2(const EngagementParams& params,
                                const RelativeState& rel,
                                const DiskLineIntersection& inter);

/// Range of optimal approach headings for a maximum-observation state:
///   [pi/2 - xi + asin(sin xi / alpha), 3pi/2 - xi - asin(sin xi / alpha)]
/// with xi = asin(x / hypot(x, y - R)). Throws std::domain_error unless the
/// state classifies as B3 with the target outside the disk.
HeadingInterval phase1_interval_case3(const EngagementParams& params,
                                      const RelativeState& rel);

/// Approach time (y - R)/(1 - alpha sin psi1) for a maximum-observation
/// state. Exact at the interval endpoints; for interior headings it is the
/// idealized interception time, and the simulated contact comes later (the
/// observer reaches the track early and rides it while the target closes).
double phase1_time_case3(const EngagementParams& params,
                         const RelativeState& rel, double psi1);

/// Classify and dispatch to the per-region closed forms. Headings are
/// reflected back for mirrored inputs. For B3 the chosen representative
/// defaults to the interval midpoint.
StrategyPlan solve(const EngagementParams& params, const WorldState& state,
                   IntervalPick pick = IntervalPick::mid);

}  // namespace surveil

#endif
