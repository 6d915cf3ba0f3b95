#ifndef SURVEIL_SIMULATOR_HPP
#define SURVEIL_SIMULATOR_HPP

#include <optional>
#include <vector>

#include "surveil/engagement.hpp"

namespace surveil {

/// Time-stamped states of one engagement run. Positions are exact: the
/// motion is piecewise linear and every sample is evaluated in closed form
/// from its segment anchor, so there is no integration drift.
struct Trajectory {
  struct Sample {
    double t;
    WorldState state;
  };

  std::vector<Sample> samples;       // strictly increasing in t
  std::optional<double> t2;          // first contact (distance == R)
  std::optional<double> tf;          // escape (distance == R again)
  std::optional<double> ride_start;  // track-riding kink, if any (see below)
  double psi1 = 0.0;                 // approach heading actually flown
  double psi2 = 0.0;                 // observation heading actually flown
};

/// First time the target comes within R under constant heading psi, from the
/// quadratic |p + v t| = R with p the observer-relative-to-target position
/// and v = (alpha cos psi, alpha sin psi - 1). Returns 0 if already within
/// R, nullopt if no non-negative real root exists.
std::optional<double> contact_time(const EngagementParams& params,
                                   const RelativeState& rel, double psi);

/// Time the target remains within R from an on- or inside-disk relative
/// state under constant heading psi2 (largest root of the same quadratic,
/// measured from now). A grazing contact gives zero.
double escape_time(const EngagementParams& params,
                   const RelativeState& rel_at_contact, double psi2);

struct SimulateOptions {
  double dt = 0.01;
  std::optional<double> horizon;  // cap for no-contact runs
};

/// Fly psi1 until contact, then psi2 until escape. Samples land on every
/// multiple of dt plus the exact event times.
///
/// One approach-phase refinement: if the observer reaches the target's
/// track (x = 0) before contact while the bottom of its disk is still ahead
/// of the target, it turns up the track (heading pi/2) and lets the faster
/// target close the gap, producing contact exactly at bearing zero. A
/// single constant heading cannot hold a lead over the track, and without
/// this rule only the two extreme approach headings of a maximum-
/// observation state would realize the full observation time. The rule
/// never manufactures contact elsewhere: below the decision line the
/// target reaches any track point first, so the gap condition fails.
Trajectory simulate(const EngagementParams& params, const WorldState& state,
                    double psi1, double psi2, const SimulateOptions& opts = {});

/// Default no-contact cap: 10 * 2R/(1-alpha) + initial separation.
double default_horizon(const EngagementParams& params, const WorldState& state);

}  // namespace surveil

#endif
