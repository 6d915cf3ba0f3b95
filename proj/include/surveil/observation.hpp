#ifndef SURVEIL_OBSERVATION_HPP
#define SURVEIL_OBSERVATION_HPP

#include "surveil/engagement.hpp"

namespace surveil {

/// Bearing from target to observer at the instant of contact, measured from
/// the target's velocity direction: sin(lambda) = x/R, cos(lambda) = y/R
/// with (x, y) the observer's position relative to the target.
struct ContactBearing {
  double lambda;  // radians, in [-pi, pi]
};

/// Two-argument form; well defined for contacts ahead of the observer
/// (cos lambda < 0), where a plain arctangent would be ambiguous.
ContactBearing bearing_from_offset(double dx, double dy);

struct Phase2Solution {
  double heading;  // psi_2, radians in [0, pi]
  double t_obs;    // time the target stays in range
  ContactBearing lambda;
};

/// Observation-phase heading that maximizes time in range from a contact at
/// bearing lambda:
///   psi_2 = acos((alpha^2 - 1) sin(lambda) / (alpha^2 + 2 alpha cos(lambda) + 1))
/// Throws std::domain_error when the contact lies in the zero-observation
/// cone (alpha + cos lambda <= 0), where no positive time is achievable.
double phase2_heading(const EngagementParams& params, ContactBearing lambda);

/// Time in range from a contact at bearing lambda under the optimal heading:
/// 2R(alpha + cos lambda)/(1 - alpha^2), clamped to zero outside the cone.
double observation_time(const EngagementParams& params, ContactBearing lambda);

/// Best possible time in range over all contacts: 2R/(1 - alpha), attained
/// at lambda = 0.
double max_observation_time(const EngagementParams& params);

/// Half-angle of the cone of contact bearings giving zero time in range:
/// observation_time is 0 for |lambda| >= acos(-alpha).
double zero_observation_cone(const EngagementParams& params);

namespace detail {
// Same formula without the cone guard; total over [-pi, pi]. Used when the
// target starts inside the disk, where escape is inevitable but a heading
// is still needed.
double phase2_heading_unchecked(const EngagementParams& params, double lambda);
}  // namespace detail

}  // namespace surveil

#endif
