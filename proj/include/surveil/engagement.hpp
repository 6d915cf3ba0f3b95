#ifndef SURVEIL_ENGAGEMENT_HPP
#define SURVEIL_ENGAGEMENT_HPP

#include <vector>

#include "surveil/geometry.hpp"

namespace surveil {

/// Scenario parameters: observer/target speed ratio and observation radius.
/// The target moves at unit speed, so alpha is also the observer's speed.
struct EngagementParams {
  double alpha;   // speed ratio v_O/v_T, 0 < alpha < 1
  double radius;  // observation disk radius R, > 0

  EngagementParams(double alpha, double radius);
};

/// Absolute state in the target-aligned frame: the target travels up the
/// y-axis at unit speed through (0, y_T); the observer sits at (x_O, y_O).
struct WorldState {
  double x_o;
  double y_o;
  double y_t;

  WorldState(double x_o, double y_o, double y_t);
};

/// Target-at-origin view of a WorldState. The dynamics are invariant to
/// translation along y and reflection across x = 0, so classification and
/// planning run with x >= 0 and the target at the origin; `mirrored`
/// records whether headings must be reflected back on output.
struct RelativeState {
  double x;  // |x_O|
  double y;  // y_O - y_T
  bool mirrored;
};

enum class RegionLabel {
  NoObservation,       // B1: the target can never be brought in range
  LimitedObservation,  // B2: some observation, less than the maximum
  MaximumObservation,  // B3: the full 2R/(1-alpha) is achievable
};

const char* region_short_name(RegionLabel r);  // "B1" / "B2" / "B3"
const char* region_long_name(RegionLabel r);

/// Intersection of the decision line y = m_DL*x with the observation disk,
/// computed in the relative frame. The decision line is the reachability
/// boundary: a point can arrive on the target's track no later than the
/// target iff it lies on or above the line, whose slope is tan(acos(alpha)).
struct DiskLineIntersection {
  double slope_dl;      // sqrt(1 - alpha^2)/alpha
  double sigma;         // x^2 + y^2 - R^2
  double discriminant;  // (x + m*y)^2 - sigma/alpha^2; sign gives root count
  std::vector<Vec2> points;  // 0..2 points, ascending x; front() is I
};

/// Reduce a world state to the mirror-normalized relative frame.
/// Throws std::invalid_argument on non-finite input.
RelativeState to_relative(const WorldState& state);

/// Slope of the decision line, sqrt(1 - alpha^2)/alpha = tan(acos(alpha)).
double decision_line_slope(const EngagementParams& params);

/// Solve (1 + m^2)x^2 - 2(x + m*y)x + sigma = 0 for the decision line /
/// disk crossings. Complex roots are reported as discriminant < 0 with no
/// points; a tangency yields exactly one point.
DiskLineIntersection intersect_disk_dl(const EngagementParams& params,
                                       const RelativeState& rel);

/// Assign the state to B1/B2/B3 from the position of W = (x, y - R), the
/// bottom of the disk, against the decision line:
///   - W on or above the line -> MaximumObservation
///   - else two crossings with the left one ahead of the observer -> Limited
///   - else -> NoObservation (a tangency counts as no observation)
/// States with |W - line| within 1e-9*max(1, R) are treated as on the line.
RegionLabel classify(const EngagementParams& params, const RelativeState& rel);

}  // namespace surveil

#endif
