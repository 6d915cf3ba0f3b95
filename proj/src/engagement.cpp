#include "surveil/engagement.hpp"

#include <cmath>
#include <stdexcept>

namespace surveil {

EngagementParams::EngagementParams(double alpha, double radius)
    : alpha(alpha), radius(radius) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0)
    throw std::invalid_argument("speed ratio alpha must lie in (0, 1)");
  if (!std::isfinite(radius) || radius <= 0.0)
    throw std::invalid_argument("observation radius must be positive");
}

WorldState::WorldState(double x_o, double y_o, double y_t)
    : x_o(x_o), y_o(y_o), y_t(y_t) {
  if (!std::isfinite(x_o) || !std::isfinite(y_o) || !std::isfinite(y_t))
    throw std::invalid_argument("world state must be finite");
}

const char* region_short_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::NoObservation: return "B1";
    case RegionLabel::LimitedObservation: return "B2";
    case RegionLabel::MaximumObservation: return "B3";
  }
  return "?";
}

const char* region_long_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::NoObservation: return "NoObservation";
    case RegionLabel::LimitedObservation: return "LimitedObservation";
    case RegionLabel::MaximumObservation: return "MaximumObservation";
  }
  return "?";
}

RelativeState to_relative(const WorldState& state) {
  return RelativeState{std::fabs(state.x_o), state.y_o - state.y_t,
                       state.x_o < 0.0};
}

double decision_line_slope(const EngagementParams& params) {
  return std::sqrt(1.0 - params.alpha * params.alpha) / params.alpha;
}

DiskLineIntersection intersect_disk_dl(const EngagementParams& params,
                                       const RelativeState& rel) {
  const double a2 = params.alpha * params.alpha;
  const double m = decision_line_slope(params);

  DiskLineIntersection out;
  out.slope_dl = m;
  out.sigma = rel.x * rel.x + rel.y * rel.y - params.radius * params.radius;

  // In x^2/alpha^2 - 2*b*x + sigma = 0 form (1 + m^2 = 1/alpha^2).
  const double b = rel.x + m * rel.y;
  out.discriminant = b * b - out.sigma / a2;
  if (out.discriminant < 0.0) return out;

  if (out.discriminant == 0.0) {
    const double x = a2 * b;
    out.points.push_back({x, m * x});
    return out;
  }

  const double root = std::sqrt(out.discriminant);
  double x_far = a2 * (b + std::copysign(root, b));
  double x_near = (x_far != 0.0) ? out.sigma * a2 / x_far : a2 * (b - std::copysign(root, b));
  if (x_near > x_far) std::swap(x_near, x_far);
  out.points.push_back({x_near, m * x_near});
  out.points.push_back({x_far, m * x_far});
  return out;
}

RegionLabel classify(const EngagementParams& params, const RelativeState& rel) {
  const double m = decision_line_slope(params);
  const double wx = rel.x;
  const double wy = rel.y - params.radius;

  const double defect = wy - m * wx;
  const double tol = 1e-9 * std::max(1.0, params.radius);
  if (defect >= -tol) return RegionLabel::MaximumObservation;

  const DiskLineIntersection inter = intersect_disk_dl(params, rel);
  if (inter.points.size() == 2 && inter.points.front().x < rel.x)
    return RegionLabel::LimitedObservation;
  return RegionLabel::NoObservation;
}

}  // namespace surveil
