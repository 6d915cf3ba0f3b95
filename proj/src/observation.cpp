#include "surveil/observation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace surveil {

ContactBearing bearing_from_offset(double dx, double dy) {
  return ContactBearing{std::atan2(dx, dy)};
}

namespace detail {

// Defined for every bearing: the acos argument has magnitude <= 1 because
// alpha^2 + 2 alpha cos(l) + 1 >= (1 - alpha^2)|sin(l)| with equality only
// on the cone boundary.
double phase2_heading_unchecked(const EngagementParams& params, double lambda) {
  const double a = params.alpha;
  const double num = (a * a - 1.0) * std::sin(lambda);
  const double den = a * a + 2.0 * a * std::cos(lambda) + 1.0;
  return std::acos(std::clamp(num / den, -1.0, 1.0));
}

}  // namespace detail

double phase2_heading(const EngagementParams& params, ContactBearing lambda) {
  if (params.alpha + std::cos(lambda.lambda) <= 0.0)
    throw std::domain_error(
        "contact bearing lies in the zero-observation cone");
  return detail::phase2_heading_unchecked(params, lambda.lambda);
}

double observation_time(const EngagementParams& params, ContactBearing lambda) {
  // The cone test is done in angle space so the boundary is exactly zero.
  if (std::fabs(lambda.lambda) >= zero_observation_cone(params)) return 0.0;
  const double a = params.alpha;
  const double t =
      2.0 * params.radius * (a + std::cos(lambda.lambda)) / (1.0 - a * a);
  return std::max(0.0, t);
}

double max_observation_time(const EngagementParams& params) {
  return 2.0 * params.radius / (1.0 - params.alpha);
}

double zero_observation_cone(const EngagementParams& params) {
  return std::acos(-params.alpha);
}

}  // namespace surveil
