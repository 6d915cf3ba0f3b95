#ifndef SURVEIL_ORACLE_HPP
#define SURVEIL_ORACLE_HPP

#include <cstddef>

#include "surveil/engagement.hpp"

namespace surveil {

/// Result of a brute-force heading sweep. best_t_obs is measured purely
/// from quadratic event times, never from the closed forms it is checking;
/// closed_form_t_obs comes from solve() and is attached for comparison.
struct SweepReport {
  double best_psi1 = 0.0;
  double best_psi2 = 0.0;
  double best_t_obs = 0.0;
  std::size_t grid_n1 = 0;
  std::size_t grid_n2 = 0;
  double closed_form_t_obs = 0.0;
  double gap = 0.0;  // closed form minus best swept
};

/// Sweep n1 approach headings over [0, 2pi); for each that produces
/// contact, sweep n2 observation headings and record the best in-range
/// duration. Deterministic: ties keep the smallest psi1, then psi2.
/// Requires n1, n2 >= 8.
SweepReport sweep(const EngagementParams& params, const WorldState& state,
                  std::size_t n1, std::size_t n2);

}  // namespace surveil

#endif
