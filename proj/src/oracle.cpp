#include "surveil/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "surveil/approach.hpp"
#include "surveil/simulator.hpp"

namespace surveil {

SweepReport sweep(const EngagementParams& params, const WorldState& state,
                  std::size_t n1, std::size_t n2) {
  if (n1 < 8 || n2 < 8)
    throw std::invalid_argument("sweep grids must have at least 8 points");

  SweepReport report;
  report.grid_n1 = n1;
  report.grid_n2 = n2;

  const Vec2 p0{state.x_o, state.y_o - state.y_t};
  const double step1 = 2.0 * kPi / static_cast<double>(n1);
  const double step2 = 2.0 * kPi / static_cast<double>(n2);

  for (std::size_t i = 0; i < n1; ++i) {
    const double psi1 = static_cast<double>(i) * step1;
    const std::optional<double> tc =
        contact_time(params, {p0.x, p0.y, false}, psi1);
    if (!tc) continue;

    const Vec2 pc{p0.x + params.alpha * std::cos(psi1) * *tc,
                  p0.y + (params.alpha * std::sin(psi1) - 1.0) * *tc};
    for (std::size_t j = 0; j < n2; ++j) {
      const double psi2 = static_cast<double>(j) * step2;
      const double dur = escape_time(params, {pc.x, pc.y, false}, psi2);
      if (dur > report.best_t_obs) {
        report.best_t_obs = dur;
        report.best_psi1 = psi1;
        report.best_psi2 = psi2;
      }
    }
  }

  report.closed_form_t_obs = solve(params, state).t_obs;
  report.gap = report.closed_form_t_obs - report.best_t_obs;
  return report;
}

}  // namespace surveil
