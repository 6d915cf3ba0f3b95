#include "surveil/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace surveil {

namespace {

Vec2 relative_velocity(double alpha, double psi) {
  return {alpha * std::cos(psi), alpha * std::sin(psi) - 1.0};
}

// Coefficients of |p + v t|^2 = R^2. |v|^2 >= (1 - alpha)^2 > 0 always.
QuadRoots range_crossings(const Vec2& p, const Vec2& v, double radius) {
  return solve_quadratic(norm2(v), 2.0 * dot(p, v),
                         norm2(p) - radius * radius);
}

}  // namespace

std::optional<double> contact_time(const EngagementParams& params,
                                   const RelativeState& rel, double psi) {
  const Vec2 p{rel.x, rel.y};
  const double r2 = params.radius * params.radius;
  if (norm2(p) <= r2) return 0.0;

  const QuadRoots roots = range_crossings(p, relative_velocity(params.alpha, psi),
                                          params.radius);
  if (roots.count == 0) return std::nullopt;
  if (roots.lo >= 0.0) return roots.lo;
  if (roots.hi >= 0.0) return roots.hi;
  return std::nullopt;
}

double escape_time(const EngagementParams& params,
                   const RelativeState& rel_at_contact, double psi2) {
  const Vec2 p{rel_at_contact.x, rel_at_contact.y};
  const QuadRoots roots = range_crossings(p, relative_velocity(params.alpha, psi2),
                                          params.radius);
  if (roots.count == 0) return 0.0;
  return std::max(0.0, roots.hi - std::max(0.0, roots.lo));
}

double default_horizon(const EngagementParams& params, const WorldState& state) {
  const double sep = std::hypot(state.x_o, state.y_o - state.y_t);
  return 10.0 * 2.0 * params.radius / (1.0 - params.alpha) + sep;
}

Trajectory simulate(const EngagementParams& params, const WorldState& state,
                    double psi1, double psi2, const SimulateOptions& opts) {
  if (!(opts.dt > 0.0) || !std::isfinite(opts.dt))
    throw std::invalid_argument("sample step dt must be positive");

  const double alpha = params.alpha;
  const double radius = params.radius;
  const Vec2 p0{state.x_o, state.y_o - state.y_t};

  Trajectory traj;
  traj.psi1 = psi1;
  traj.psi2 = psi2;

  // Resolve the approach-phase events.
  Vec2 contact_rel;  // observer relative to target at t2
  if (norm(p0) <= radius) {
    traj.t2 = 0.0;
    contact_rel = p0;
  } else {
    const std::optional<double> tc =
        contact_time(params, {p0.x, p0.y, false}, psi1);

    std::optional<double> t_cross;
    const double vx1 = alpha * std::cos(psi1);
    if (vx1 != 0.0) {
      const double tx = -state.x_o / vx1;
      if (tx >= 0.0) t_cross = tx;
    }

    bool riding = false;
    if (t_cross && (!tc || *t_cross < *tc)) {
      // Gap between the bottom of the disk and the target at the crossing.
      const double gap = (state.y_o + alpha * std::sin(psi1) * *t_cross - radius) -
                         (state.y_t + *t_cross);
      if (gap >= 0.0) {
        riding = true;
        traj.ride_start = *t_cross;
        traj.t2 = *t_cross + gap / (1.0 - alpha);
        contact_rel = {0.0, radius};
      }
    }
    if (!riding && tc) {
      traj.t2 = *tc;
      contact_rel = p0 + relative_velocity(alpha, psi1) * *tc;
    }
  }

  double t_end;
  if (traj.t2) {
    const double dur = escape_time(
        params, {contact_rel.x, contact_rel.y, false}, psi2);
    traj.tf = *traj.t2 + dur;
    t_end = *traj.tf;
  } else {
    t_end = opts.horizon.value_or(default_horizon(params, state));
  }

  // Exact segment anchors: (start time, observer position, heading).
  struct Segment {
    double t0;
    Vec2 at;
    double psi;
  };
  std::vector<Segment> segs;
  segs.push_back({0.0, {state.x_o, state.y_o}, psi1});
  if (traj.ride_start) {
    const double tx = *traj.ride_start;
    segs.push_back(
        {tx, {0.0, state.y_o + alpha * std::sin(psi1) * tx}, kPi / 2.0});
  }
  if (traj.t2) {
    const double t2 = *traj.t2;
    Vec2 at;
    if (traj.ride_start) {
      at = {0.0, state.y_t + t2 + radius};  // exact: bearing-zero contact
    } else {
      const Segment& s = segs.back();
      at = {s.at.x + alpha * std::cos(s.psi) * (t2 - s.t0),
            s.at.y + alpha * std::sin(s.psi) * (t2 - s.t0)};
    }
    segs.push_back({t2, at, psi2});
  }

  // Sample times: multiples of dt plus the exact event times.
  std::vector<double> times;
  const long nsteps = static_cast<long>(std::floor(t_end / opts.dt));
  if (nsteps > 20'000'000)
    throw std::invalid_argument("sample step too small for the run length");
  times.reserve(static_cast<size_t>(nsteps) + 4);
  for (long k = 0; k <= nsteps; ++k) {
    const double tk = static_cast<double>(k) * opts.dt;
    if (tk > t_end) break;
    times.push_back(tk);
  }
  if (traj.ride_start) times.push_back(*traj.ride_start);
  if (traj.t2) times.push_back(*traj.t2);
  times.push_back(t_end);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  traj.samples.reserve(times.size());
  for (const double t : times) {
    size_t i = segs.size() - 1;
    while (i > 0 && segs[i].t0 > t) --i;
    const Segment& s = segs[i];
    const double dt_seg = t - s.t0;
    traj.samples.push_back(
        {t, WorldState(s.at.x + alpha * std::cos(s.psi) * dt_seg,
                       s.at.y + alpha * std::sin(s.psi) * dt_seg,
                       state.y_t + t)});
  }
  return traj;
}

}  // namespace surveil
