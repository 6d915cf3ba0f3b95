#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "surveil/observation.hpp"
#include "surveil/simulator.hpp"

using namespace surveil;

namespace {

// Independent check of a phase-2 heading: in-range duration from a boundary
// contact, straight from the range-crossing quadratic.
double swept_duration(const EngagementParams& params, double lambda,
                      double psi) {
  const RelativeState contact{params.radius * std::sin(lambda),
                              params.radius * std::cos(lambda), false};
  return escape_time(params, contact, psi);
}

}  // namespace

TEST_CASE("phase-2 heading reference values") {
  // Contact ahead of the observer; the two-argument bearing matters here.
  const double lambda = std::atan2(0.9913, -0.1315);
  const double psi = phase2_heading({0.8, 2.0}, {lambda});
  CHECK(rad2deg(psi) == doctest::Approx(104.4560).epsilon(2e-5));

  // sin(0) = 0 forces cos(psi) = 0.
  CHECK(phase2_heading({0.3, 1.0}, {0.0}) == kPi / 2.0);
  CHECK(phase2_heading({0.95, 5.0}, {0.0}) == kPi / 2.0);
}

TEST_CASE("phase-2 heading beats a fine sweep") {
  const EngagementParams params{0.7, 2.0};
  const double lambda = deg2rad(30.0);
  const double formula = phase2_heading(params, {lambda});
  CHECK(rad2deg(formula) == doctest::Approx(95.4144).epsilon(1e-5));

  double best_psi = 0.0, best_dur = -1.0;
  const double step = 1e-4;
  for (double psi = 0.0; psi < 2.0 * kPi; psi += step) {
    const double dur = swept_duration(params, lambda, psi);
    if (dur > best_dur) {
      best_dur = dur;
      best_psi = psi;
    }
  }
  CHECK(std::fabs(best_psi - formula) <= 1e-3);
  CHECK(swept_duration(params, lambda, formula) >= best_dur - 1e-9);
  CHECK(best_dur == doctest::Approx(observation_time(params, {lambda})).epsilon(1e-9));
}

TEST_CASE("phase-2 heading rejects the zero-observation cone") {
  const EngagementParams params{0.6, 2.0};
  const double cone = zero_observation_cone(params);
  CHECK_THROWS_AS(phase2_heading(params, {cone + 0.01}), std::domain_error);
  CHECK_THROWS_AS(phase2_heading(params, {-(cone + 0.01)}), std::domain_error);
  CHECK_NOTHROW(phase2_heading(params, {cone - 0.01}));
}

TEST_CASE("observation time reference values") {
  const double lambda_b = std::atan2(0.9913, -0.1315);
  CHECK(observation_time({0.8, 2.0}, {lambda_b}) ==
        doctest::Approx(7.4276).epsilon(1e-3));
  CHECK(observation_time({0.7, 2.0}, {0.0}) ==
        doctest::Approx(13.3333).epsilon(1e-4));
  const EngagementParams p06{0.6, 2.0};
  CHECK(observation_time(p06, {zero_observation_cone(p06)}) == 0.0);
}

TEST_CASE("maximum observation time") {
  CHECK(max_observation_time({0.7, 2.0}) == doctest::Approx(13.3333).epsilon(1e-4));
  CHECK(max_observation_time({0.8, 2.0}) == doctest::Approx(20.0));
  CHECK(max_observation_time({0.5, 1.0}) == doctest::Approx(4.0));

  testing::InstanceGen gen(3);
  for (int i = 0; i < 100; ++i) {
    const EngagementParams params{gen.uniform(0.05, 0.95), gen.uniform(0.1, 5.0)};
    CHECK(observation_time(params, {0.0}) ==
          doctest::Approx(max_observation_time(params)).epsilon(1e-12));
  }
}

TEST_CASE("zero-observation cone boundary") {
  CHECK(zero_observation_cone({0.6, 1.0}) == doctest::Approx(2.2143).epsilon(1e-4));
  CHECK(zero_observation_cone({0.8, 1.0}) == doctest::Approx(2.4981).epsilon(1e-4));
  CHECK(zero_observation_cone({1e-6, 1.0}) == doctest::Approx(kPi / 2.0).epsilon(1e-5));

  testing::InstanceGen gen(5);
  for (int i = 0; i < 10; ++i) {
    const EngagementParams params{gen.uniform(0.1, 0.9), gen.uniform(0.5, 3.0)};
    const double cone = zero_observation_cone(params);
    CHECK(observation_time(params, {cone}) == 0.0);
    CHECK(observation_time(params, {-cone}) == 0.0);
    CHECK(observation_time(params, {cone + 0.01}) == 0.0);
    CHECK(observation_time(params, {cone - 0.01}) > 0.0);
  }
}

TEST_CASE("observation time is unimodal in the contact bearing") {
  testing::InstanceGen gen(7);
  for (int rep = 0; rep < 5; ++rep) {
    const EngagementParams params{gen.uniform(0.2, 0.9), gen.uniform(0.5, 3.0)};
    double prev = observation_time(params, {-kPi});
    for (int i = 1; i <= 500; ++i) {
      const double lam = -kPi + kPi * i / 500.0;
      const double cur = observation_time(params, {lam});
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
    prev = observation_time(params, {0.0});
    CHECK(prev == doctest::Approx(max_observation_time(params)).epsilon(1e-12));
    for (int i = 1; i <= 500; ++i) {
      const double lam = kPi * i / 500.0;
      const double cur = observation_time(params, {lam});
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("target stays in range for the whole observation phase") {
  testing::InstanceGen gen(9);
  for (int i = 0; i < 25; ++i) {
    const EngagementParams params{gen.uniform(0.2, 0.9), gen.uniform(0.5, 3.0)};
    const double cone = zero_observation_cone(params);
    const double lambda = gen.uniform(-0.95, 0.95) * cone;
    const double psi2 = phase2_heading(params, {lambda});

    const WorldState contact{params.radius * std::sin(lambda),
                             params.radius * std::cos(lambda), 0.0};
    const double dur = observation_time(params, {lambda});
    const Trajectory traj =
        simulate(params, contact, psi2, psi2, {dur / 1001.0, {}});
    REQUIRE(traj.t2.has_value());
    CHECK(*traj.t2 <= 1e-12);
    REQUIRE(traj.tf.has_value());
    CHECK(*traj.tf == doctest::Approx(dur).epsilon(1e-9));
    for (const auto& s : traj.samples) {
      const double rho = std::hypot(s.state.x_o, s.state.y_o - s.state.y_t);
      CHECK(rho <= params.radius * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("simulated in-range duration matches the closed form") {
  testing::InstanceGen gen(13);
  for (int i = 0; i < 200; ++i) {
    const EngagementParams params{gen.uniform(0.2, 0.9), gen.uniform(0.5, 3.0)};
    const double cone = zero_observation_cone(params);
    const double lambda = gen.uniform(-0.98, 0.98) * cone;
    const double psi2 = phase2_heading(params, {lambda});
    const double dur = swept_duration(params, lambda, psi2);
    const double formula = observation_time(params, {lambda});
    CHECK(dur == doctest::Approx(formula).epsilon(1e-9));
  }
}

TEST_CASE("heading symmetry across the track") {
  testing::InstanceGen gen(15);
  for (int i = 0; i < 200; ++i) {
    const EngagementParams params{gen.uniform(0.2, 0.9), 1.0};
    const double lambda =
        gen.uniform(0.0, 0.98) * zero_observation_cone(params);
    const double plus = phase2_heading(params, {lambda});
    const double minus = phase2_heading(params, {-lambda});
    CHECK(minus == doctest::Approx(kPi - plus).epsilon(1e-12));
  }
}

TEST_CASE("no swept heading beats the closed-form observation time") {
  testing::InstanceGen gen(19);
  for (int i = 0; i < 20; ++i) {
    const EngagementParams params{gen.uniform(0.2, 0.9), gen.uniform(0.5, 3.0)};
    const double lambda =
        gen.uniform(-0.97, 0.97) * zero_observation_cone(params);
    const double bound = observation_time(params, {lambda});
    for (int j = 0; j < 3600; ++j) {
      const double psi = 2.0 * kPi * j / 3600.0;
      CHECK(swept_duration(params, lambda, psi) <= bound + 1e-6);
    }
  }
}
