#ifndef SURVEIL_TESTS_SUPPORT_HPP
#define SURVEIL_TESTS_SUPPORT_HPP

#include <random>

#include "surveil/approach.hpp"
#include "surveil/engagement.hpp"
#include "surveil/scenario.hpp"

namespace surveil::testing {

struct RandomInstance {
  EngagementParams params;
  WorldState state;
};

class InstanceGen {
 public:
  explicit InstanceGen(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  RandomInstance any(double alpha_lo = 0.3, double alpha_hi = 0.9) {
    const double alpha = uniform(alpha_lo, alpha_hi);
    const double radius = uniform(0.5, 3.0);
    return {EngagementParams{alpha, radius},
            WorldState{uniform(0.0, 10.0), uniform(0.0, 10.0), 0.0}};
  }

  /// Instance with the target strictly outside the observation disk.
  RandomInstance outside() {
    for (;;) {
      RandomInstance inst = any();
      const RelativeState rel = to_relative(inst.state);
      if (rel.x * rel.x + rel.y * rel.y >
          inst.params.radius * inst.params.radius * 1.0001)
        return inst;
    }
  }

  RandomInstance in_region(RegionLabel want) {
    for (;;) {
      RandomInstance inst = outside();
      if (classify(inst.params, to_relative(inst.state)) == want) return inst;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace surveil::testing

#endif
