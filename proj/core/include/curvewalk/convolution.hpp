#pragma once

#include <map>

#include "curvewalk/farey.hpp"
#include "curvewalk/step_distribution.hpp"

namespace curvewalk {

// The exact distribution of the walk's position after n steps. Entries stay
// rational throughout; the table refuses to grow past the budget rather than
// degrade to floating point.
struct ConvolutionTable {
  int steps = 0;
  std::map<GroupElement, Rational> entries;

  Rational total_mass() const {
    Rational t = 0;
    for (const auto& [g, p] : entries) t += p;
    return t;
  }
};

// mu^(n); budget caps the worst-case support size support^n. Throws
// BudgetExceeded carrying the required budget when it would be passed.
ConvolutionTable convolution(const StepDistribution& mu, int n,
                             std::size_t budget = 2'000'000);

// One more step: table(n+1) = table(n) * mu.
ConvolutionTable convolve_step(const ConvolutionTable& table, const StepDistribution& mu,
                               std::size_t budget = 2'000'000);

}  // namespace curvewalk
