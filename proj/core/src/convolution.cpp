#include "curvewalk/convolution.hpp"

#include <string>

namespace curvewalk {

ConvolutionTable convolve_step(const ConvolutionTable& table, const StepDistribution& mu,
                               std::size_t budget) {
  std::size_t worst = table.entries.size() * mu.support_size();
  if (worst > budget) {
    throw BudgetExceeded("convolution: table of up to " + std::to_string(worst) +
                             " entries exceeds budget " + std::to_string(budget),
                         worst);
  }
  ConvolutionTable next;
  next.steps = table.steps + 1;
  for (const auto& [g, p] : table.entries) {
    for (const Atom& a : mu.atoms()) {
      next.entries[g * a.element] += p * a.probability;
    }
  }
  return next;
}

ConvolutionTable convolution(const StepDistribution& mu, int n, std::size_t budget) {
  if (n < 0) throw std::invalid_argument("convolution: negative step count");
  ConvolutionTable table;
  table.steps = 0;
  table.entries.emplace(GroupElement::identity(), Rational(1));
  for (int i = 0; i < n; ++i) table = convolve_step(table, mu, budget);
  return table;
}

}  // namespace curvewalk
