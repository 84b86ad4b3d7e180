#pragma once

#include <cstdint>
#include <vector>

#include "curvewalk/rng.hpp"
#include "curvewalk/step_distribution.hpp"

namespace curvewalk {

// A sampled trajectory: positions[0] is the identity and positions[k] =
// positions[k-1] * increments[k-1]. Deterministic in (mu, n, seed).
struct WalkPath {
  std::uint64_t seed = 0;
  std::vector<GroupElement> increments;
  std::vector<std::string> labels;  // atom labels, aligned with increments
  std::vector<GroupElement> positions;

  int length() const { return static_cast<int>(increments.size()); }
};

WalkPath sample_path(const StepDistribution& mu, int steps, std::uint64_t seed);

// Bernoulli shift on increments: drops the first increment, so the new
// positions are w_1^-1 w_{k+1}. Rejects empty paths.
WalkPath shift(const WalkPath& path);

// Streaming walker for long runs: carries only the current position. Draws
// the same increment sequence as sample_path for the same seed.
class WalkCursor {
 public:
  WalkCursor(const StepDistribution& mu, std::uint64_t seed)
      : mu_(&mu), rng_(make_engine(seed)) {}

  const GroupElement& position() const { return position_; }
  int step_count() const { return steps_; }

  const Atom& step() {
    const Atom& a = mu_->sample(rng_());
    position_ = position_ * a.element;
    ++steps_;
    return a;
  }

  void advance(int k) {
    for (int i = 0; i < k; ++i) step();
  }

 private:
  const StepDistribution* mu_;
  std::mt19937_64 rng_;
  GroupElement position_;
  int steps_ = 0;
};

}  // namespace curvewalk
