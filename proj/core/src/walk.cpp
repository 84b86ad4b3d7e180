#include "curvewalk/walk.hpp"

#include <stdexcept>

namespace curvewalk {

WalkPath sample_path(const StepDistribution& mu, int steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("sample_path: negative step count");
  WalkPath path;
  path.seed = seed;
  path.increments.reserve(steps);
  path.positions.reserve(steps + 1);
  path.positions.push_back(GroupElement::identity());
  std::mt19937_64 rng = make_engine(seed);
  for (int i = 0; i < steps; ++i) {
    const Atom& a = mu.sample(rng());
    path.increments.push_back(a.element);
    path.labels.push_back(a.label);
    path.positions.push_back(path.positions.back() * a.element);
  }
  return path;
}

WalkPath shift(const WalkPath& path) {
  if (path.increments.empty()) throw std::invalid_argument("shift: empty path");
  WalkPath out;
  out.seed = path.seed;
  out.increments.assign(path.increments.begin() + 1, path.increments.end());
  if (!path.labels.empty()) {
    out.labels.assign(path.labels.begin() + 1, path.labels.end());
  }
  out.positions.reserve(out.increments.size() + 1);
  out.positions.push_back(GroupElement::identity());
  for (const GroupElement& inc : out.increments) {
    out.positions.push_back(out.positions.back() * inc);
  }
  return out;
}

}  // namespace curvewalk
