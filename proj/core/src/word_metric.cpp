#include "curvewalk/word_metric.hpp"

#include <algorithm>

namespace curvewalk {

WordMetric::WordMetric(std::vector<GroupElement> generators, int max_radius)
    : max_radius_(max_radius) {
  for (const GroupElement& g : generators) {
    if (g.is_identity()) continue;
    GroupElement inv = g.inverse();
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
    if (std::find(gens_.begin(), gens_.end(), inv) == gens_.end()) gens_.push_back(inv);
  }
  half_radius_ = (max_radius_ + 1) / 2;
  ball_.emplace(GroupElement::identity(), 0);
  layers_.push_back({GroupElement::identity()});
  grown_ = 0;
}

void WordMetric::grow_locked(int target_half) const {
  while (grown_ < target_half) {
    std::vector<GroupElement> next;
    for (const GroupElement& u : layers_[grown_]) {
      for (const GroupElement& s : gens_) {
        GroupElement v = u * s;
        if (ball_.emplace(v, grown_ + 1).second) next.push_back(std::move(v));
      }
    }
    layers_.push_back(std::move(next));
    ++grown_;
  }
}

std::optional<int> WordMetric::length(const GroupElement& g) const {
  if (gens_.empty()) return g.is_identity() ? std::optional<int>(0) : std::nullopt;
  std::lock_guard<std::mutex> lock(mu_);
  grow_locked(half_radius_);
  // g = u * v with both halves inside the ball; scan layers outward so the
  // first hit is optimal.
  int best = -1;
  for (int i = 0; i <= grown_; ++i) {
    if (best >= 0 && i >= best) break;
    for (const GroupElement& u : layers_[i]) {
      auto it = ball_.find(u.inverse() * g);
      if (it != ball_.end()) {
        int total = i + it->second;
        if (best < 0 || total < best) best = total;
      }
    }
  }
  if (best < 0 || best > max_radius_) return std::nullopt;
  return best;
}

std::optional<int> word_length(const GroupElement& g,
                               const std::vector<GroupElement>& generators,
                               int max_radius) {
  WordMetric metric(generators, max_radius);
  return metric.length(g);
}

}  // namespace curvewalk
