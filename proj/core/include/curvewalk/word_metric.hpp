#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "curvewalk/group_element.hpp"

namespace curvewalk {

// Word length over a finite generating set, by meet-in-the-middle search on
// a cached ball around the identity. The generating set is closed under
// inverses on construction. Queries beyond the configured radius report
// failure rather than guessing.
class WordMetric {
 public:
  explicit WordMetric(std::vector<GroupElement> generators, int max_radius = 16);

  // Shortest word length, or nullopt when g is not within max_radius.
  std::optional<int> length(const GroupElement& g) const;

  const std::vector<GroupElement>& generators() const { return gens_; }
  int max_radius() const { return max_radius_; }

 private:
  void grow_locked(int target_half) const;

  std::vector<GroupElement> gens_;
  int max_radius_;
  int half_radius_;

  mutable std::mutex mu_;  // guards the cached ball
  mutable std::unordered_map<GroupElement, int, GroupElementHash> ball_;
  mutable std::vector<std::vector<GroupElement>> layers_;
  mutable int grown_ = -1;
};

// One-shot convenience wrapper.
std::optional<int> word_length(const GroupElement& g,
                               const std::vector<GroupElement>& generators,
                               int max_radius = 16);

}  // namespace curvewalk
