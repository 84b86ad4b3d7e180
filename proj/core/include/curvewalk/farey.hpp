#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvewalk/group_element.hpp"
#include "curvewalk/slope.hpp"

namespace curvewalk {

// Distances in the Farey graph are computed on the support of the cutting
// sequence: the vertices of the tessellation triangles crossed by the
// hyperbolic geodesic between the two slopes. The strip below records those
// vertices together with the triangle edges, which is enough graph to carry
// a shortest path between the endpoints.

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what, std::size_t required_)
      : std::runtime_error(what), required(required_) {}
  std::size_t required;
};

struct FareyStrip {
  std::vector<Slope> vertices;                 // crossing order; source first, target last
  std::vector<std::pair<int, int>> edges;      // indices into vertices
  int source = 0;
  int target = 0;
};

// All pivot vertices, explicitly. Throws BudgetExceeded when the pivot count
// would pass `budget` (the count grows with the sum of the continued-fraction
// partial quotients of the endpoints).
FareyStrip cutting_strip(const Slope& s, const Slope& t,
                         std::size_t budget = 4'000'000);

// Same vertex support, but long fans around a common vertex are represented
// by their first and last two members. Distances between the retained
// vertices agree with the full strip, so this is what the distance query
// uses; it stays cheap even for slopes with huge partial quotients.
FareyStrip cutting_strip_compressed(const Slope& s, const Slope& t);

// Ordered pivot list of the full strip. Rejects s = t.
std::vector<Slope> cutting_sequence(const Slope& s, const Slope& t,
                                    std::size_t budget = 4'000'000);

struct FareyGeodesic {
  std::vector<Slope> vertices;  // consecutive vertices are Farey-adjacent
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

int farey_distance(const Slope& s, const Slope& t);
FareyGeodesic farey_geodesic(const Slope& s, const Slope& t);

// Independent check: breadth-first distance inside the box of slopes with
// |p| <= bound and q <= bound. Reported with the bound so callers can demand
// stability across growing bounds; nullopt when the target is unreachable
// within the box.
struct BfsOracleResult {
  std::optional<int> distance;
  long bound = 0;
};
BfsOracleResult bfs_oracle(const Slope& s, const Slope& t, long bound);

// Batch form: distances from `source` to every canonical slope in the box,
// as a dense table indexed by slope_box_index(). -1 means unreachable.
class FareyBoxBfs {
 public:
  explicit FareyBoxBfs(long bound);
  // Runs a fresh BFS from `source`; returns distances keyed by box index.
  const std::vector<int>& run(const Slope& source);
  long index_of(const Slope& s) const;  // -1 if outside the box
  long bound() const { return bound_; }

 private:
  long bound_;
  std::vector<int> dist_;
  std::vector<long> queue_;
};

// Displacement of the base slope 1/0, the exact curve-complex proxy for the
// relative length of a group element.
inline const Slope& base_slope() {
  static const Slope s{1, 0};
  return s;
}

int relative_length(const GroupElement& g);

}  // namespace curvewalk
