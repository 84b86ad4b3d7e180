#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "curvewalk/slope.hpp"

namespace curvewalk {

// A finite connected graph with unit edge lengths, with the all-pairs
// distance table, interval (geodesic-support) sets and a deterministic
// canonical geodesic selector precomputed. Immutable after construction;
// vertex 0 is the basepoint by convention.
class FiniteSpace {
 public:
  static FiniteSpace from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Edge-list text format: first line "n m", then m lines "u v" (0-based).
  static FiniteSpace load(std::istream& in);
  static FiniteSpace load_file(const std::string& path);

  int size() const { return n_; }
  int distance(int x, int y) const { return dist_[idx(x, y)]; }
  int diameter() const { return diameter_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // I(x,y) = {v : d(x,v) + d(v,y) = d(x,y)}, sorted ascending.
  const std::vector<int>& interval(int x, int y) const;

  // Canonical geodesic from x to y: breadth-first predecessors toward x with
  // smallest-index tie-break, listed x first.
  std::vector<int> geodesic(int x, int y) const;

  // min over v of d(z, v); set must be non-empty.
  int distance_to_set(int z, const std::vector<int>& set) const;

  // All points of S at minimal distance from z. Rejects empty S.
  std::vector<int> nearest_point_projection(int z, const std::vector<int>& S) const;

 private:
  int idx(int x, int y) const { return x * n_ + y; }
  int pair_idx(int x, int y) const {
    if (x > y) std::swap(x, y);
    return x * n_ + y;
  }

  int n_ = 0;
  int diameter_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::int16_t> dist_;        // n*n
  std::vector<std::int32_t> parent_;      // parent_[s*n+v]: predecessor of v toward s
  std::vector<std::vector<int>> interval_;  // indexed by pair_idx with x <= y
};

struct Halfspace {
  int anchor = 0;  // a
  int target = 0;  // b
  int slack = 0;   // C
  std::vector<int> members;        // {x : d(x,b) <= d(x,a) + C}, sorted
  std::vector<std::uint8_t> mask;  // indicator over vertices
  bool contains(int v) const { return mask[v] != 0; }
};

Halfspace halfspace(const FiniteSpace& space, int a, int b, int C = 0);

// {x : d(x,a) = d(x,b)}; may be empty on graphs with odd distances. a != b.
std::vector<int> equidistant_set(const FiniteSpace& space, int a, int b);

// Hyperbolicity constants. Both are exact half-integers, so they are exposed
// in doubled form alongside a double convenience; the toolkit's working
// value is the max of the two.
int delta_four_point_doubled(const FiniteSpace& space);
int delta_interval_slim_doubled(const FiniteSpace& space);
int working_delta_doubled(const FiniteSpace& space);

double delta_four_point(const FiniteSpace& space);
double delta_interval_slim(const FiniteSpace& space);

}  // namespace curvewalk
