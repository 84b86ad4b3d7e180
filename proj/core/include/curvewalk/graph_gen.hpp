#pragma once

#include <cstdint>
#include <vector>

#include "curvewalk/finite_space.hpp"
#include "curvewalk/slope.hpp"

namespace curvewalk {

// All free trees with exactly n vertices, one representative per isomorphism
// class (leaf extension with canonical-form dedup).
std::vector<FiniteSpace> all_trees(int n);

// Erdos-Renyi G(n, p) conditioned on connectivity, deterministic in the seed.
FiniteSpace random_connected_graph(int n, double p, std::uint64_t seed);

// The subgraph of the Farey graph on the slopes of [0,1] with denominator at
// most max_denominator, plus the vertex 1/0 (adjacent to 0/1 and 1/1).
// Vertex 0 is 1/0. Returns the space and the slope labels.
struct FareyBall {
  FiniteSpace space;
  std::vector<Slope> labels;
};
FareyBall farey_ball(int max_denominator);

}  // namespace curvewalk
