#include "curvewalk/graph_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace curvewalk {

namespace {

struct Tree {
  int n;
  std::vector<std::pair<int, int>> edges;
};

std::vector<std::vector<int>> adjacency(const Tree& t) {
  std::vector<std::vector<int>> adj(t.n);
  for (auto [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(ahu_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string code = "(";
  for (auto& k : kids) code += k;
  code += ")";
  return code;
}

// Canonical form: AHU code rooted at the tree's center (min of both codes
// when the center is an edge).
std::string canonical(const Tree& t) {
  auto adj = adjacency(t);
  std::vector<int> degree(t.n), order;
  for (int v = 0; v < t.n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  std::vector<bool> removed(t.n, false);
  for (int v = 0; v < t.n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = t.n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int w : adj[v]) {
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < t.n; ++v) {
    if (!removed[v]) centers.push_back(v);
  }
  std::string best;
  for (int ci : centers) {
    std::string code = ahu_code(adj, ci, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<FiniteSpace> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("all_trees: n must be >= 1");
  std::vector<Tree> current = {Tree{1, {}}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Tree> next;
    for (const Tree& t : current) {
      for (int v = 0; v < t.n; ++v) {
        Tree grown = t;
        grown.edges.emplace_back(v, t.n);
        grown.n = t.n + 1;
        if (seen.insert(canonical(grown)).second) next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  std::vector<FiniteSpace> out;
  out.reserve(current.size());
  for (const Tree& t : current) out.push_back(FiniteSpace::from_edges(t.n, t.edges));
  return out;
}

FiniteSpace random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
  std::mt19937_64 rng(seed);
  auto coin = [&] { return (rng() >> 11) * 0x1.0p-53 < p; };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin()) edges.emplace_back(u, v);
      }
    }
    // union-find connectivity check before paying for the full space
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int components = n;
    for (auto [u, v] : edges) {
      int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    if (components == 1) return FiniteSpace::from_edges(n, edges);
  }
  throw std::runtime_error("random_connected_graph: no connected sample (p too small?)");
}

FareyBall farey_ball(int max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("farey_ball: denominator bound >= 1");
  FareyBall ball;
  ball.labels.push_back(Slope{1, 0});
  for (int q = 1; q <= max_denominator; ++q) {
    for (int p = 0; p <= q; ++p) {
      if (p == q && q != 1) continue;
      if (std::gcd(p, q) != 1) continue;
      ball.labels.push_back(Slope{p, q});
    }
  }
  const int n = static_cast<int>(ball.labels.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (intersection_number(ball.labels[i], ball.labels[j]) == 1) edges.emplace_back(i, j);
    }
  }
  ball.space = FiniteSpace::from_edges(n, edges);
  return ball;
}

}  // namespace curvewalk
