#include "curvewalk/finite_space.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace curvewalk {

FiniteSpace FiniteSpace::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("FiniteSpace: need at least one vertex");
  if (n > 20000) throw std::invalid_argument("FiniteSpace: vertex count beyond desk scale");
  FiniteSpace s;
  s.n_ = n;
  s.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("FiniteSpace: edge endpoint out of range");
    }
    if (u == v) continue;
    s.adj_[u].push_back(v);
    s.adj_[v].push_back(u);
  }
  for (auto& nb : s.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  s.dist_.assign(static_cast<std::size_t>(n) * n, -1);
  s.parent_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int src = 0; src < n; ++src) {
    queue.clear();
    queue.push_back(src);
    s.dist_[s.idx(src, src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      std::int16_t du = s.dist_[s.idx(src, u)];
      for (int v : s.adj_[u]) {
        auto& dv = s.dist_[s.idx(src, v)];
        if (dv < 0) {
          dv = du + 1;
          queue.push_back(v);
        }
      }
    }
    if (static_cast<int>(queue.size()) != n) {
      throw std::invalid_argument("FiniteSpace: graph is not connected");
    }
    // Smallest-index predecessor toward src, for the canonical geodesics.
    s.parent_[s.idx(src, src)] = src;
    for (int v = 0; v < n; ++v) {
      if (v == src) continue;
      int dv = s.dist_[s.idx(src, v)];
      for (int u : s.adj_[v]) {
        if (s.dist_[s.idx(src, u)] == dv - 1) {
          s.parent_[s.idx(src, v)] = u;
          break;
        }
      }
    }
  }
  s.diameter_ = 0;
  for (std::int16_t d : s.dist_) s.diameter_ = std::max<int>(s.diameter_, d);

  s.interval_.assign(static_cast<std::size_t>(n) * n, {});
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      auto& cell = s.interval_[s.pair_idx(x, y)];
      int dxy = s.distance(x, y);
      for (int v = 0; v < n; ++v) {
        if (s.distance(x, v) + s.distance(v, y) == dxy) cell.push_back(v);
      }
    }
  }
  return s;
}

FiniteSpace FiniteSpace::load(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("FiniteSpace::load: missing \"n m\" header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("FiniteSpace::load: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    edges.emplace_back(u, v);
  }
  return from_edges(n, edges);
}

FiniteSpace FiniteSpace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("FiniteSpace::load_file: cannot open " + path);
  return load(in);
}

const std::vector<int>& FiniteSpace::interval(int x, int y) const {
  return interval_[pair_idx(x, y)];
}

std::vector<int> FiniteSpace::geodesic(int x, int y) const {
  std::vector<int> path;
  int v = y;
  while (v != x) {
    path.push_back(v);
    v = parent_[idx(x, v)];
  }
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

int FiniteSpace::distance_to_set(int z, const std::vector<int>& set) const {
  int best = std::numeric_limits<int>::max();
  for (int v : set) best = std::min(best, distance(z, v));
  return best;
}

std::vector<int> FiniteSpace::nearest_point_projection(int z, const std::vector<int>& S) const {
  if (S.empty()) throw std::invalid_argument("nearest_point_projection: empty set");
  int best = distance_to_set(z, S);
  std::vector<int> out;
  for (int v : S) {
    if (distance(z, v) == best) out.push_back(v);
  }
  return out;
}

Halfspace halfspace(const FiniteSpace& space, int a, int b, int C) {
  Halfspace h;
  h.anchor = a;
  h.target = b;
  h.slack = C;
  h.mask.assign(space.size(), 0);
  for (int v = 0; v < space.size(); ++v) {
    if (space.distance(v, b) <= space.distance(v, a) + C) {
      h.mask[v] = 1;
      h.members.push_back(v);
    }
  }
  return h;
}

std::vector<int> equidistant_set(const FiniteSpace& space, int a, int b) {
  if (a == b) throw std::invalid_argument("equidistant_set: points coincide");
  std::vector<int> out;
  for (int v = 0; v < space.size(); ++v) {
    if (space.distance(v, a) == space.distance(v, b)) out.push_back(v);
  }
  return out;
}

int delta_four_point_doubled(const FiniteSpace& space) {
  const int n = space.size();
  int worst = 0;  // largest pair-sum minus median pair-sum
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int dxy = space.distance(x, y);
      for (int z = y; z < n; ++z) {
        int dxz = space.distance(x, z);
        int dyz = space.distance(y, z);
        for (int w = z; w < n; ++w) {
          int s1 = dxy + space.distance(z, w);
          int s2 = dxz + space.distance(y, w);
          int s3 = dyz + space.distance(x, w);
          int hi = std::max({s1, s2, s3});
          int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          worst = std::max(worst, hi - mid);
        }
      }
    }
  }
  return worst;  // = 2 * delta
}

int delta_interval_slim_doubled(const FiniteSpace& space) {
  const int n = space.size();
  int worst = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const auto& ixy = space.interval(x, y);
      for (int z = 0; z < n; ++z) {
        const auto& ixz = space.interval(x, z);
        const auto& izy = space.interval(z, y);
        for (int v : ixy) {
          int best = std::numeric_limits<int>::max();
          for (int w : ixz) {
            best = std::min(best, space.distance(v, w));
            if (best <= worst) break;
          }
          if (best <= worst) continue;
          for (int w : izy) {
            best = std::min(best, space.distance(v, w));
            if (best <= worst) break;
          }
          worst = std::max(worst, best);
        }
      }
    }
  }
  return 2 * worst;
}

int working_delta_doubled(const FiniteSpace& space) {
  return std::max(delta_four_point_doubled(space), delta_interval_slim_doubled(space));
}

double delta_four_point(const FiniteSpace& space) {
  return delta_four_point_doubled(space) / 2.0;
}

double delta_interval_slim(const FiniteSpace& space) {
  return delta_interval_slim_doubled(space) / 2.0;
}

}  // namespace curvewalk
