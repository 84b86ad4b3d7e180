#include "curvewalk/farey.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>

namespace curvewalk {

namespace {

// M with M(s) = infinity; its inverse carries walk coordinates back.
struct Normalizer {
  GroupElement fwd;
  GroupElement inv;
};

Normalizer normalizer_to_infinity(const Slope& s) {
  // Bezout: x*p + y*q = 1.
  Int old_r = s.p, r = s.q;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_x - quot * x;
    old_x = std::move(x);
    x = std::move(tmp);
    tmp = old_y - quot * y;
    old_y = std::move(y);
    y = std::move(tmp);
  }
  if (old_r < 0) {
    old_x = -old_x;
    old_y = -old_y;
  }
  GroupElement fwd(old_x, old_y, -s.q, s.p);
  GroupElement inv(s.p, -old_y, s.q, old_x);
  return Normalizer{std::move(fwd), std::move(inv)};
}

Int cross(const Int& yp, const Int& yq, const Slope& v) {
  return yp * v.q - yq * v.p;
}

// Walks the Farey tessellation from infinity toward y = m/n (n >= 2,
// y not adjacent to infinity). Each loop iteration consumes one maximal run
// of mediants on a fixed side; run lengths come from exact division, so huge
// partial quotients cost one division, not one step each.
struct StripBuilder {
  bool compressed;
  std::size_t budget;

  std::vector<Slope> verts;
  std::vector<std::pair<int, int>> edges;

  int add(Slope v) {
    verts.push_back(std::move(v));
    return static_cast<int>(verts.size()) - 1;
  }
  void edge(int u, int v) { edges.emplace_back(u, v); }

  // Returns the index of the target vertex.
  int walk(const Int& m, const Int& n) {
    int inf = add(Slope{1, 0});
    Int k = floor_div(m, n);
    Slope lo{k, 1};
    Slope hi{k + 1, 1};
    int lo_idx = add(lo);
    int hi_idx = add(hi);
    edge(inf, lo_idx);
    edge(inf, hi_idx);
    edge(lo_idx, hi_idx);

    Int c_lo = cross(m, n, lo);  // > 0
    Int c_hi = cross(m, n, hi);  // < 0

    std::size_t emitted = 0;
    while (true) {
      const bool toward_lo = (c_lo + c_hi <= 0);  // next mediants replace hi
      const Slope& anchor = toward_lo ? lo : hi;
      const Slope& moving = toward_lo ? hi : lo;
      const int anchor_idx = toward_lo ? lo_idx : hi_idx;
      const int moving_idx = toward_lo ? hi_idx : lo_idx;
      const Int& c_anchor = toward_lo ? c_lo : c_hi;
      Int& c_moving = toward_lo ? c_hi : c_lo;

      // med_j = moving + j*anchor has cross = c_moving + j*c_anchor; the run
      // ends where the sign flips, or exactly at y.
      Int num = toward_lo ? Int(-c_moving) : Int(c_moving);
      Int den = toward_lo ? c_anchor : Int(-c_anchor);
      // num, den > 0 and the run covers j = 1..steps with steps = floor(num/den).
      Int steps = num / den;
      const bool exact = (num % den == 0);
      assert(steps >= 1);

      if (!compressed) {
        Int total = Int(emitted) + steps;
        if (total > Int(budget)) {
          std::size_t required = total > Int(std::numeric_limits<std::size_t>::max() / 2)
                                     ? std::numeric_limits<std::size_t>::max()
                                     : total.convert_to<std::size_t>();
          throw BudgetExceeded("cutting_strip: pivot budget exceeded", required);
        }
        emitted = total.convert_to<std::size_t>();
      }

      int prev_idx = moving_idx;
      int last_idx = -1;
      auto mediant_at = [&](const Int& j) {
        return Slope{moving.p + j * anchor.p, moving.q + j * anchor.q};
      };
      if (compressed) {
        Int kept[4] = {1, 2, steps - 1, steps};
        Int prev_j = 0;  // j of prev_idx (0 = the old moving endpoint)
        for (const Int& j : kept) {
          if (j < 1 || j > steps || j <= prev_j) continue;
          int idx = add(mediant_at(j));
          edge(idx, anchor_idx);
          if (j == prev_j + 1) edge(idx, prev_idx);
          prev_idx = idx;
          prev_j = j;
          last_idx = idx;
        }
      } else {
        long count = steps.convert_to<long>();
        for (long j = 1; j <= count; ++j) {
          int idx = add(mediant_at(Int(j)));
          edge(idx, anchor_idx);
          edge(idx, prev_idx);
          prev_idx = idx;
          last_idx = idx;
        }
      }

      Slope last = mediant_at(steps);
      c_moving += steps * c_anchor;
      if (toward_lo) {
        hi = std::move(last);
        hi_idx = last_idx;
      } else {
        lo = std::move(last);
        lo_idx = last_idx;
      }
      if (exact) return last_idx;
    }
  }
};

FareyStrip build_strip(const Slope& s, const Slope& t, bool compressed,
                       std::size_t budget) {
  if (s == t) throw std::invalid_argument("cutting sequence: endpoints coincide");
  FareyStrip strip;
  if (farey_adjacent(s, t)) {
    strip.vertices = {s, t};
    strip.edges = {{0, 1}};
    strip.source = 0;
    strip.target = 1;
    return strip;
  }
  Normalizer nrm = normalizer_to_infinity(s);
  Slope y = mobius(nrm.fwd, t);
  assert(y.q >= 2);

  StripBuilder builder{compressed, budget, {}, {}};
  int target = builder.walk(y.p, y.q);

  strip.vertices.reserve(builder.verts.size());
  for (const Slope& v : builder.verts) {
    strip.vertices.push_back(mobius(nrm.inv, v));
  }
  strip.edges = std::move(builder.edges);
  strip.source = 0;
  strip.target = target;
  return strip;
}

// BFS over a strip; parents prefer the smallest vertex index, which makes the
// reported geodesic deterministic.
struct StripBfs {
  std::vector<int> dist;
  std::vector<int> parent;

  explicit StripBfs(const FareyStrip& strip) {
    const int n = static_cast<int>(strip.vertices.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : strip.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    dist.assign(n, -1);
    parent.assign(n, -1);
    std::vector<int> queue;
    queue.push_back(strip.source);
    dist[strip.source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
  }
};

}  // namespace

FareyStrip cutting_strip(const Slope& s, const Slope& t, std::size_t budget) {
  return build_strip(s, t, /*compressed=*/false, budget);
}

FareyStrip cutting_strip_compressed(const Slope& s, const Slope& t) {
  return build_strip(s, t, /*compressed=*/true, 0);
}

std::vector<Slope> cutting_sequence(const Slope& s, const Slope& t,
                                    std::size_t budget) {
  return cutting_strip(s, t, budget).vertices;
}

int farey_distance(const Slope& s, const Slope& t) {
  if (s == t) return 0;
  FareyStrip strip = cutting_strip_compressed(s, t);
  StripBfs bfs(strip);
  assert(bfs.dist[strip.target] >= 0);
  return bfs.dist[strip.target];
}

FareyGeodesic farey_geodesic(const Slope& s, const Slope& t) {
  FareyGeodesic geo;
  if (s == t) {
    geo.vertices = {s};
    return geo;
  }
  FareyStrip strip = cutting_strip_compressed(s, t);
  StripBfs bfs(strip);
  std::vector<int> path;
  for (int v = strip.target; v >= 0; v = bfs.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  geo.vertices.reserve(path.size());
  for (int v : path) geo.vertices.push_back(strip.vertices[v]);
  return geo;
}

// ---------------------------------------------------------------------------
// Box BFS oracle.

namespace {

void ext_gcd64(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  // a*x + b*y = gcd(a,b); callers only use coprime inputs.
  std::int64_t old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
}

}  // namespace

FareyBoxBfs::FareyBoxBfs(long bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("FareyBoxBfs: bound must be >= 1");
  dist_.assign(static_cast<std::size_t>(bound_ + 1) * (2 * bound_ + 1), -1);
}

long FareyBoxBfs::index_of(const Slope& s) const {
  if (s.p < -Int(bound_) || s.p > Int(bound_) || s.q > Int(bound_)) return -1;
  long p = s.p.convert_to<long>();
  long q = s.q.convert_to<long>();
  return q * (2 * bound_ + 1) + (p + bound_);
}

const std::vector<int>& FareyBoxBfs::run(const Slope& source) {
  const long N = bound_;
  const long width = 2 * N + 1;
  std::fill(dist_.begin(), dist_.end(), -1);
  long src = index_of(source);
  if (src < 0) throw std::invalid_argument("FareyBoxBfs: source outside the box");
  queue_.clear();
  queue_.push_back(src);
  dist_[src] = 0;

  for (std::size_t head = 0; head < queue_.size(); ++head) {
    long cur = queue_[head];
    long q = cur / width;
    long p = cur % width - N;
    int dnext = dist_[cur] + 1;
    auto visit = [&](long u, long v) {
      long idx = v * width + (u + N);
      if (dist_[idx] < 0) {
        dist_[idx] = dnext;
        queue_.push_back(idx);
      }
    };
    if (q == 0) {
      // infinity: neighbors are the integers t/1
      for (long t = -N; t <= N; ++t) visit(t, 1);
      continue;
    }
    if (q == 1) visit(1, 0);
    std::int64_t x, y;
    ext_gcd64(p, q, x, y);  // p*x + q*y = 1
    // p*v - q*u = sign has solutions (u, v) = sign*(-y, x) + t*(p, q)
    for (int sign : {1, -1}) {
      std::int64_t u0 = -sign * y;
      std::int64_t v0 = sign * x;
      // 1 <= v0 + t*q <= N
      std::int64_t t_lo = v0 > 1 ? -((v0 - 1) / q) : (1 - v0 + q - 1) / q;
      std::int64_t t_hi = (N - v0) >= 0 ? (N - v0) / q : -((v0 - N + q - 1) / q);
      for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        std::int64_t u = u0 + t * p;
        if (u < -N || u > N) continue;
        visit(u, v0 + t * q);
      }
    }
  }
  return dist_;
}

BfsOracleResult bfs_oracle(const Slope& s, const Slope& t, long bound) {
  auto check_inside = [&](const Slope& v) {
    if (v.q > Int(bound) || abs(v.p) > Int(bound)) {
      throw std::invalid_argument("bfs_oracle: slope outside the box for bound " +
                                  std::to_string(bound));
    }
  };
  check_inside(s);
  check_inside(t);
  FareyBoxBfs box(bound);
  const std::vector<int>& dist = box.run(s);
  int d = dist[box.index_of(t)];
  BfsOracleResult res;
  res.bound = bound;
  if (d >= 0) res.distance = d;
  return res;
}

int relative_length(const GroupElement& g) {
  return farey_distance(base_slope(), mobius(g, base_slope()));
}

}  // namespace curvewalk
