#include "curvewalk/propositions.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

namespace curvewalk {

namespace {

// All distance comparisons carry doubled values so that half-integer deltas
// stay exact: td below is 2*delta, and an inequality like
// d <= x/2 + 3*delta is evaluated as 2*d <= x + 3*td.
struct Ctx {
  const FiniteSpace& S;
  int td;  // doubled working delta
  std::mt19937_64 rng;
  bool sampled;
  long long samples;

  int n() const { return S.size(); }
  int d(int x, int y) const { return S.distance(x, y); }

  int uniform(int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); }

  std::vector<int> argmin_on(int z, const std::vector<int>& set) const {
    return S.nearest_point_projection(z, set);
  }

  std::vector<std::uint8_t> halfspace_mask(int a, int b) const {
    std::vector<std::uint8_t> mask(n(), 0);
    for (int v = 0; v < n(); ++v) {
      if (d(v, b) <= d(v, a)) mask[v] = 1;
    }
    return mask;
  }
};

struct Recorder {
  PropositionReport* rep;
  void instance() { ++rep->checked; }
  template <typename F>
  void violation(F&& describe) {
    ++rep->violations;
    if (rep->witness.empty()) rep->witness = describe();
  }
};

std::string fmt(std::initializer_list<std::pair<const char*, long long>> kv,
                const char* message) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << "=" << v << " ";
  os << ": " << message;
  return os.str();
}

// --- bounded: a K-neighbourhood of a set X and of a shortest geodesic from z
// to X meet only within 3K of the foot point. The K-sweep collapses: for a
// witness q the binding case is K = max(d(q,X), d(q,[z,p])).
void check_bounded(Ctx& c, Recorder& r, int z, int u, int v,
                   const std::vector<int>& dX) {
  const auto& X = c.S.interval(u, v);
  for (int p : c.argmin_on(z, X)) {
    r.instance();
    std::vector<int> G = c.S.geodesic(z, p);
    for (int q = 0; q < c.n(); ++q) {
      int m = std::max(dX[q], c.S.distance_to_set(q, G));
      if (c.d(q, p) > 3 * m) {
        r.violation([&] {
          return fmt({{"z", z}, {"u", u}, {"v", v}, {"p", p}, {"q", q}, {"K", m}},
                     "d(q,p) > 3K");
        });
      }
    }
  }
}

void run_bounded(Ctx& c, Recorder& r) {
  if (!c.sampled) {
    for (int u = 0; u < c.n(); ++u) {
      for (int v = u; v < c.n(); ++v) {
        const auto& X = c.S.interval(u, v);
        std::vector<int> dX(c.n());
        for (int q = 0; q < c.n(); ++q) dX[q] = c.S.distance_to_set(q, X);
        for (int z = 0; z < c.n(); ++z) check_bounded(c, r, z, u, v, dX);
      }
    }
    return;
  }
  for (long long s = 0; s < c.samples; ++s) {
    int u = c.uniform(c.n()), v = c.uniform(c.n()), z = c.uniform(c.n()),
        q = c.uniform(c.n());
    const auto& X = c.S.interval(u, v);
    int dqX = c.S.distance_to_set(q, X);
    for (int p : c.argmin_on(z, X)) {
      r.instance();
      std::vector<int> G = c.S.geodesic(z, p);
      int m = std::max(dqX, c.S.distance_to_set(q, G));
      if (c.d(q, p) > 3 * m) {
        r.violation([&] {
          return fmt({{"z", z}, {"u", u}, {"v", v}, {"p", p}, {"q", q}, {"K", m}},
                     "d(q,p) > 3K");
        });
      }
    }
  }
}

// --- projection: travelling via the foot point p of z on [x,y] is within
// 6*delta of optimal; the canonical geodesic [x,z] passes within 3*delta of
// p; and [x,p] + [p,z] stays within 3*delta of I(x,z).
void check_projection(Ctx& c, Recorder& r, int x, int y, int z) {
  std::vector<int> G = c.S.geodesic(x, y);
  for (int p : c.argmin_on(z, G)) {
    r.instance();
    if (c.d(x, p) + c.d(p, z) - c.d(x, z) > 3 * c.td) {
      r.violation([&] {
        return fmt({{"x", x}, {"y", y}, {"z", z}, {"p", p}}, "detour via p exceeds 6*delta");
      });
      continue;
    }
    std::vector<int> Gxz = c.S.geodesic(x, z);
    if (2 * c.S.distance_to_set(p, Gxz) > 3 * c.td) {
      r.violation([&] {
        return fmt({{"x", x}, {"y", y}, {"z", z}, {"p", p}},
                   "geodesic [x,z] misses the 3*delta ball around p");
      });
      continue;
    }
    const auto& Ixz = c.S.interval(x, z);
    std::vector<int> legs = c.S.geodesic(x, p);
    std::vector<int> leg2 = c.S.geodesic(p, z);
    legs.insert(legs.end(), leg2.begin() + 1, leg2.end());
    for (int w : legs) {
      if (2 * c.S.distance_to_set(w, Ixz) > 3 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"z", z}, {"p", p}, {"w", w}},
                     "[x,p]+[p,z] leaves the 3*delta neighbourhood of I(x,z)");
        });
        break;
      }
    }
  }
}

// --- npp: the set of nearest points on a geodesic has diameter <= 6*delta.
void check_npp(Ctx& c, Recorder& r, int x, int y, int z) {
  std::vector<int> G = c.S.geodesic(x, y);
  std::vector<int> P = c.argmin_on(z, G);
  r.instance();
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if (c.d(P[i], P[j]) > 3 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"z", z}, {"p", P[i]}, {"q", P[j]}},
                     "projection set wider than 6*delta");
        });
      }
    }
  }
}

// --- double: feet further apart than 14*delta force the path a-p-q-b to be
// 24*delta-efficient.
void check_double(Ctx& c, Recorder& r, const std::vector<int>& G, int x, int y, int a,
                  int b) {
  std::vector<int> Pa = c.argmin_on(a, G);
  std::vector<int> Pb = c.argmin_on(b, G);
  for (int p : Pa) {
    for (int q : Pb) {
      if (c.d(p, q) <= 7 * c.td) continue;
      r.instance();
      if (c.d(a, b) < c.d(a, p) + c.d(p, q) + c.d(q, b) - 12 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"p", p}, {"q", q}},
                     "d(a,b) undercuts the projection route by more than 24*delta");
        });
      }
    }
  }
}

// --- stability: projecting to a subsegment directly, or via the full
// geodesic first, lands within K1 = 7*delta.
void check_stability(Ctx& c, Recorder& r, const std::vector<int>& G, int i, int j, int x) {
  std::vector<int> sub(G.begin() + i, G.begin() + j + 1);
  std::vector<int> rho1 = c.argmin_on(x, G);
  std::vector<int> rho2x = c.argmin_on(x, sub);
  for (int p : rho1) {
    std::vector<int> rho2p = c.argmin_on(p, sub);
    r.instance();
    for (int s : rho2x) {
      for (int t : rho2p) {
        if (2 * c.d(s, t) > 7 * c.td) {
          r.violation([&] {
            return fmt({{"a", G.front()}, {"b", G.back()}, {"c", G[i]}, {"d", G[j]},
                        {"x", x}, {"s", s}, {"t", t}},
                       "two-step projection drifts past K1 = 7*delta");
          });
        }
      }
    }
  }
}

// --- close: feet on a geodesic and on a nearby path from x to y agree to
// 3K + 6*delta, where K is the path's actual excursion from I(x,y).
void check_close(Ctx& c, Recorder& r, int x, int y, int m, int z,
                 const std::vector<int>* dI) {
  std::vector<int> gamma = c.S.geodesic(x, m);
  std::vector<int> tail = c.S.geodesic(m, y);
  gamma.insert(gamma.end(), tail.begin() + 1, tail.end());
  int K = 0;
  for (int w : gamma) {
    K = std::max(K, dI ? (*dI)[w] : c.S.distance_to_set(w, c.S.interval(x, y)));
  }
  std::vector<int> G = c.S.geodesic(x, y);
  for (int p : c.argmin_on(z, G)) {
    for (int q : c.argmin_on(z, gamma)) {
      r.instance();
      if (c.d(p, q) > 3 * K + 3 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"via", m}, {"z", z}, {"p", p}, {"q", q}, {"K", K}},
                     "feet differ by more than 3K + 6*delta");
        });
      }
    }
  }
}

// --- half: members of H(x,y) project to the y-half of [x,y] (up to
// 3*delta), and conversely a foot point well inside the y-half certifies
// membership.
void check_half(Ctx& c, Recorder& r, int x, int y, int z) {
  std::vector<int> G = c.S.geodesic(x, y);
  bool in_half = c.d(z, y) <= c.d(z, x);
  for (int p : c.argmin_on(z, G)) {
    if (in_half) {
      r.instance();
      if (2 * c.d(y, p) > c.d(x, y) + 3 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"z", z}, {"p", p}},
                     "member of H(x,y) projects past the midpoint margin");
        });
      }
    }
    if (2 * c.d(y, p) <= c.d(x, y) - 3 * c.td) {
      r.instance();
      if (!in_half) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"z", z}, {"p", p}},
                     "foot deep in the y-half but z escapes H(x,y)");
        });
      }
    }
  }
}

// --- fellow: when [x,z] fellow-travels [x,y] past the midpoint by K2, the
// halfspace H(y,x) projects onto [x,z] within K3 of the first half. The
// margin must be strict: the argument routes through the double-projection
// bound, whose separation vanishes exactly at the threshold.
void check_fellow(Ctx& c, Recorder& r, int x, int y, int z) {
  std::vector<int> G = c.S.geodesic(x, y);
  bool hypothesis = false;
  for (int p : c.argmin_on(z, G)) {
    if (2 * c.d(p, x) > c.d(x, y) + 27 * c.td) hypothesis = true;
  }
  if (!hypothesis) return;
  r.instance();
  std::vector<int> Gxz = c.S.geodesic(x, z);
  for (int a = 0; a < c.n(); ++a) {
    if (c.d(a, x) > c.d(a, y)) continue;  // a must lie in H(y,x)
    for (int rr : c.argmin_on(a, Gxz)) {
      if (2 * c.d(rr, x) > c.d(x, y) + 18 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"y", y}, {"z", z}, {"a", a}, {"r", rr}},
                     "H(y,x) projects onto [x,z] beyond K3");
        });
      }
    }
  }
}

// --- disjoint: two halfspaces based far out along [x,y], with the geodesic
// passing near the basepoint, cannot both meet a third far halfspace.
// Strict thresholds, as for fellow: the proof separates projections by
// 14*delta only when the margins are positive.
void check_disjoint(Ctx& c, Recorder& r, const std::vector<std::vector<std::uint8_t>>& H1,
                    int x, int y, int z) {
  std::vector<int> G = c.S.geodesic(x, y);
  int D = c.S.distance_to_set(0, G);
  if (2 * c.d(0, x) <= 4 * D + 114 * c.td) return;
  if (2 * c.d(0, y) <= 4 * D + 114 * c.td) return;
  if (2 * c.d(0, z) <= 4 * D + 24 * c.td) return;
  r.instance();
  bool meets_x = false, meets_y = false;
  for (int v = 0; v < c.n(); ++v) {
    if (H1[z][v] && H1[x][v]) meets_x = true;
    if (H1[z][v] && H1[y][v]) meets_y = true;
    if (meets_x && meets_y) break;
  }
  if (meets_x && meets_y) {
    r.violation([&] {
      return fmt({{"x", x}, {"y", y}, {"z", z}, {"d_base", D}},
                 "H(1,z) meets both H(1,x) and H(1,y)");
    });
  }
}

// --- nested: a far halfspace H(1,x) sits inside H(1,y) for y on [1,x] at
// the prescribed depth, and each side sees the other inside a halfspace
// based 2A apart. The depth is rounded down to the nearest vertex.
void check_nested(Ctx& c, Recorder& r, const std::vector<std::vector<std::uint8_t>>& H1,
                  int x, int A) {
  int dx = c.d(0, x);
  if (2 * dx < 230 * c.td + 8 * A) return;
  long long two_target = 2LL * dx - 224LL * c.td - 4LL * A;
  if (two_target < 0) return;
  std::vector<int> G = c.S.geodesic(0, x);
  int ky = static_cast<int>(two_target / 2);
  if (ky >= static_cast<int>(G.size())) ky = static_cast<int>(G.size()) - 1;
  int y = G[ky];
  r.instance();

  const auto& Hx = H1[x];
  const auto& Hy = H1[y];
  for (int v = 0; v < c.n(); ++v) {
    if (Hx[v] && !Hy[v]) {
      r.violation([&] {
        return fmt({{"x", x}, {"A", A}, {"y", y}, {"v", v}}, "H(1,x) escapes H(1,y)");
      });
      return;
    }
  }

  // For a in H(y,1), some b in H(1,x) has d(a,b) >= 2A and H(1,x) in H(a,b).
  for (int a = 0; a < c.n(); ++a) {
    if (c.d(a, 0) > c.d(a, y)) continue;
    bool found = false;
    for (int b = 0; b < c.n() && !found; ++b) {
      if (!Hx[b] || c.d(a, b) < 2 * A) continue;
      bool contains = true;
      for (int v = 0; v < c.n(); ++v) {
        if (Hx[v] && c.d(v, b) > c.d(v, a)) {
          contains = false;
          break;
        }
      }
      found = contains;
    }
    if (!found) {
      r.violation([&] {
        return fmt({{"x", x}, {"A", A}, {"y", y}, {"a", a}},
                   "no halfspace H(a,b) with b in H(1,x) swallows H(1,x)");
      });
      return;
    }
  }

  // Symmetrically for b in H(1,x) against H(y,1).
  for (int b = 0; b < c.n(); ++b) {
    if (!Hx[b]) continue;
    bool found = false;
    for (int a = 0; a < c.n() && !found; ++a) {
      if (c.d(a, 0) > c.d(a, y) || c.d(a, b) < 2 * A) continue;
      bool contains = true;
      for (int v = 0; v < c.n(); ++v) {
        if (c.d(v, 0) <= c.d(v, y) && c.d(v, a) > c.d(v, b)) {
          contains = false;
          break;
        }
      }
      found = contains;
    }
    if (!found) {
      r.violation([&] {
        return fmt({{"x", x}, {"A", A}, {"y", y}, {"b", b}},
                   "no halfspace H(b,a) with a in H(y,1) swallows H(y,1)");
      });
      return;
    }
  }
}

// --- coarse: members of the slack form {z : d(z,x) <= d(z,1) + C} project
// within (d(1,x) + C)/2 + 3*delta of x and land in H(1,y) at depth C +
// 9*delta (rounded down to a vertex).
void check_coarse(Ctx& c, Recorder& r, int x, int C) {
  int dx = c.d(0, x);
  if (2 * C > 2 * dx - 9 * c.td) return;
  std::vector<int> G = c.S.geodesic(0, x);
  long long two_target = 2LL * dx - 2LL * C - 9LL * c.td;
  int ky = static_cast<int>(two_target / 2);
  if (ky < 0) ky = 0;
  if (ky >= static_cast<int>(G.size())) ky = static_cast<int>(G.size()) - 1;
  int y = G[ky];
  for (int z = 0; z < c.n(); ++z) {
    if (c.d(z, x) > c.d(z, 0) + C) continue;
    r.instance();
    for (int p : c.argmin_on(z, G)) {
      if (2 * c.d(p, x) > dx + C + 3 * c.td) {
        r.violation([&] {
          return fmt({{"x", x}, {"C", C}, {"z", z}, {"p", p}},
                     "coarse member projects past (d(1,x)+C)/2 + 3*delta");
        });
      }
    }
    if (c.d(z, y) > c.d(z, 0)) {
      r.violation([&] {
        return fmt({{"x", x}, {"C", C}, {"z", z}, {"y", y}},
                   "coarse halfspace escapes H(1,y)");
      });
    }
  }
}

}  // namespace

std::vector<PropositionReport> verify_propositions(const FiniteSpace& space,
                                                   const VerifyOptions& options) {
  Ctx c{space, working_delta_doubled(space), std::mt19937_64(options.seed),
        space.size() > options.sample_threshold, options.samples};
  const int n = c.n();

  // H(1,v) for every v, against the basepoint 0.
  std::vector<std::vector<std::uint8_t>> H1(n);
  for (int v = 0; v < n; ++v) H1[v] = c.halfspace_mask(0, v);

  std::vector<PropositionReport> out;
  auto report = [&](const char* name) {
    out.push_back(PropositionReport{name, c.td / 2.0, 0, 0, ""});
    return Recorder{&out.back()};
  };

  auto distinct3 = [&](auto&& body) {
    if (!c.sampled) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            if (x != y) body(x, y, z);
          }
    } else {
      for (long long s = 0; s < c.samples; ++s) {
        int x = c.uniform(n), y = c.uniform(n), z = c.uniform(n);
        if (x != y) body(x, y, z);
      }
    }
  };

  {
    Recorder r = report("bounded");
    run_bounded(c, r);
  }
  {
    Recorder r = report("projection");
    distinct3([&](int x, int y, int z) { check_projection(c, r, x, y, z); });
  }
  {
    Recorder r = report("npp");
    distinct3([&](int x, int y, int z) { check_npp(c, r, x, y, z); });
  }
  {
    Recorder r = report("double");
    if (!c.sampled) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          std::vector<int> G = space.geodesic(x, y);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) check_double(c, r, G, x, y, a, b);
        }
      }
    } else {
      for (long long s = 0; s < c.samples; ++s) {
        int x = c.uniform(n), y = c.uniform(n), a = c.uniform(n), b = c.uniform(n);
        if (x == y) continue;
        std::vector<int> G = space.geodesic(x, y);
        check_double(c, r, G, x, y, a, b);
      }
    }
  }
  {
    Recorder r = report("stability");
    if (!c.sampled) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          std::vector<int> G = space.geodesic(a, b);
          int L = static_cast<int>(G.size());
          for (int i = 0; i < L; ++i)
            for (int j = i; j < L; ++j)
              for (int x = 0; x < n; ++x) check_stability(c, r, G, i, j, x);
        }
      }
    } else {
      for (long long s = 0; s < c.samples; ++s) {
        int a = c.uniform(n), b = c.uniform(n), x = c.uniform(n);
        if (a == b) continue;
        std::vector<int> G = space.geodesic(a, b);
        int L = static_cast<int>(G.size());
        int i = c.uniform(L), j = c.uniform(L);
        if (i > j) std::swap(i, j);
        check_stability(c, r, G, i, j, x);
      }
    }
  }
  {
    Recorder r = report("close");
    if (!c.sampled) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          const auto& Ixy = space.interval(x, y);
          std::vector<int> dI(n);
          for (int w = 0; w < n; ++w) dI[w] = space.distance_to_set(w, Ixy);
          for (int m = 0; m < n; ++m)
            for (int z = 0; z < n; ++z) check_close(c, r, x, y, m, z, &dI);
        }
      }
    } else {
      for (long long s = 0; s < c.samples; ++s) {
        int x = c.uniform(n), y = c.uniform(n), m = c.uniform(n), z = c.uniform(n);
        if (x == y) continue;
        check_close(c, r, x, y, m, z, nullptr);
      }
    }
  }
  {
    Recorder r = report("half");
    distinct3([&](int x, int y, int z) { check_half(c, r, x, y, z); });
  }
  {
    Recorder r = report("fellow");
    distinct3([&](int x, int y, int z) { check_fellow(c, r, x, y, z); });
  }
  {
    Recorder r = report("disjoint");
    distinct3([&](int x, int y, int z) { check_disjoint(c, r, H1, x, y, z); });
  }
  {
    Recorder r = report("nested");
    int maxA = std::max(1, space.diameter() / 2);
    if (!c.sampled) {
      for (int x = 0; x < n; ++x)
        for (int A = 1; A <= maxA; ++A) check_nested(c, r, H1, x, A);
    } else {
      for (long long s = 0; s < c.samples; ++s) {
        int x = c.uniform(n), A = 1 + c.uniform(maxA);
        check_nested(c, r, H1, x, A);
      }
    }
  }
  {
    Recorder r = report("coarse");
    int maxC = space.diameter();
    if (!c.sampled) {
      for (int x = 0; x < n; ++x)
        for (int C = 0; C <= maxC; ++C) check_coarse(c, r, x, C);
    } else {
      for (long long s = 0; s < c.samples; ++s) {
        int x = c.uniform(n), C = c.uniform(maxC + 1);
        check_coarse(c, r, x, C);
      }
    }
  }
  return out;
}

std::string report_jsonl_line(const std::string& space_id, const PropositionReport& report) {
  nlohmann::json j;
  j["space_id"] = space_id;
  j["proposition"] = report.proposition;
  j["delta"] = report.delta;
  j["checked"] = report.checked;
  j["violations"] = report.violations;
  j["witness"] = report.witness;
  return j.dump();
}

}  // namespace curvewalk
