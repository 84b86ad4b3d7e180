#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "curvewalk/farey.hpp"
#include "curvewalk/group_element.hpp"
#include "curvewalk/slope.hpp"
#include "curvewalk/word_metric.hpp"

using namespace curvewalk;

namespace {

Slope S(long p, long q) { return reduce(Int(p), Int(q)); }

std::vector<Slope> random_slopes(std::mt19937_64& rng, int count, int box) {
  std::vector<Slope> out;
  while (static_cast<int>(out.size()) < count) {
    long p = static_cast<long>(rng() % (2 * box + 1)) - box;
    long q = static_cast<long>(rng() % (box + 1));
    if (p == 0 && q == 0) continue;
    out.push_back(S(p, q));
  }
  return out;
}

GroupElement random_word(std::mt19937_64& rng, int len) {
  GroupElement g;
  const GroupElement gens[4] = {gen_L(), gen_R(), gen_L().inverse(), gen_R().inverse()};
  for (int i = 0; i < len; ++i) g = g * gens[rng() % 4];
  return g;
}

// Independent pivot oracle for targets of the vertical geodesic from 1/0:
// enumerate the tessellation triangles on small slopes and keep those whose
// real span straddles the target.
std::set<Slope> pivot_oracle_from_infinity(const Slope& target, int box) {
  std::vector<Slope> verts;
  for (long q = 0; q <= box; ++q) {
    for (long p = -box; p <= box; ++p) {
      if (p == 0 && q == 0) continue;
      Slope s = S(p, q);
      if (s.p == p && s.q == q) verts.push_back(s);
    }
  }
  auto less_than = [](const Slope& a, const Slope& b) {
    return a.p * b.q < b.p * a.q;  // finite slopes only
  };
  std::set<Slope> pivots;
  std::set<std::vector<Slope>> seen;
  auto consider = [&](const Slope& a, const Slope& b, const Slope& c) {
    std::vector<Slope> key{a, b, c};
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    if (a.is_infinity() || b.is_infinity() || c.is_infinity()) {
      // fan triangle (k, k+1, infinity)
      const Slope& u = a.is_infinity() ? b : a;
      const Slope& v = c.is_infinity() ? (a.is_infinity() ? c : b) : c;
      const Slope& lo = less_than(u, v) ? u : v;
      const Slope& hi = less_than(u, v) ? v : u;
      if (less_than(lo, target) && less_than(target, hi)) {
        pivots.insert(Slope{1, 0});
        pivots.insert(lo);
        pivots.insert(hi);
      }
      return;
    }
    const Slope* lo = &a;
    const Slope* hi = &a;
    for (const Slope* s : {&b, &c}) {
      if (less_than(*s, *lo)) lo = s;
      if (less_than(*hi, *s)) hi = s;
    }
    if (less_than(*lo, target) && less_than(target, *hi)) {
      pivots.insert(a);
      pivots.insert(b);
      pivots.insert(c);
    }
  };
  // each Farey edge bounds exactly two triangles, completed by u+v and u-v
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Slope &u = verts[i], &v = verts[j];
      if (intersection_number(u, v) != 1) continue;
      consider(u, v, reduce(u.p + v.p, u.q + v.q));
      if (u.p != v.p || u.q != v.q) {
        Int wp = u.p - v.p, wq = u.q - v.q;
        if (!(wp == 0 && wq == 0)) consider(u, v, reduce(wp, wq));
      }
    }
  }
  return pivots;
}

int induced_subgraph_distance(const FareyStrip& strip) {
  const int n = static_cast<int>(strip.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (intersection_number(strip.vertices[i], strip.vertices[j]) == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::vector<int> dist(n, -1), queue{strip.source};
  dist[strip.source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int v : adj[queue[head]]) {
      if (dist[v] < 0) {
        dist[v] = dist[queue[head]] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist[strip.target];
}

}  // namespace

TEST_CASE("reduce canonicalizes") {
  CHECK(S(2, 4) == S(1, 2));
  CHECK(S(3, 0) == Slope{1, 0});
  CHECK(S(0, -5) == S(0, 1));
  CHECK(S(-2, -4) == S(1, 2));
  CHECK(S(2, -4) == S(-1, 2));
  CHECK_THROWS_AS(reduce(Int(0), Int(0)), std::invalid_argument);
}

TEST_CASE("intersection number") {
  CHECK(intersection_number(S(1, 0), S(5, 3)) == 3);
  CHECK(intersection_number(S(0, 1), S(1, 1)) == 1);
  CHECK(intersection_number(S(7, 3), S(7, 3)) == 0);

  std::mt19937_64 rng(7);
  for (const Slope& s : random_slopes(rng, 50, 30)) {
    for (const Slope& t : random_slopes(rng, 4, 30)) {
      CHECK(intersection_number(s, t) == intersection_number(t, s));
      CHECK((intersection_number(s, t) == 0) == (s == t));
    }
  }
}

TEST_CASE("mobius action") {
  CHECK(mobius(gen_R(), S(0, 1)) == S(1, 1));
  CHECK(mobius(GroupElement(2, 1, 1, 1), S(1, 0)) == S(2, 1));
  CHECK(mobius(GroupElement::identity(), S(5, 8)) == S(5, 8));

  // graph automorphism: intersection numbers are preserved
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    GroupElement g = random_word(rng, 8);
    Slope s = random_slopes(rng, 1, 20)[0];
    Slope t = random_slopes(rng, 1, 20)[0];
    CHECK(intersection_number(mobius(g, s), mobius(g, t)) == intersection_number(s, t));
  }
}

TEST_CASE("group element arithmetic and serialization") {
  CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    GroupElement g = random_word(rng, 10);
    GroupElement h = random_word(rng, 10);
    GroupElement k = random_word(rng, 10);
    CHECK((g * h) * k == g * (h * k));
    CHECK(g * g.inverse() == GroupElement::identity());
    CHECK(parse_group_element(to_string(g)) == g);
  }
  CHECK(parse_group_element("[[1, 1], [0, 1]]") == gen_R());
  Slope s = S(-17, 12);
  CHECK(parse_slope(to_string(s)) == s);
  CHECK(to_string(Slope{1, 0}) == "1/0");
}

TEST_CASE("cutting sequence basics") {
  CHECK(cutting_sequence(S(1, 0), S(0, 1)) == std::vector<Slope>{S(1, 0), S(0, 1)});
  CHECK_THROWS_AS(cutting_sequence(S(1, 2), S(1, 2)), std::invalid_argument);

  auto seq = cutting_sequence(S(1, 0), S(1, 2));
  CHECK(seq.front() == S(1, 0));
  CHECK(seq.back() == S(1, 2));
  CHECK(std::count(seq.begin(), seq.end(), S(0, 1)) == 1);
  CHECK(std::count(seq.begin(), seq.end(), S(1, 1)) == 1);
}

TEST_CASE("cutting sequence matches the crossed-triangle oracle") {
  const std::pair<long, long> cases[] = {{1, 2}, {5, 8}, {-8, 5}, {3, 7}, {7, 12}, {-5, 12}};
  for (auto [p, q] : cases) {
    Slope t = S(p, q);
    auto seq = cutting_sequence(S(1, 0), t);
    std::set<Slope> got(seq.begin(), seq.end());
    std::set<Slope> expected = pivot_oracle_from_infinity(t, 26);
    CHECK(got == expected);
  }
}

TEST_CASE("cutting sequences are direction independent as sets") {
  std::mt19937_64 rng(43);
  auto slopes = random_slopes(rng, 25, 40);
  for (int rep = 0; rep < 40; ++rep) {
    const Slope &s = slopes[rng() % slopes.size()], &t = slopes[rng() % slopes.size()];
    if (s == t) continue;
    auto a = cutting_sequence(s, t);
    auto b = cutting_sequence(t, s);
    CHECK(std::set<Slope>(a.begin(), a.end()) == std::set<Slope>(b.begin(), b.end()));
  }
}

TEST_CASE("farey distance examples") {
  CHECK(farey_distance(S(5, 7), S(5, 7)) == 0);
  for (long k = -4; k <= 4; ++k) CHECK(farey_distance(S(1, 0), S(k, 1)) == 1);
  CHECK(farey_distance(S(1, 0), S(1, 2)) == 2);
  // explicit path infinity, 0/1, 1/2
  auto geo = farey_geodesic(S(1, 0), S(1, 2));
  CHECK(geo.length() == 2);
  CHECK(geo.vertices.front() == S(1, 0));
  CHECK(geo.vertices.back() == S(1, 2));
  CHECK(farey_distance(S(0, 1), S(5, 8)) == 3);
}

TEST_CASE("farey distance is a metric and matches the box oracle") {
  std::mt19937_64 rng(23);
  auto slopes = random_slopes(rng, 40, 24);
  // oracle with stability across two bounds
  FareyBoxBfs box_small(150), box_big(300);
  for (int i = 0; i < 12; ++i) {
    const auto& dist_small = box_small.run(slopes[i]);
    std::vector<int> small_copy(dist_small);
    const auto& dist_big = box_big.run(slopes[i]);
    for (int j = 0; j < 40; ++j) {
      int ds = small_copy[box_small.index_of(slopes[j])];
      int db = dist_big[box_big.index_of(slopes[j])];
      REQUIRE(ds >= 0);
      if (ds == db) {  // stable oracle value
        CHECK(farey_distance(slopes[i], slopes[j]) == ds);
      }
    }
  }
  // metric axioms on a sample
  for (int rep = 0; rep < 60; ++rep) {
    const Slope &a = slopes[rng() % slopes.size()], &b = slopes[rng() % slopes.size()],
                &c = slopes[rng() % slopes.size()];
    int dab = farey_distance(a, b);
    CHECK(dab == farey_distance(b, a));
    CHECK((dab == 0) == (a == b));
    CHECK((dab == 1) == (intersection_number(a, b) == 1));
    CHECK(dab <= farey_distance(a, c) + farey_distance(c, b));
  }
}

TEST_CASE("compressed strip agrees with full strip and induced subgraph") {
  std::mt19937_64 rng(37);
  auto slopes = random_slopes(rng, 30, 40);
  for (int rep = 0; rep < 60; ++rep) {
    const Slope &s = slopes[rng() % slopes.size()], &t = slopes[rng() % slopes.size()];
    if (s == t) continue;
    FareyStrip full = cutting_strip(s, t);
    FareyStrip comp = cutting_strip_compressed(s, t);
    int d = farey_distance(s, t);
    CHECK(induced_subgraph_distance(full) == d);
    CHECK(induced_subgraph_distance(comp) == d);
  }
  // a target with a large partial quotient exercises fan compression
  Slope s = S(1, 0), t = S(1, 1000000);
  CHECK(farey_distance(s, t) == 2);
  FareyStrip comp = cutting_strip_compressed(s, t);
  CHECK(comp.vertices.size() < 20);
  CHECK_THROWS_AS(cutting_strip(s, t, 1000), BudgetExceeded);
}

TEST_CASE("farey geodesics are genuine paths") {
  std::mt19937_64 rng(41);
  auto slopes = random_slopes(rng, 30, 30);
  for (int rep = 0; rep < 40; ++rep) {
    const Slope &s = slopes[rng() % slopes.size()], &t = slopes[rng() % slopes.size()];
    auto geo = farey_geodesic(s, t);
    CHECK(geo.length() == farey_distance(s, t));
    CHECK(geo.vertices.front() == s);
    CHECK(geo.vertices.back() == t);
    for (std::size_t i = 0; i + 1 < geo.vertices.size(); ++i) {
      CHECK(intersection_number(geo.vertices[i], geo.vertices[i + 1]) == 1);
    }
  }
}

TEST_CASE("farey distance is invariant under the group action") {
  std::mt19937_64 rng(61);
  auto slopes = random_slopes(rng, 20, 15);
  for (int rep = 0; rep < 30; ++rep) {
    GroupElement g = random_word(rng, 1 + static_cast<int>(rng() % 8));
    const Slope &s = slopes[rng() % slopes.size()], &t = slopes[rng() % slopes.size()];
    CHECK(farey_distance(mobius(g, s), mobius(g, t)) == farey_distance(s, t));
  }
}

TEST_CASE("bfs oracle examples") {
  CHECK(bfs_oracle(S(1, 0), S(2, 1), 10).distance == 1);
  CHECK(bfs_oracle(S(1, 0), S(1, 2), 10).distance == 2);
  auto a = bfs_oracle(S(0, 1), S(5, 8), 200);
  auto b = bfs_oracle(S(0, 1), S(5, 8), 400);
  REQUIRE(a.distance.has_value());
  CHECK(a.distance == b.distance);
  CHECK(*a.distance == 3);
  CHECK_THROWS_AS(bfs_oracle(S(1, 0), S(25, 2), 12), std::invalid_argument);
}

TEST_CASE("word length") {
  std::vector<GroupElement> gens = {gen_L(), gen_R()};
  WordMetric metric(gens, 12);
  CHECK(metric.length(GroupElement::identity()) == 0);
  CHECK(metric.length(gen_L()) == 1);
  CHECK(metric.length(gen_R().inverse()) == 1);
  CHECK(metric.length(GroupElement(2, 1, 1, 1)) == 2);  // R*L, and no shorter word

  // far beyond the radius: failure is reported, not fabricated
  GroupElement big = GroupElement(2, 1, 1, 1).power(40);
  CHECK(!metric.length(big).has_value());
}

TEST_CASE("relative length") {
  CHECK(relative_length(GroupElement::identity()) == 0);
  for (int k = 1; k <= 6; ++k) CHECK(relative_length(gen_R().power(k)) == 0);
  CHECK(relative_length(gen_L()) == 1);

  // distance non-increasing into the relative proxy
  std::mt19937_64 rng(53);
  std::vector<GroupElement> gens = {gen_L(), gen_R()};
  WordMetric metric(gens, 12);
  for (int rep = 0; rep < 25; ++rep) {
    GroupElement g = random_word(rng, 1 + static_cast<int>(rng() % 8));
    auto wl = metric.length(g);
    REQUIRE(wl.has_value());
    CHECK(relative_length(g) <= *wl);
  }
}
