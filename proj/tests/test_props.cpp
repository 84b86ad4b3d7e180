#include <doctest.h>

#include <random>

#include "curvewalk/graph_gen.hpp"
#include "curvewalk/propositions.hpp"

using namespace curvewalk;

namespace {

FiniteSpace path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return FiniteSpace::from_edges(n, edges);
}

long long total_violations(const std::vector<PropositionReport>& reports) {
  long long total = 0;
  for (const auto& r : reports) total += r.violations;
  return total;
}

const PropositionReport& find(const std::vector<PropositionReport>& reports,
                              const std::string& name) {
  for (const auto& r : reports) {
    if (r.proposition == name) return r;
  }
  REQUIRE(false);
  return reports.front();
}

}  // namespace

TEST_CASE("eleven verifiers, all reported") {
  auto reports = verify_propositions(path_graph(5));
  REQUIRE(reports.size() == 11);
  for (const char* name : {"bounded", "projection", "npp", "double", "stability", "close",
                           "half", "fellow", "disjoint", "nested", "coarse"}) {
    const auto& r = find(reports, name);
    CHECK(r.violations == 0);
    CHECK(r.delta == 0.0);
  }
}

TEST_CASE("path graph has non-vacuous content at delta zero") {
  auto reports = verify_propositions(path_graph(11));
  CHECK(total_violations(reports) == 0);
  // the half verifier covers the x=0, y=10, z=7 instance among others
  CHECK(find(reports, "half").checked > 0);
  CHECK(find(reports, "nested").checked > 0);
  CHECK(find(reports, "coarse").checked > 0);
}

TEST_CASE("disjoint has content when geodesics pass the basepoint") {
  // three legs of length 4 joined at the basepoint
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int leg = 0; leg < 3; ++leg) {
    int prev = 0;
    for (int i = 0; i < 4; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  FiniteSpace spider = FiniteSpace::from_edges(next, edges);
  auto reports = verify_propositions(spider);
  CHECK(total_violations(reports) == 0);
  CHECK(find(reports, "disjoint").checked > 0);
  CHECK(find(reports, "fellow").checked > 0);
}

TEST_CASE("trees pass exhaustively") {
  for (int n : {4, 6, 8}) {
    for (const FiniteSpace& t : all_trees(n)) {
      auto reports = verify_propositions(t);
      CHECK(total_violations(reports) == 0);
      CHECK(find(reports, "npp").checked > 0);
    }
  }
}

TEST_CASE("random connected graphs pass") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    int n = 10 + static_cast<int>(rng() % 21);
    double p = 0.12 + 0.25 * ((rng() >> 11) * 0x1.0p-53);
    FiniteSpace g = random_connected_graph(n, p, rng());
    auto reports = verify_propositions(g);
    if (total_violations(reports) != 0) {
      for (const auto& r : reports) {
        if (r.violations) {
          MESSAGE(r.proposition, " delta=", r.delta, " witness: ", r.witness);
        }
      }
    }
    CHECK(total_violations(reports) == 0);
  }
}

TEST_CASE("farey ball passes with sampling") {
  FareyBall ball = farey_ball(12);
  VerifyOptions opt;
  opt.samples = 20000;
  auto reports = verify_propositions(ball.space, opt);
  CHECK(total_violations(reports) == 0);
  CHECK(find(reports, "npp").checked > 0);
  CHECK(find(reports, "half").checked > 0);
}

TEST_CASE("sampling is deterministic in the seed") {
  FareyBall ball = farey_ball(11);
  VerifyOptions opt;
  opt.samples = 5000;
  auto a = verify_propositions(ball.space, opt);
  auto b = verify_propositions(ball.space, opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].checked == b[i].checked);
    CHECK(a[i].violations == b[i].violations);
  }
}

TEST_CASE("jsonl record shape") {
  auto reports = verify_propositions(path_graph(4));
  std::string line = report_jsonl_line("path4", reports.front());
  CHECK(line.find("\"space_id\":\"path4\"") != std::string::npos);
  CHECK(line.find("\"proposition\":\"bounded\"") != std::string::npos);
  CHECK(line.find("\"violations\":0") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}
