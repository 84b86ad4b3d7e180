#include <doctest.h>

#include <cmath>
#include <map>

#include "curvewalk/convolution.hpp"
#include "curvewalk/drift.hpp"
#include "curvewalk/walk.hpp"

using namespace curvewalk;

TEST_CASE("step distribution validation and reflection") {
  CHECK_THROWS_AS(StepDistribution({}), std::invalid_argument);
  CHECK_THROWS_AS(StepDistribution({Atom{gen_L(), Rational(1, 2), "L"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepDistribution({Atom{gen_L(), Rational(3, 2), "L"},
                                    Atom{gen_R(), Rational(-1, 2), "R"}}),
                  std::invalid_argument);

  StepDistribution mu = StepDistribution::uniform_lr();
  StepDistribution twice = mu.reflected().reflected();
  for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
    CHECK(mu.atoms()[i].element == twice.atoms()[i].element);
    CHECK(mu.atoms()[i].label == twice.atoms()[i].label);
  }
  CHECK(inverse_label("a") == "a^-1");
  CHECK(inverse_label("a^-1") == "a");
}

TEST_CASE("sample paths are deterministic and respect the position law") {
  StepDistribution mu = StepDistribution::uniform_lr();
  WalkPath p1 = sample_path(mu, 50, 1234);
  WalkPath p2 = sample_path(mu, 50, 1234);
  CHECK(p1.increments == p2.increments);
  CHECK(p1.positions == p2.positions);
  WalkPath p3 = sample_path(mu, 50, 1235);
  CHECK(p1.increments != p3.increments);

  CHECK(sample_path(mu, 0, 7).positions ==
        std::vector<GroupElement>{GroupElement::identity()});
  for (int k = 1; k <= p1.length(); ++k) {
    CHECK(p1.positions[k] == p1.positions[k - 1] * p1.increments[k - 1]);
  }

  // streaming cursor draws the same increments
  WalkCursor cursor(mu, 1234);
  cursor.advance(50);
  CHECK(cursor.position() == p1.positions[50]);
}

TEST_CASE("one-step frequencies match the distribution within 4 sigma") {
  StepDistribution mu = StepDistribution::uniform_lr();
  const int trials = 100000;
  std::map<std::string, int> counts;
  for (int r = 0; r < trials; ++r) {
    WalkPath p = sample_path(mu, 1, child_seed(42, r));
    counts[p.labels[0]]++;
  }
  double expect = trials / 4.0;
  double sigma = std::sqrt(trials * 0.25 * 0.75);
  for (const Atom& a : mu.atoms()) {
    CHECK(std::abs(counts[a.label] - expect) <= 4 * sigma);
  }
}

TEST_CASE("bernoulli shift") {
  StepDistribution mu = StepDistribution::uniform_lr();
  WalkPath p = sample_path(mu, 20, 99);
  WalkPath s = shift(p);
  CHECK(s.length() == 19);
  for (int k = 0; k <= s.length(); ++k) {
    CHECK(s.positions[k] == p.positions[1].inverse() * p.positions[k + 1]);
  }
  WalkPath multi = p;
  for (int i = 0; i < 5; ++i) multi = shift(multi);
  CHECK(multi.length() == 15);
  CHECK_THROWS_AS(shift(sample_path(mu, 0, 1)), std::invalid_argument);

  // left invariance: d(1, (U^n w)_k) = d(w_n, w_{n+k})
  for (int n : {3, 7}) {
    WalkPath shifted = p;
    for (int i = 0; i < n; ++i) shifted = shift(shifted);
    for (int k : {2, 5}) {
      Slope a = mobius(shifted.positions[k], base_slope());
      Slope b = mobius(p.positions[n].inverse() * p.positions[n + k], base_slope());
      CHECK(a == b);
    }
  }
}

TEST_CASE("exact convolutions") {
  StepDistribution mu = StepDistribution::uniform_lr();
  ConvolutionTable t0 = convolution(mu, 0);
  CHECK(t0.entries.size() == 1);
  CHECK(t0.entries.at(GroupElement::identity()) == 1);

  // uniform on {L, R} only
  StepDistribution lr({Atom{gen_L(), Rational(1, 2), "L"}, Atom{gen_R(), Rational(1, 2), "R"}});
  ConvolutionTable t2 = convolution(lr, 2);
  CHECK(t2.entries.size() == 4);  // the four products are distinct matrices
  for (const auto& [g, p] : t2.entries) CHECK(p == Rational(1, 4));
  CHECK(t2.entries.at(gen_L() * gen_R()) == Rational(1, 4));

  // mass is exactly one for several n
  for (int n : {1, 2, 3, 5}) {
    CHECK(convolution(mu, n).total_mass() == 1);
  }

  // marginal consistency
  ConvolutionTable t3 = convolution(mu, 3);
  ConvolutionTable t3b = convolve_step(convolution(mu, 2), mu);
  CHECK(t3.entries == t3b.entries);

  // reflection duality: mu~^(n)(g) = mu^(n)(g^-1)
  ConvolutionTable r3 = convolution(mu.reflected(), 3);
  for (const auto& [g, p] : t3.entries) {
    CHECK(r3.entries.at(g.inverse()) == p);
  }

  CHECK_THROWS_AS(convolution(mu, 20, 1000), BudgetExceeded);
}

TEST_CASE("drift of the point mass is exactly zero") {
  StepDistribution mu = StepDistribution::point_mass_identity();
  DriftReport rep = drift_estimate(mu, Metric::FareyDisplacement, 100, 8, 5);
  CHECK(rep.l_hat == 0.0);
  DriftReport wrep = drift_estimate(mu, Metric::Word, 100, 8, 5);
  CHECK(wrep.l_hat == 0.0);
}

TEST_CASE("sanov drift approaches one half") {
  DriftReport rep =
      drift_estimate(StepDistribution::sanov(), Metric::Word, 2000, 60, 424242);
  CHECK(rep.metric == "word");
  CHECK(std::abs(rep.l_hat - 0.5) < 0.02);
  CHECK(rep.ci.lo <= rep.l_hat);
  CHECK(rep.ci.hi >= rep.l_hat);
}

TEST_CASE("farey drift is positive") {
  DriftReport rep = drift_estimate(StepDistribution::uniform_lr(),
                                   Metric::FareyDisplacement, 400, 40, 7);
  CHECK(rep.ci.lo > 0.0);
}

TEST_CASE("delta_nm monte carlo vs exact") {
  StepDistribution mu = StepDistribution::uniform_lr();
  CHECK(delta_nm(mu, 5, 0, 16, 3).estimate == 0.0);
  CHECK(delta_nm_exact(mu, 5, 0) == 0);

  Rational d0m = delta_nm_exact(mu, 0, 3);
  CHECK(d0m >= 0);

  Rational exact = delta_nm_exact(mu, 2, 2);
  DeltaEstimate mc = delta_nm(mu, 2, 2, 4000, 11);
  CHECK(std::abs(mc.estimate - exact.convert_to<double>()) <= 3 * mc.stderr_);
}

TEST_CASE("exact superadditivity-consistency of expected lengths") {
  StepDistribution mu = StepDistribution::uniform_lr();
  auto expected_length = [&](int n) {
    Rational sum = 0;
    for (const auto& [g, p] : convolution(mu, n).entries) {
      sum += p * relative_length(g);
    }
    return sum;
  };
  Rational e1 = expected_length(1), e2 = expected_length(2), e3 = expected_length(3),
           e5 = expected_length(5);
  CHECK(e3 <= e1 + e2);
  CHECK(e5 <= e2 + e3);
}

TEST_CASE("subadditivity audit finds no violations") {
  StepDistribution mu = StepDistribution::uniform_lr();
  std::vector<std::pair<int, int>> pairs = {{0, 10}, {3, 4}, {10, 10}, {15, 5}};
  for (int rep = 0; rep < 50; ++rep) {
    WalkPath p = sample_path(mu, 20, child_seed(1000, rep));
    for (const PairSlack& s : subadditivity_audit(p, Metric::FareyDisplacement, pairs)) {
      CHECK(s.slack() >= 0);
      if (s.n == 0) CHECK(s.slack() == 0);
    }
    for (const PairSlack& s : subadditivity_audit(p, Metric::Word, pairs)) {
      CHECK(s.slack() >= 0);
    }
  }
  WalkPath p = sample_path(mu, 5, 1);
  CHECK_THROWS_AS(subadditivity_audit(p, Metric::Word, {{4, 4}}), std::invalid_argument);
}

TEST_CASE("half-rate statistic") {
  HalfRateReport tiny = halfrate_statistic(2, 1, 9);
  CHECK((tiny.frequency == 0.0 || tiny.frequency == 1.0));

  HalfRateReport big = halfrate_statistic(100000, 1, 2718);
  CHECK(std::abs(big.frequency - 0.5) < 0.01);

  CHECK(halfrate_statistic(1000, 3, 5).frequency ==
        halfrate_statistic(1000, 3, 5).frequency);
}
