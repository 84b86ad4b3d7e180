#include <doctest.h>

#include <cmath>

#include "curvewalk/measure.hpp"

using namespace curvewalk;

namespace {
const GroupElement kAxis(2, 1, 1, 1);  // hyperbolic, trace 3
}

TEST_CASE("halfspace query membership and covering") {
  HalfspaceQuery toward = HalfspaceQuery::toward(kAxis.power(4));
  HalfspaceQuery away = HalfspaceQuery::away(kAxis.power(4));
  CHECK(toward.center_relative_length() > 0);
  CHECK(toward.contains(kAxis.power(4)));
  CHECK(away.contains(GroupElement::identity()));

  // H(1,x;0) and H(x,1;0) cover the group
  StepDistribution mu = StepDistribution::uniform_lr();
  for (int r = 0; r < 200; ++r) {
    WalkCursor cursor(mu, child_seed(77, r));
    cursor.advance(10);
    CHECK((toward.contains(cursor.position()) || away.contains(cursor.position())));
  }

  CHECK_THROWS_AS(HalfspaceQuery::toward(gen_R()), std::invalid_argument);
}

TEST_CASE("nested family construction") {
  NestedFamily family = nested_family(kAxis, 2, 4, 6);
  REQUIRE(family.centers.size() == 4);
  for (std::size_t i = 0; i + 1 < family.centers.size(); ++i) {
    CHECK(family.relative_lengths[i + 1] >= family.relative_lengths[i] + 2);
    CHECK(family.exponents[i + 1] > family.exponents[i]);
  }
  CHECK(family.nesting_checked > 0);
  CHECK(family.nesting_violations == 0);

  NestedFamily pair = nested_family(kAxis, 1, 2, 5);
  CHECK(pair.relative_lengths[1] >= pair.relative_lengths[0] + 1);

  CHECK_THROWS_AS(nested_family(gen_R(), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(nested_family(kAxis, 0, 2), std::invalid_argument);
}

TEST_CASE("monte carlo halfspace mass agrees with the exact table") {
  StepDistribution mu = StepDistribution::uniform_lr();
  for (int n : {2, 3, 4}) {
    HalfspaceQuery H = HalfspaceQuery::toward(kAxis.power(2));
    Rational exact = mu_n_halfspace_exact(mu, n, H);
    MeasureEstimate mc = mu_n_halfspace(mu, n, H, 4000, 31337);
    double gap = std::abs(mc.estimate - exact.convert_to<double>());
    CHECK(gap <= 3 * std::max(mc.stderr_, 1e-3));
  }
}

TEST_CASE("halfspace covering within sampling error") {
  StepDistribution mu = StepDistribution::uniform_lr();
  HalfspaceQuery toward = HalfspaceQuery::toward(kAxis.power(3));
  HalfspaceQuery away = HalfspaceQuery::away(kAxis.power(3));
  MeasureEstimate a = mu_n_halfspace(mu, 6, toward, 3000, 5);
  MeasureEstimate b = mu_n_halfspace(mu, 6, away, 3000, 5);
  double combined = std::sqrt(a.stderr_ * a.stderr_ + b.stderr_ * b.stderr_);
  CHECK(a.estimate + b.estimate >= 1.0 - 3 * combined);
}

TEST_CASE("two-horizon harmonic proxy is stable on a well-mixed run") {
  StepDistribution mu = StepDistribution::uniform_lr();
  HalfspaceQuery H = HalfspaceQuery::toward(kAxis.power(3));
  int horizon = 20 * H.center_relative_length();
  HarmonicEstimate est = harmonic_halfspace(mu, H, horizon, 1500, 99);
  CHECK(est.at_horizon.n == horizon);
  CHECK(est.at_double_horizon.n == 2 * horizon);
  CHECK(est.stable);
  CHECK(!est.caveat.empty());
}

TEST_CASE("first hit") {
  StepDistribution mu = StepDistribution::uniform_lr();
  HalfspaceQuery away = HalfspaceQuery::away(kAxis.power(5));
  WalkPath path = sample_path(mu, 30, 11);
  auto hit = first_hit(path, away);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 0);  // the identity starts inside H(x,1)
  CHECK(hit->second == GroupElement::identity());

  // a halfspace whose center is far beyond reach in 3 steps
  HalfspaceQuery far = HalfspaceQuery::toward(kAxis.power(40));
  WalkPath tiny = sample_path(mu, 3, 11);
  CHECK(!first_hit(tiny, far).has_value());
}

TEST_CASE("family measures are non-increasing within sampling error") {
  StepDistribution mu = StepDistribution::uniform_lr();
  NestedFamily family = nested_family(kAxis * kAxis, 2, 3, 5);
  std::vector<MeasureEstimate> ests;
  for (std::size_t i = 0; i < family.centers.size(); ++i) {
    HalfspaceQuery H = HalfspaceQuery::toward(family.centers[i]);
    ests.push_back(mu_n_halfspace(mu, 20 * H.center_relative_length(), H, 1200,
                                  child_seed(404, i)));
  }
  for (std::size_t i = 0; i + 1 < ests.size(); ++i) {
    double combined =
        std::sqrt(ests[i].stderr_ * ests[i].stderr_ + ests[i + 1].stderr_ * ests[i + 1].stderr_);
    CHECK(ests[i + 1].estimate <= ests[i].estimate + 3 * combined);
  }
}

TEST_CASE("interval helpers") {
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-4));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-9));
  // Student quantiles exceed normal ones at small degrees of freedom
  CHECK(student_quantile(0.975, 5) > normal_quantile(0.975));
  std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  ConfidenceInterval ci99 = mean_confidence_interval(xs, 0.99);
  ConfidenceInterval ci90 = mean_confidence_interval(xs, 0.90);
  CHECK(ci99.lo < ci90.lo);
  CHECK(ci99.hi > ci90.hi);
  CHECK(ci99.lo <= 2.5);
  CHECK(ci99.hi >= 2.5);
}

TEST_CASE("decay fit on exact geometric data") {
  std::vector<DecayPoint> pts = {{1, 0.5, 0.0, 0}, {2, 0.25, 0.0, 0}, {3, 0.125, 0.0, 0}};
  DecayReport rep = decay_fit(pts);
  CHECK(rep.l_hat == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.slope_se == doctest::Approx(0.0));
  CHECK(rep.q_hat == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(!rep.non_decaying);
  CHECK(!rep.non_monotone_input);
}

TEST_CASE("decay fit flags constant data as non-decaying") {
  std::vector<DecayPoint> pts = {{1, 0.3, 0.01, 900}, {2, 0.3, 0.01, 900}, {4, 0.3, 0.01, 900}};
  DecayReport rep = decay_fit(pts);
  CHECK(rep.l_hat == 1.0);
  CHECK(rep.non_decaying);
}

TEST_CASE("decay fit reports zero estimates separately") {
  std::vector<DecayPoint> pts = {
      {1, 0.5, 0.01, 1000}, {2, 0.2, 0.01, 1000}, {3, 0.1, 0.01, 1000}, {9, 0.0, 0.0, 1000}};
  DecayReport rep = decay_fit(pts);
  CHECK(rep.fitted_points.size() == 3);
  REQUIRE(rep.below_resolution.size() == 1);
  CHECK(rep.below_resolution[0].r == 9);
  CHECK(zero_count_upper_bound(1000) == doctest::Approx(1 - std::pow(0.05, 1.0 / 1000)));

  std::vector<DecayPoint> too_few = {{1, 0.5, 0.01, 10}, {2, 0.4, 0.01, 10}};
  CHECK_THROWS_AS(decay_fit(too_few), std::invalid_argument);
}

TEST_CASE("decay fit flags non-monotone input") {
  std::vector<DecayPoint> pts = {
      {1, 0.2, 0.01, 900}, {2, 0.35, 0.01, 900}, {3, 0.1, 0.01, 900}};
  DecayReport rep = decay_fit(pts);
  CHECK(rep.non_monotone_input);
}
