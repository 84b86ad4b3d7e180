#include "curvewalk/measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace curvewalk {

HalfspaceQuery HalfspaceQuery::toward(const GroupElement& x, int slack) {
  HalfspaceQuery h;
  h.anchor_ = base_slope();
  h.target_ = mobius(x, base_slope());
  if (h.target_ == h.anchor_) {
    throw std::invalid_argument("HalfspaceQuery: center fixes the base slope");
  }
  h.slack_ = slack;
  h.center_relative_length_ = farey_distance(h.anchor_, h.target_);
  h.description_ = "H(1,x;" + std::to_string(slack) + ") x->" + to_string(h.target_);
  return h;
}

HalfspaceQuery HalfspaceQuery::away(const GroupElement& x, int slack) {
  HalfspaceQuery h = toward(x, slack);
  std::swap(h.anchor_, h.target_);
  h.description_ = "H(x,1;" + std::to_string(slack) + ") x->" + to_string(h.anchor_);
  return h;
}

NestedFamily nested_family(const GroupElement& direction, int spacing, int count,
                           int scan_word_radius) {
  if (abs(direction.trace()) <= 2) {
    throw std::invalid_argument("nested_family: direction must be hyperbolic (|trace| > 2)");
  }
  if (spacing < 1 || count < 2) {
    throw std::invalid_argument("nested_family: need spacing >= 1 and count >= 2");
  }
  NestedFamily family;
  GroupElement power = direction;
  int exponent = 1;
  int previous_length = -spacing;  // so the first element is accepted
  while (static_cast<int>(family.centers.size()) < count) {
    int len = relative_length(power);
    if (len >= previous_length + spacing) {
      family.centers.push_back(power);
      family.exponents.push_back(exponent);
      family.relative_lengths.push_back(len);
      previous_length = len;
    }
    power = power * direction;
    ++exponent;
    if (exponent > 10000) {
      throw std::runtime_error("nested_family: relative length is not growing");
    }
  }

  // Nesting scan over a ball of group elements: deeper halfspaces must sit
  // inside shallower ones.
  std::vector<HalfspaceQuery> queries;
  for (const GroupElement& x : family.centers) queries.push_back(HalfspaceQuery::toward(x));
  const GroupElement gens[4] = {gen_L(), gen_R(), gen_L().inverse(), gen_R().inverse()};
  std::set<GroupElement> ball = {GroupElement::identity()};
  std::vector<GroupElement> frontier(ball.begin(), ball.end());
  for (int depth = 0; depth < scan_word_radius; ++depth) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (const GroupElement& s : gens) {
        GroupElement candidate = g * s;
        if (ball.insert(candidate).second) next.push_back(candidate);
      }
    }
    frontier = std::move(next);
  }
  for (const GroupElement& g : ball) {
    Slope s = mobius(g, base_slope());
    for (std::size_t i = 0; i + 1 < queries.size(); ++i) {
      ++family.nesting_checked;
      if (queries[i + 1].contains(s) && !queries[i].contains(s)) {
        ++family.nesting_violations;
      }
    }
  }
  return family;
}

MeasureEstimate mu_n_halfspace(const StepDistribution& mu, int n, const HalfspaceQuery& H,
                               int replicas, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mu_n_halfspace: n >= 1");
  if (replicas < 1) throw std::invalid_argument("mu_n_halfspace: replicas >= 1");
  MeasureEstimate est;
  est.n = n;
  est.replicas = replicas;
  est.seed = seed;
  for (int r = 0; r < replicas; ++r) {
    WalkCursor cursor(mu, child_seed(seed, static_cast<std::uint64_t>(r)));
    cursor.advance(n);
    est.hits += H.contains(cursor.position());
  }
  est.estimate = static_cast<double>(est.hits) / replicas;
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / replicas);
  return est;
}

Rational mu_n_halfspace_exact(const StepDistribution& mu, int n, const HalfspaceQuery& H,
                              std::size_t budget) {
  Rational mass = 0;
  for (const auto& [g, p] : convolution(mu, n, budget).entries) {
    if (H.contains(g)) mass += p;
  }
  return mass;
}

HarmonicEstimate harmonic_halfspace(const StepDistribution& mu, const HalfspaceQuery& H,
                                    int horizon, int replicas, std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("harmonic_halfspace: horizon >= 1");
  HarmonicEstimate est;
  est.horizon = horizon;
  est.replicas = replicas;
  est.seed = seed;
  // Independent replica sets for the two horizons keep the combined standard
  // error of the gap honest.
  est.at_horizon = mu_n_halfspace(mu, horizon, H, replicas, child_seed(seed, 0));
  est.at_double_horizon = mu_n_halfspace(mu, 2 * horizon, H, replicas, child_seed(seed, 1));
  est.gap = std::abs(est.at_horizon.estimate - est.at_double_horizon.estimate);
  double combined = std::sqrt(est.at_horizon.stderr_ * est.at_horizon.stderr_ +
                              est.at_double_horizon.stderr_ * est.at_double_horizon.stderr_);
  est.stable = est.gap <= 3 * combined;
  est.caveat = "finite-horizon endpoint proxy; boundary mass of the closure not measured";
  return est;
}

std::optional<std::pair<int, GroupElement>> first_hit(const WalkPath& path,
                                                      const HalfspaceQuery& H) {
  for (int k = 0; k < static_cast<int>(path.positions.size()); ++k) {
    if (H.contains(path.positions[k])) return std::make_pair(k, path.positions[k]);
  }
  return std::nullopt;
}

double zero_count_upper_bound(int replicas, double level) {
  if (replicas < 1) throw std::invalid_argument("zero_count_upper_bound: replicas >= 1");
  return 1.0 - std::pow(1.0 - level, 1.0 / replicas);
}

DecayReport decay_fit(const std::vector<DecayPoint>& points, double ci_level) {
  DecayReport report;
  report.ci_level = ci_level;
  std::vector<DecayPoint> usable;
  for (const DecayPoint& p : points) {
    if (p.estimate < 0) throw std::invalid_argument("decay_fit: negative estimate");
    if (p.estimate == 0.0) {
      report.below_resolution.push_back(p);
    } else {
      usable.push_back(p);
    }
  }
  std::sort(usable.begin(), usable.end(),
            [](const DecayPoint& a, const DecayPoint& b) { return a.r < b.r; });
  {
    std::vector<int> rs;
    for (const DecayPoint& p : usable) rs.push_back(p.r);
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    if (rs.size() < 3) {
      throw std::invalid_argument("decay_fit: need at least 3 points with distinct r");
    }
  }
  for (std::size_t i = 0; i + 1 < usable.size(); ++i) {
    if (usable[i + 1].estimate > usable[i].estimate) report.non_monotone_input = true;
  }
  report.fitted_points = usable;

  std::vector<double> x, y, w;
  bool all_exact = true;
  for (const DecayPoint& p : usable) {
    x.push_back(p.r);
    y.push_back(std::log(p.estimate));
    if (p.stderr_ > 0) all_exact = false;
  }
  LineFit fit;
  if (all_exact) {
    // no sampling error given: ordinary least squares, uncertainty from the
    // residuals (zero for exactly log-linear input)
    w.assign(x.size(), 1.0);
    fit = weighted_least_squares(x, y, w);
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double resid = y[i] - (fit.intercept + fit.slope * x[i]);
      rss += resid * resid;
    }
    double dof = static_cast<double>(x.size()) - 2.0;
    double scale = dof > 0 ? std::sqrt(rss / dof) : 0.0;
    fit.slope_se *= scale;
    fit.intercept_se *= scale;
  } else {
    for (const DecayPoint& p : usable) {
      double se_log = p.stderr_ > 0 ? p.stderr_ / p.estimate : 1e-9;
      w.push_back(1.0 / (se_log * se_log));
    }
    fit = weighted_least_squares(x, y, w);
  }
  report.slope = fit.slope;
  report.slope_se = fit.slope_se;
  double q = normal_quantile((1 + ci_level) / 2);
  report.slope_ci_lo = fit.slope - q * fit.slope_se;
  report.slope_ci_hi = fit.slope + q * fit.slope_se;
  report.l_hat = std::exp(fit.slope);
  report.q_hat = std::exp(fit.intercept);
  if (report.l_hat >= 1.0) {
    report.l_hat = 1.0;
    report.non_decaying = true;
  }
  return report;
}

}  // namespace curvewalk
