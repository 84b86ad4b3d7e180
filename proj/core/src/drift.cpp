#include "curvewalk/drift.hpp"

#include <stdexcept>

namespace curvewalk {

std::string metric_label(Metric m) {
  switch (m) {
    case Metric::FareyDisplacement: return "farey-displacement";
    case Metric::Word: return "word";
  }
  return "?";
}

void ReducedWord::push(const std::string& label) {
  if (label == "e") return;  // identity atoms do not move
  if (!stack_.empty() && stack_.back() == inverse_label(label)) {
    stack_.pop_back();
  } else {
    stack_.push_back(label);
  }
}

int reduced_segment_length(const WalkPath& path, int from, int to) {
  ReducedWord word;
  for (int i = from; i < to; ++i) word.push(path.labels[i]);
  return word.length();
}

DriftReport drift_estimate(const StepDistribution& mu, Metric metric, int steps,
                           int replicas, std::uint64_t seed, double level) {
  if (steps < 1) throw std::invalid_argument("drift_estimate: steps >= 1");
  if (replicas < 2) throw std::invalid_argument("drift_estimate: replicas >= 2");
  DriftReport report;
  report.metric = metric_label(metric);
  report.steps = steps;
  report.replicas = replicas;
  report.seed = seed;
  report.terminal_lengths.resize(replicas);

  for (int r = 0; r < replicas; ++r) {
    std::uint64_t rs = child_seed(seed, static_cast<std::uint64_t>(r));
    if (metric == Metric::FareyDisplacement) {
      WalkCursor cursor(mu, rs);
      cursor.advance(steps);
      report.terminal_lengths[r] = relative_length(cursor.position());
    } else {
      auto rng = make_engine(rs);
      ReducedWord word;
      for (int i = 0; i < steps; ++i) word.push(mu.sample(rng()).label);
      report.terminal_lengths[r] = word.length();
    }
  }
  std::vector<double> normalized(replicas);
  for (int r = 0; r < replicas; ++r) {
    normalized[r] = static_cast<double>(report.terminal_lengths[r]) / steps;
  }
  report.l_hat = mean(normalized);
  report.ci = mean_confidence_interval(normalized, level);
  return report;
}

DeltaEstimate delta_nm(const StepDistribution& mu, int n, int m, int replicas,
                       std::uint64_t seed) {
  if (n < 0 || m < 0) throw std::invalid_argument("delta_nm: negative step counts");
  if (replicas < 2) throw std::invalid_argument("delta_nm: replicas >= 2");
  std::vector<double> diffs(replicas);
  for (int r = 0; r < replicas; ++r) {
    WalkCursor cursor(mu, child_seed(seed, static_cast<std::uint64_t>(r)));
    cursor.advance(n);
    int before = relative_length(cursor.position());
    cursor.advance(m);
    int after = relative_length(cursor.position());
    diffs[r] = after - before;
  }
  DeltaEstimate est;
  est.n = n;
  est.m = m;
  est.replicas = replicas;
  est.seed = seed;
  est.estimate = mean(diffs);
  est.stderr_ = sample_sd(diffs) / std::sqrt(static_cast<double>(replicas));
  return est;
}

Rational delta_nm_exact(const StepDistribution& mu, int n, int m, std::size_t budget) {
  ConvolutionTable tn = convolution(mu, n, budget);
  ConvolutionTable tm = convolution(mu, m, budget);
  Rational sum = 0;
  for (const auto& [x, px] : tn.entries) {
    Rational len_x = relative_length(x);
    for (const auto& [y, py] : tm.entries) {
      sum += px * py * (Rational(relative_length(x * y)) - len_x);
    }
  }
  return sum;
}

std::vector<PairSlack> subadditivity_audit(const WalkPath& path, Metric metric,
                                           const std::vector<std::pair<int, int>>& pairs) {
  std::vector<PairSlack> out;
  out.reserve(pairs.size());
  for (auto [n, k] : pairs) {
    if (n < 0 || k < 0 || n + k > path.length()) {
      throw std::invalid_argument("subadditivity_audit: pair beyond path length");
    }
    PairSlack slack;
    slack.n = n;
    slack.k = k;
    if (metric == Metric::FareyDisplacement) {
      Slope at_n = mobius(path.positions[n], base_slope());
      Slope at_nk = mobius(path.positions[n + k], base_slope());
      slack.lhs = farey_distance(base_slope(), at_nk);
      slack.rhs = farey_distance(base_slope(), at_n) + farey_distance(at_n, at_nk);
    } else {
      slack.lhs = reduced_segment_length(path, 0, n + k);
      slack.rhs = reduced_segment_length(path, 0, n) + reduced_segment_length(path, n, n + k);
    }
    out.push_back(slack);
  }
  return out;
}

HalfRateReport halfrate_statistic(int steps, int replicas, std::uint64_t seed) {
  if (steps < 2) throw std::invalid_argument("halfrate_statistic: steps >= 2");
  if (replicas < 1) throw std::invalid_argument("halfrate_statistic: replicas >= 1");
  HalfRateReport report;
  report.steps = steps;
  report.replicas = replicas;
  report.seed = seed;
  for (int r = 0; r < replicas; ++r) {
    auto rng = make_engine(child_seed(seed, static_cast<std::uint64_t>(r)));
    bool prev = rng() & 1;
    for (int i = 1; i < steps; ++i) {
      bool turn = rng() & 1;
      report.changes += (turn != prev);
      ++report.comparisons;
      prev = turn;
    }
  }
  report.frequency = static_cast<double>(report.changes) / report.comparisons;
  return report;
}

}  // namespace curvewalk
