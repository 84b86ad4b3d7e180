#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvewalk/convolution.hpp"
#include "curvewalk/stats.hpp"
#include "curvewalk/walk.hpp"

namespace curvewalk {

// Length of a group element in one of the two metrics the experiments use:
//   farey-displacement -- how far the element moves the base slope, the
//     exactly computable stand-in for relative length;
//   word -- reduced word length over the support's letter labels, exact when
//     the support letters generate freely (the Sanov pair), an upper bound
//     otherwise.
enum class Metric { FareyDisplacement, Word };

std::string metric_label(Metric m);

// Incremental reduced word over atom labels.
class ReducedWord {
 public:
  void push(const std::string& label);
  int length() const { return static_cast<int>(stack_.size()); }

 private:
  std::vector<std::string> stack_;
};

// Reduced length of the label segment [from, to) of a path.
int reduced_segment_length(const WalkPath& path, int from, int to);

struct DriftReport {
  std::string metric;
  int steps = 0;
  int replicas = 0;
  std::uint64_t seed = 0;
  double l_hat = 0.0;  // mean of |w_n|/n over replicas
  ConfidenceInterval ci;
  std::vector<int> terminal_lengths;  // per replica
};

DriftReport drift_estimate(const StepDistribution& mu, Metric metric, int steps,
                           int replicas, std::uint64_t seed, double level = 0.99);

// Expected relative-length gain of m extra steps after n, Monte Carlo and
// exact. The exact form enumerates mu^(n) x mu^(m) with farey-displacement
// lengths.
struct DeltaEstimate {
  int n = 0;
  int m = 0;
  int replicas = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
};

DeltaEstimate delta_nm(const StepDistribution& mu, int n, int m, int replicas,
                       std::uint64_t seed);
Rational delta_nm_exact(const StepDistribution& mu, int n, int m,
                        std::size_t budget = 2'000'000);

// Pathwise subadditivity |w_{n+k}| <= |w_n| + d(w_n, w_{n+k}): any violation
// would be a defect in the metric, so the audit reports slacks.
struct PairSlack {
  int n = 0;
  int k = 0;
  int lhs = 0;    // |w_{n+k}|
  int rhs = 0;    // |w_n| + d(w_n, w_{n+k})
  int slack() const { return rhs - lhs; }
};

std::vector<PairSlack> subadditivity_audit(const WalkPath& path, Metric metric,
                                           const std::vector<std::pair<int, int>>& pairs);

// Non-backtracking turn sequence on the trivalent dual tree: at every vertex
// the walk turns left or right with equal probability; progress events are
// turns that differ from the previous one.
struct HalfRateReport {
  int steps = 0;
  int replicas = 0;
  std::uint64_t seed = 0;
  long long changes = 0;
  long long comparisons = 0;
  double frequency = 0.0;
};

HalfRateReport halfrate_statistic(int steps, int replicas, std::uint64_t seed);

}  // namespace curvewalk
