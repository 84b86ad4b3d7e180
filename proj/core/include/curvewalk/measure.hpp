#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvewalk/convolution.hpp"
#include "curvewalk/drift.hpp"
#include "curvewalk/farey.hpp"
#include "curvewalk/stats.hpp"
#include "curvewalk/walk.hpp"

namespace curvewalk {

// Halfspace of the group, evaluated through the displacement of the base
// slope: g lies in H(anchor, center; C) when g's slope is at least as close
// to the center's slope as to the anchor's, with additive slack C. The
// decidable rule is d(g x0, center x0) <= d(g x0, anchor x0) + C.
class HalfspaceQuery {
 public:
  // H(1, x; C)
  static HalfspaceQuery toward(const GroupElement& x, int slack = 0);
  // H(x, 1; C)
  static HalfspaceQuery away(const GroupElement& x, int slack = 0);

  bool contains(const Slope& s) const {
    return farey_distance(s, target_) <= farey_distance(s, anchor_) + slack_;
  }
  bool contains(const GroupElement& g) const { return contains(mobius(g, base_slope())); }

  const Slope& target_slope() const { return target_; }
  const Slope& anchor_slope() const { return anchor_; }
  int slack() const { return slack_; }
  int center_relative_length() const { return center_relative_length_; }
  const std::string& description() const { return description_; }

 private:
  Slope anchor_;
  Slope target_;
  int slack_ = 0;
  int center_relative_length_ = 0;
  std::string description_;
};

// x_i = a^{c_i} with exponents chosen minimally so consecutive relative
// lengths grow by at least `spacing`. Halfspaces H(1, x_{i+1}) are nested
// inside H(1, x_i); the scan over a ball of group elements counts any
// violation of that nesting.
struct NestedFamily {
  std::vector<GroupElement> centers;
  std::vector<int> exponents;
  std::vector<int> relative_lengths;
  long long nesting_checked = 0;
  long long nesting_violations = 0;
};

NestedFamily nested_family(const GroupElement& direction, int spacing, int count,
                           int scan_word_radius = 8);

// Monte-Carlo mu^(n)(H): fraction of replica endpoints landing in H, with
// binomial standard error.
struct MeasureEstimate {
  int n = 0;  // steps or horizon
  int replicas = 0;
  std::uint64_t seed = 0;
  long long hits = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
};

MeasureEstimate mu_n_halfspace(const StepDistribution& mu, int n, const HalfspaceQuery& H,
                               int replicas, std::uint64_t seed);

// The same mass, exactly, from the convolution table.
Rational mu_n_halfspace_exact(const StepDistribution& mu, int n, const HalfspaceQuery& H,
                              std::size_t budget = 2'000'000);

// Finite-horizon stand-in for the harmonic measure of the closure of H: the
// fraction of paths inside H at the horizon, always reported next to the
// same estimate at twice the horizon. Runs whose two horizons disagree by
// more than three combined standard errors fail the stability gate and must
// be rejected, not averaged. Boundary mass of the closure is not measured;
// every record carries that caveat.
struct HarmonicEstimate {
  int horizon = 0;
  int replicas = 0;
  std::uint64_t seed = 0;
  MeasureEstimate at_horizon;
  MeasureEstimate at_double_horizon;
  double gap = 0.0;
  bool stable = false;
  std::string caveat;
};

HarmonicEstimate harmonic_halfspace(const StepDistribution& mu, const HalfspaceQuery& H,
                                    int horizon, int replicas, std::uint64_t seed);

// First index at which the path enters H, with the group element there.
std::optional<std::pair<int, GroupElement>> first_hit(const WalkPath& path,
                                                      const HalfspaceQuery& H);

// Weighted log-linear fit of measure estimates against relative length.
struct DecayPoint {
  int r = 0;          // relative length of the halfspace center
  double estimate = 0.0;
  double stderr_ = 0.0;
  int replicas = 0;
};

struct DecayReport {
  std::vector<DecayPoint> fitted_points;
  std::vector<DecayPoint> below_resolution;  // zero estimates, excluded from the fit
  double l_hat = 1.0;                        // exp(slope), clamped to (0, 1]
  double q_hat = 1.0;                        // exp(intercept)
  double slope = 0.0;
  double slope_se = 0.0;
  double slope_ci_lo = 0.0;
  double slope_ci_hi = 0.0;
  double ci_level = 0.95;
  bool non_decaying = false;  // flagged when the fitted slope is >= 0
  bool non_monotone_input = false;
};

// Clopper-Pearson upper bound for zero successes out of n at the given level.
double zero_count_upper_bound(int replicas, double level = 0.95);

DecayReport decay_fit(const std::vector<DecayPoint>& points, double ci_level = 0.95);

}  // namespace curvewalk
