#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace curvewalk {

inline double mean(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs);
  double s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

// Acklam's rational approximation of the standard normal quantile.
double normal_quantile(double p);

// Student t quantile via the Cornish-Fisher expansion around the normal
// quantile; plenty for confidence intervals at desk-scale replica counts.
double student_quantile(double p, int dof);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.0;
};

// Two-sided interval for the mean of xs; Student correction below 30
// observations, normal beyond.
ConfidenceInterval mean_confidence_interval(const std::vector<double>& xs, double level);

// Weighted least squares fit y ~ intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double intercept_se = 0.0;
};
LineFit weighted_least_squares(const std::vector<double>& x, const std::vector<double>& y,
                               const std::vector<double>& weight);

}  // namespace curvewalk
