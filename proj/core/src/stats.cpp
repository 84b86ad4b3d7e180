#include "curvewalk/stats.hpp"

namespace curvewalk {

double normal_quantile(double p) {
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("normal_quantile: p in (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p > 1 - plow) {
    q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

double student_quantile(double p, int dof) {
  if (dof < 1) throw std::invalid_argument("student_quantile: dof >= 1");
  double z = normal_quantile(p);
  double v = dof;
  double z3 = z * z * z, z5 = z3 * z * z, z7 = z5 * z * z;
  return z + (z3 + z) / (4 * v) + (5 * z5 + 16 * z3 + 3 * z) / (96 * v * v) +
         (3 * z7 + 19 * z5 + 17 * z3 - 15 * z) / (384 * v * v * v);
}

ConfidenceInterval mean_confidence_interval(const std::vector<double>& xs, double level) {
  if (xs.empty()) throw std::invalid_argument("mean_confidence_interval: empty sample");
  double m = mean(xs);
  if (xs.size() == 1) return ConfidenceInterval{m, m, level};
  double se = sample_sd(xs) / std::sqrt(static_cast<double>(xs.size()));
  double tail = (1 + level) / 2;
  int n = static_cast<int>(xs.size());
  double q = n < 30 ? student_quantile(tail, n - 1) : normal_quantile(tail);
  return ConfidenceInterval{m - q * se, m + q * se, level};
}

LineFit weighted_least_squares(const std::vector<double>& x, const std::vector<double>& y,
                               const std::vector<double>& weight) {
  if (x.size() != y.size() || x.size() != weight.size() || x.size() < 2) {
    throw std::invalid_argument("weighted_least_squares: need matched samples, >= 2");
  }
  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += weight[i];
    swx += weight[i] * x[i];
    swy += weight[i] * y[i];
    swxx += weight[i] * x[i] * x[i];
    swxy += weight[i] * x[i] * y[i];
  }
  double det = sw * swxx - swx * swx;
  if (det <= 0) throw std::invalid_argument("weighted_least_squares: degenerate design");
  LineFit fit;
  fit.slope = (sw * swxy - swx * swy) / det;
  fit.intercept = (swxx * swy - swx * swxy) / det;
  fit.slope_se = std::sqrt(sw / det);
  fit.intercept_se = std::sqrt(swxx / det);
  return fit;
}

}  // namespace curvewalk
