#pragma once

#include <optional>
#include <stdexcept>

namespace curvewalk {

// The constants used by the halfspace verifiers and the decay experiments,
// all derived from the working hyperbolicity constant delta. K8 additionally
// needs the distance from the basepoint to an axis geodesic, and K9 a
// jump-covering multiplier k.
struct ConstantsLedger {
  double delta = 0.0;
  std::optional<double> pair_distance;  // d(1, [a,b]) for the K8 family
  int k = 1;

  double k1() const { return 7 * delta; }
  double k2() const { return 27 * delta; }
  double k3() const { return 18 * delta; }
  double k4() const { return 2 * k2() + k3() + 42 * delta; }
  double k5() const { return 24 * delta; }
  double k7() const { return 98 * delta + 2 * k1(); }
  double k6() const { return 2 * k7() + 6 * delta; }

  double k8() const {
    if (!pair_distance) throw std::logic_error("ConstantsLedger: K8 needs pair data");
    return 2 * *pair_distance + k5();
  }
  double k9() const { return k * (2 * k8() + k6()); }
  double k10() const { return k6() + 2 * k8() + k9(); }
};

inline ConstantsLedger constants(double delta,
                                 std::optional<double> pair_distance = std::nullopt,
                                 int k = 1) {
  if (delta < 0) throw std::invalid_argument("constants: delta must be >= 0");
  if (k < 1) throw std::invalid_argument("constants: k must be >= 1");
  return ConstantsLedger{delta, pair_distance, k};
}

}  // namespace curvewalk
