#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvewalk/bigint.hpp"
#include "curvewalk/group_element.hpp"

namespace curvewalk {

// A finitely supported step distribution over group elements. Probabilities
// are exact rationals and must sum to one exactly; sampling maps 64 random
// bits through fixed thresholds, so a draw is a pure function of those bits.
struct Atom {
  GroupElement element;
  Rational probability;
  std::string label;  // letter name for word-metric bookkeeping, e.g. "a", "a^-1"
};

class StepDistribution {
 public:
  explicit StepDistribution(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }

  // (g, p) -> (g^-1, p); labels gain/lose the ^-1 suffix. An involution.
  StepDistribution reflected() const;

  // Index of the atom selected by 64 uniform bits.
  std::size_t sample_index(std::uint64_t bits) const;
  const Atom& sample(std::uint64_t bits) const { return atoms_[sample_index(bits)]; }

  // Named presets.
  static StepDistribution uniform_lr();   // uniform on {L, R, L^-1, R^-1}
  static StepDistribution sanov();        // uniform on {L^2, R^2} and inverses
  static StepDistribution point_mass_identity();

 private:
  std::vector<Atom> atoms_;
  std::vector<std::uint64_t> thresholds_;  // cumulative, scaled to 2^64
};

// Inverse label: "a" <-> "a^-1".
std::string inverse_label(const std::string& label);

}  // namespace curvewalk
