#include "curvewalk/step_distribution.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvewalk {

StepDistribution::StepDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("StepDistribution: empty support");
  Rational total = 0;
  for (const Atom& a : atoms_) {
    if (a.probability <= 0) {
      throw std::invalid_argument("StepDistribution: probabilities must be positive");
    }
    total += a.probability;
  }
  if (total != 1) {
    throw std::invalid_argument("StepDistribution: probabilities must sum to 1 exactly");
  }
  // Cumulative thresholds scaled to 2^64; the final one saturates so every
  // bit pattern selects an atom.
  const Int scale = Int(1) << 64;
  Rational cum = 0;
  thresholds_.reserve(atoms_.size());
  for (std::size_t i = 0; i + 1 < atoms_.size(); ++i) {
    cum += atoms_[i].probability;
    Int t = (numerator(cum) * scale) / denominator(cum);
    thresholds_.push_back(t.convert_to<std::uint64_t>());
  }
  thresholds_.push_back(~std::uint64_t{0});
}

std::size_t StepDistribution::sample_index(std::uint64_t bits) const {
  auto it = std::upper_bound(thresholds_.begin(), thresholds_.end() - 1, bits);
  return static_cast<std::size_t>(it - thresholds_.begin());
}

std::string inverse_label(const std::string& label) {
  const std::string suffix = "^-1";
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return label.substr(0, label.size() - suffix.size());
  }
  return label + suffix;
}

StepDistribution StepDistribution::reflected() const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    out.push_back(Atom{a.element.inverse(), a.probability, inverse_label(a.label)});
  }
  return StepDistribution(std::move(out));
}

StepDistribution StepDistribution::uniform_lr() {
  Rational quarter(1, 4);
  return StepDistribution({
      Atom{gen_L(), quarter, "L"},
      Atom{gen_L().inverse(), quarter, "L^-1"},
      Atom{gen_R(), quarter, "R"},
      Atom{gen_R().inverse(), quarter, "R^-1"},
  });
}

StepDistribution StepDistribution::sanov() {
  Rational quarter(1, 4);
  GroupElement a = gen_L() * gen_L();
  GroupElement b = gen_R() * gen_R();
  return StepDistribution({
      Atom{a, quarter, "a"},
      Atom{a.inverse(), quarter, "a^-1"},
      Atom{b, quarter, "b"},
      Atom{b.inverse(), quarter, "b^-1"},
  });
}

StepDistribution StepDistribution::point_mass_identity() {
  return StepDistribution({Atom{GroupElement::identity(), Rational(1), "e"}});
}

}  // namespace curvewalk
