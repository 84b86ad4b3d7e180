#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvewalk/bigint.hpp"
#include "curvewalk/group_element.hpp"

namespace curvewalk {

// Torus criterion for pseudo-Anosov behaviour: |trace| > 2.
inline bool is_hyperbolic(const GroupElement& g) { return abs(g.trace()) > 2; }

// The invariant quadratic c x^2 + (d - a) x - b of a hyperbolic element, in
// primitive form with positive leading coefficient. Its two irrational roots
// are the attracting and repelling fixed slopes on the boundary circle.
struct FixedPointData {
  Int c2, c1, c0;  // normalized coefficients
  Int discriminant;

  // Rational brackets isolating each root; refined on demand.
  Rational attracting_lo, attracting_hi;
  Rational repelling_lo, repelling_hi;

  bool operator==(const FixedPointData& o) const {
    return c2 == o.c2 && c1 == o.c1 && c0 == o.c0;
  }

  // Sign of the quadratic at a rational point.
  int sign_at(const Rational& x) const;
};

FixedPointData fixed_points(const GroupElement& g);

// Ivanov dichotomy, decided exactly: true iff the two invariant quadratics
// share no root, i.e. their resultant is nonzero.
bool independent(const GroupElement& f, const GroupElement& g);
Int fixed_point_resultant(const GroupElement& f, const GroupElement& g);

// A closed interval with rational endpoints on the boundary circle (never
// containing infinity).
struct RationalInterval {
  Rational lo, hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Exact ping-pong data: a^p maps everything outside A- into A+, a^-p maps
// everything outside A+ into A-, and likewise b^q with B+/B-. The four
// closed intervals are pairwise disjoint. Everything is checked with exact
// rational arithmetic; re-verification of a stored certificate never drifts.
struct PingPongCertificate {
  GroupElement a, b;
  int p = 0, q = 0;
  RationalInterval a_plus, a_minus, b_plus, b_minus;

  std::string to_json() const;
  static PingPongCertificate from_json(const std::string& text);
};

// Exact check of every certificate condition; reasons lists each failure.
bool verify_certificate(const PingPongCertificate& cert,
                        std::vector<std::string>* reasons = nullptr);

struct SchottkySearch {
  std::optional<PingPongCertificate> certificate;
  std::vector<std::string> transcript;  // one line per rejected candidate batch
};

// Deterministic search over powers (ordered by p+q, then p) and over root
// brackets shrinking dyadically toward the fixed points. Requires both
// elements hyperbolic and independent.
SchottkySearch certify_schottky(const GroupElement& a, const GroupElement& b,
                                int max_power, int max_refinement = 14);

// Evaluates every reduced word of length <= max_len in {a^p, b^q} and their
// inverses; each must be a non-identity hyperbolic element.
struct FreeGroupAudit {
  long long words_checked = 0;
  long long identity_words = 0;
  long long non_hyperbolic_words = 0;
  std::vector<std::string> counterexamples;
};

FreeGroupAudit free_group_audit(const PingPongCertificate& cert, int max_len);

}  // namespace curvewalk
