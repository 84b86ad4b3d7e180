#pragma once

#include <iosfwd>
#include <string>

#include "curvewalk/bigint.hpp"

namespace curvewalk {

// A vertex of the Farey graph: a rational p/q in lowest terms with q >= 0,
// where 1/0 is the point at infinity. Canonical form is unique per
// projective class, so slopes compare by field equality.
struct Slope {
  Int p{1};
  Int q{0};

  bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
  bool operator!=(const Slope& o) const { return !(*this == o); }
  bool operator<(const Slope& o) const {
    return p < o.p || (p == o.p && q < o.q);
  }

  bool is_infinity() const { return q == 0; }
};

// Canonical lowest-terms representative with q >= 0 (and p = 1 when q = 0).
// Rejects (0,0), which names no slope.
Slope reduce(Int p, Int q);

// Geometric intersection number of the two curves: |p_s q_t - q_s p_t|.
// Zero iff the slopes are equal; one iff they are joined by a Farey edge.
Int intersection_number(const Slope& s, const Slope& t);

inline bool farey_adjacent(const Slope& s, const Slope& t) {
  return intersection_number(s, t) == 1;
}

// Serialized as "p/q" ("1/0" for infinity).
std::string to_string(const Slope& s);
Slope parse_slope(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace curvewalk
