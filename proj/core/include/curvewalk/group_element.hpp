#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "curvewalk/bigint.hpp"
#include "curvewalk/slope.hpp"

namespace curvewalk {

// A mapping class of the torus: a 2x2 integer matrix [a b; c d] with
// determinant one. Group operations are exact; no invariant is ever
// approximated.
class GroupElement {
 public:
  GroupElement() : a_(1), b_(0), c_(0), d_(1) {}

  // Validates ad - bc = 1.
  GroupElement(Int a, Int b, Int c, Int d);

  static GroupElement identity() { return GroupElement(); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement power(long n) const;  // negative n uses the inverse

  Int trace() const { return a_ + d_; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  bool operator==(const GroupElement& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;

 private:
  struct unchecked_t {};
  GroupElement(unchecked_t, Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Int a_, b_, c_, d_;
};

// Projective action on slopes: (p,q) -> (ap + bq, cp + dq), reduced.
Slope mobius(const GroupElement& g, const Slope& s);

// Serialized as "[[a,b],[c,d]]" with decimal digits.
std::string to_string(const GroupElement& g);
GroupElement parse_group_element(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

std::size_t hash_value(const GroupElement& g);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return hash_value(g); }
};

// The standard generating pair of the torus mapping class group.
GroupElement gen_L();  // [1 0; 1 1]
GroupElement gen_R();  // [1 1; 0 1]

}  // namespace curvewalk
