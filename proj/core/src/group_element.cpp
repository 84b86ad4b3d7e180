#include "curvewalk/group_element.hpp"

#include <boost/functional/hash.hpp>

#include <array>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace curvewalk {

GroupElement::GroupElement(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw std::invalid_argument("GroupElement: determinant must be 1");
  }
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return GroupElement(unchecked_t{}, a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                      c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

GroupElement GroupElement::inverse() const {
  return GroupElement(unchecked_t{}, d_, -b_, -c_, a_);
}

GroupElement GroupElement::power(long n) const {
  GroupElement base = n < 0 ? inverse() : *this;
  unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  GroupElement acc;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool GroupElement::operator<(const GroupElement& o) const {
  return std::tie(a_, b_, c_, d_) < std::tie(o.a_, o.b_, o.c_, o.d_);
}

Slope mobius(const GroupElement& g, const Slope& s) {
  return reduce(g.a() * s.p + g.b() * s.q, g.c() * s.p + g.d() * s.q);
}

std::string to_string(const GroupElement& g) {
  return "[[" + g.a().str() + "," + g.b().str() + "],[" + g.c().str() + "," +
         g.d().str() + "]]";
}

GroupElement parse_group_element(const std::string& text) {
  // Accepts "[[a,b],[c,d]]", whitespace tolerated between tokens.
  std::array<Int, 4> v;
  std::size_t pos = 0;
  std::size_t entry = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("parse_group_element: malformed \"" + text + "\"");
    }
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) {
      throw std::invalid_argument("parse_group_element: malformed \"" + text + "\"");
    }
    v[entry++] = Int(text.substr(start, pos - start));
  };
  expect('[');
  expect('[');
  number();
  expect(',');
  number();
  expect(']');
  expect(',');
  expect('[');
  number();
  expect(',');
  number();
  expect(']');
  expect(']');
  skip_ws();
  if (pos != text.size()) {
    throw std::invalid_argument("parse_group_element: trailing input in \"" + text + "\"");
  }
  return GroupElement(v[0], v[1], v[2], v[3]);
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << to_string(g);
}

std::size_t hash_value(const GroupElement& g) {
  std::size_t seed = 0;
  boost::hash_combine(seed, g.a());
  boost::hash_combine(seed, g.b());
  boost::hash_combine(seed, g.c());
  boost::hash_combine(seed, g.d());
  return seed;
}

GroupElement gen_L() { return GroupElement(1, 0, 1, 1); }
GroupElement gen_R() { return GroupElement(1, 1, 0, 1); }

}  // namespace curvewalk
