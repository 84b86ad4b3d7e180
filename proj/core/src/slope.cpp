#include "curvewalk/slope.hpp"

#include <ostream>
#include <stdexcept>

namespace curvewalk {

Slope reduce(Int p, Int q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("reduce: (0,0) is not a slope");
  }
  Int g = gcd(abs(p), abs(q));
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;
  return Slope{std::move(p), std::move(q)};
}

Int intersection_number(const Slope& s, const Slope& t) {
  return abs(s.p * t.q - s.q * t.p);
}

std::string to_string(const Slope& s) {
  return s.p.str() + "/" + s.q.str();
}

Slope parse_slope(const std::string& text) {
  auto pos = text.find('/');
  if (pos == std::string::npos || pos == 0 || pos + 1 == text.size()) {
    throw std::invalid_argument("parse_slope: expected \"p/q\", got \"" + text + "\"");
  }
  Int p(text.substr(0, pos));
  Int q(text.substr(pos + 1));
  return reduce(std::move(p), std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << to_string(s);
}

}  // namespace curvewalk
