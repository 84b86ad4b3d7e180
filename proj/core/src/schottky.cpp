#include "curvewalk/schottky.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace curvewalk {

namespace {

// A point of the boundary circle: a rational or infinity.
struct ProjPoint {
  bool inf = false;
  Rational v = 0;
};

ProjPoint apply(const GroupElement& g, const ProjPoint& x) {
  if (x.inf) {
    if (g.c() == 0) return ProjPoint{true, 0};
    return ProjPoint{false, make_ratio(g.a(), g.c())};
  }
  Rational den = Rational(g.c()) * x.v + Rational(g.d());
  if (den == 0) return ProjPoint{true, 0};
  Rational num = Rational(g.a()) * x.v + Rational(g.b());
  return ProjPoint{false, num / den};
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

int FixedPointData::sign_at(const Rational& x) const {
  Rational value = Rational(c2) * x * x + Rational(c1) * x + Rational(c0);
  return sign_of(value);
}

FixedPointData fixed_points(const GroupElement& g) {
  if (!is_hyperbolic(g)) {
    throw std::invalid_argument("fixed_points: element is not hyperbolic");
  }
  FixedPointData data;
  data.c2 = g.c();
  data.c1 = g.d() - g.a();
  data.c0 = -g.b();
  // |trace| > 2 with determinant one forces c != 0: a lower-triangular
  // integral element has trace +-2.
  Int gg = gcd(gcd(abs(data.c2), abs(data.c1)), abs(data.c0));
  data.c2 /= gg;
  data.c1 /= gg;
  data.c0 /= gg;
  if (data.c2 < 0) {
    data.c2 = -data.c2;
    data.c1 = -data.c1;
    data.c0 = -data.c0;
  }
  data.discriminant = data.c1 * data.c1 - 4 * data.c2 * data.c0;

  // Cauchy bound, then bisection. The quadratic is negative strictly between
  // its roots (positive leading coefficient).
  Int bound = 1 + max(abs(data.c1), abs(data.c0)) / data.c2 + 1;
  Rational lo1 = Rational(-bound), hi2 = Rational(bound);
  Rational vertex = make_ratio(-data.c1, 2 * data.c2);
  auto bisect_root = [&](Rational lo, Rational hi) {
    // invariant: sign(lo) * sign(hi) < 0 after the first split
    for (int i = 0; i < 8; ++i) {
      Rational mid = (lo + hi) / 2;
      int s = data.sign_at(mid);
      if (s == 0) {
        // roots are irrational for |trace| > 2; a zero would be a defect
        throw std::logic_error("fixed_points: rational root of a hyperbolic element");
      }
      if (data.sign_at(lo) * s < 0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return std::make_pair(lo, hi);
  };
  auto [r1lo, r1hi] = bisect_root(lo1, vertex);
  auto [r2lo, r2hi] = bisect_root(vertex, hi2);

  // Attracting root: the derivative of the action is 1/(c x + d)^2, so the
  // root where |c x + d| > 1 attracts. c*root+d is an eigenvalue, never of
  // absolute value one here, so refining the bracket decides it.
  auto linear_sq_above_one = [&](Rational lo, Rational hi) -> std::optional<bool> {
    auto value = [&](const Rational& x) { return Rational(g.c()) * x + Rational(g.d()); };
    Rational la = value(lo), lb = value(hi);
    if ((la > 1 && lb > 1) || (la < -1 && lb < -1)) return true;
    if (la > -1 && la < 1 && lb > -1 && lb < 1) return false;
    return std::nullopt;
  };
  bool root1_attracting;
  Rational a1 = r1lo, b1 = r1hi, a2 = r2lo, b2 = r2hi;
  while (true) {
    auto known = linear_sq_above_one(a1, b1);
    if (known) {
      root1_attracting = *known;
      break;
    }
    Rational mid = (a1 + b1) / 2;
    if (data.sign_at(a1) * data.sign_at(mid) < 0) {
      b1 = mid;
    } else {
      a1 = mid;
    }
  }
  if (root1_attracting) {
    data.attracting_lo = r1lo;
    data.attracting_hi = r1hi;
    data.repelling_lo = r2lo;
    data.repelling_hi = r2hi;
  } else {
    data.attracting_lo = r2lo;
    data.attracting_hi = r2hi;
    data.repelling_lo = r1lo;
    data.repelling_hi = r1hi;
  }
  return data;
}

Int fixed_point_resultant(const GroupElement& f, const GroupElement& g) {
  FixedPointData F = fixed_points(f), G = fixed_points(g);
  const Int &a = F.c2, &b = F.c1, &c = F.c0;
  const Int &d = G.c2, &e = G.c1, &h = G.c0;
  return (a * h - c * d) * (a * h - c * d) - (a * e - b * d) * (b * h - c * e);
}

bool independent(const GroupElement& f, const GroupElement& g) {
  return fixed_point_resultant(f, g) != 0;
}

namespace {

// Image of the complement of `removed` under g lies inside `kept`?
// The complement is the arc through infinity; its image is the arc between
// the endpoint images containing g(infinity). An arc with both endpoints in
// an interval lies inside it iff one interior sample does.
bool maps_complement_inside(const GroupElement& g, const RationalInterval& removed,
                            const RationalInterval& kept) {
  ProjPoint u = apply(g, ProjPoint{false, removed.lo});
  ProjPoint v = apply(g, ProjPoint{false, removed.hi});
  ProjPoint w = apply(g, ProjPoint{true, 0});
  if (u.inf || v.inf || w.inf) return false;
  if (!kept.contains(u.v) || !kept.contains(v.v) || !kept.contains(w.v)) return false;
  const Rational& lo = std::min(u.v, v.v);
  const Rational& hi = std::max(u.v, v.v);
  return lo <= w.v && w.v <= hi;
}

bool pairwise_disjoint(const std::array<const RationalInterval*, 4>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!(xs[i]->hi < xs[j]->lo || xs[j]->hi < xs[i]->lo)) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_certificate(const PingPongCertificate& cert, std::vector<std::string>* reasons) {
  auto note = [&](const std::string& r) {
    if (reasons) reasons->push_back(r);
  };
  bool ok = true;
  if (!is_hyperbolic(cert.a) || !is_hyperbolic(cert.b)) {
    note("generators must be hyperbolic");
    ok = false;
  }
  if (cert.p < 1 || cert.q < 1) {
    note("powers must be positive");
    ok = false;
  }
  for (const auto* iv : {&cert.a_plus, &cert.a_minus, &cert.b_plus, &cert.b_minus}) {
    if (!(iv->lo < iv->hi)) {
      note("degenerate interval");
      ok = false;
    }
  }
  if (!pairwise_disjoint({&cert.a_plus, &cert.a_minus, &cert.b_plus, &cert.b_minus})) {
    note("intervals are not pairwise disjoint");
    ok = false;
  }
  if (!ok) return false;

  GroupElement ap = cert.a.power(cert.p);
  GroupElement bq = cert.b.power(cert.q);
  if (!maps_complement_inside(ap, cert.a_minus, cert.a_plus)) {
    note("a^p does not map the complement of A- into A+");
    ok = false;
  }
  if (!maps_complement_inside(ap.inverse(), cert.a_plus, cert.a_minus)) {
    note("a^-p does not map the complement of A+ into A-");
    ok = false;
  }
  if (!maps_complement_inside(bq, cert.b_minus, cert.b_plus)) {
    note("b^q does not map the complement of B- into B+");
    ok = false;
  }
  if (!maps_complement_inside(bq.inverse(), cert.b_plus, cert.b_minus)) {
    note("b^-q does not map the complement of B+ into B-");
    ok = false;
  }
  return ok;
}

SchottkySearch certify_schottky(const GroupElement& a, const GroupElement& b,
                                int max_power, int max_refinement) {
  if (!is_hyperbolic(a) || !is_hyperbolic(b)) {
    throw std::invalid_argument("certify_schottky: both elements must be hyperbolic");
  }
  if (!independent(a, b)) {
    throw std::invalid_argument("certify_schottky: elements share fixed points");
  }
  FixedPointData fa = fixed_points(a);
  FixedPointData fb = fixed_points(b);

  // Interval ladders toward each root: endpoints walk down the Stern-Brocot
  // tree from the enclosing integer cell, so they are Farey fractions
  // bracketing the root, and each level at least halves the width.
  struct Ladder {
    std::vector<RationalInterval> levels;
  };
  auto build_ladder = [&](const FixedPointData& data, bool attracting) {
    Rational tight_lo = attracting ? data.attracting_lo : data.repelling_lo;
    Rational tight_hi = attracting ? data.attracting_hi : data.repelling_hi;
    // root < x, decided exactly; the tight bracket refines until x is outside
    auto root_below = [&](const Rational& x) {
      while (tight_lo < x && x < tight_hi) {
        Rational mid = (tight_lo + tight_hi) / 2;
        if (data.sign_at(tight_lo) * data.sign_at(mid) < 0) {
          tight_hi = mid;
        } else {
          tight_lo = mid;
        }
      }
      return tight_hi <= x;
    };
    Int k = floor_div(numerator(tight_lo), denominator(tight_lo));
    if (!root_below(Rational(k + 1))) k = k + 1;
    Rational lo(k), hi(k + 1);
    Int lo_num = k, lo_den = 1, hi_num = k + 1, hi_den = 1;

    Ladder ladder;
    ladder.levels.push_back(RationalInterval{lo, hi});
    Rational width = hi - lo;
    long steps = 0;
    while (static_cast<int>(ladder.levels.size()) < max_refinement && steps < 2000000) {
      Int med_num = lo_num + hi_num;
      Int med_den = lo_den + hi_den;
      Rational med = make_ratio(med_num, med_den);
      if (root_below(med)) {
        hi_num = med_num;
        hi_den = med_den;
        hi = med;
      } else {
        lo_num = med_num;
        lo_den = med_den;
        lo = med;
      }
      ++steps;
      if (2 * (hi - lo) <= width) {
        ladder.levels.push_back(RationalInterval{lo, hi});
        width = hi - lo;
      }
    }
    return ladder;
  };
  Ladder a_plus = build_ladder(fa, true), a_minus = build_ladder(fa, false);
  Ladder b_plus = build_ladder(fb, true), b_minus = build_ladder(fb, false);

  SchottkySearch search;
  for (int total = 2; total <= 2 * max_power; ++total) {
    for (int p = std::max(1, total - max_power); p <= std::min(max_power, total - 1); ++p) {
      int q = total - p;
      int rejected = 0;
      for (int depth = 0; depth < max_refinement; ++depth) {
        PingPongCertificate cert;
        cert.a = a;
        cert.b = b;
        cert.p = p;
        cert.q = q;
        cert.a_plus = a_plus.levels[depth];
        cert.a_minus = a_minus.levels[depth];
        cert.b_plus = b_plus.levels[depth];
        cert.b_minus = b_minus.levels[depth];
        if (!pairwise_disjoint({&cert.a_plus, &cert.a_minus, &cert.b_plus, &cert.b_minus})) {
          ++rejected;
          continue;
        }
        if (verify_certificate(cert)) {
          search.transcript.push_back("accepted p=" + std::to_string(p) + " q=" +
                                      std::to_string(q) + " depth=" + std::to_string(depth));
          search.certificate = std::move(cert);
          return search;
        }
        ++rejected;
      }
      search.transcript.push_back("rejected p=" + std::to_string(p) + " q=" +
                                  std::to_string(q) + " candidates=" +
                                  std::to_string(rejected));
    }
  }
  return search;
}

FreeGroupAudit free_group_audit(const PingPongCertificate& cert, int max_len) {
  std::vector<std::string> reasons;
  if (!verify_certificate(cert, &reasons)) {
    throw std::invalid_argument("free_group_audit: invalid certificate");
  }
  FreeGroupAudit audit;
  const GroupElement letters[4] = {cert.a.power(cert.p), cert.a.power(-cert.p),
                                   cert.b.power(cert.q), cert.b.power(-cert.q)};
  const char* names[4] = {"X", "X^-1", "Y", "Y^-1"};
  auto inverse_index = [](int i) { return i ^ 1; };

  struct Frame {
    GroupElement value;
    int last_letter;
    int length;
    std::string word;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{GroupElement::identity(), -1, 0, ""});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (frame.length == max_len) continue;
    for (int i = 0; i < 4; ++i) {
      if (frame.last_letter >= 0 && i == inverse_index(frame.last_letter)) continue;
      Frame next{frame.value * letters[i], i, frame.length + 1,
                 frame.word.empty() ? names[i] : frame.word + "." + names[i]};
      ++audit.words_checked;
      bool bad = false;
      if (next.value.is_identity()) {
        ++audit.identity_words;
        bad = true;
      } else if (!is_hyperbolic(next.value)) {
        ++audit.non_hyperbolic_words;
        bad = true;
      }
      if (bad && audit.counterexamples.size() < 16) {
        audit.counterexamples.push_back(next.word);
      }
      stack.push_back(std::move(next));
    }
  }
  return audit;
}

namespace {

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto pos = text.find('/');
  if (pos == std::string::npos) return Rational(Int(text));
  return make_ratio(Int(text.substr(0, pos)), Int(text.substr(pos + 1)));
}

nlohmann::json interval_json(const RationalInterval& iv) {
  return nlohmann::json::array({rational_str(iv.lo), rational_str(iv.hi)});
}

RationalInterval interval_from_json(const nlohmann::json& j) {
  return RationalInterval{parse_rational(j.at(0).get<std::string>()),
                          parse_rational(j.at(1).get<std::string>())};
}

}  // namespace

std::string PingPongCertificate::to_json() const {
  nlohmann::json j;
  j["a"] = to_string(a);
  j["b"] = to_string(b);
  j["p"] = p;
  j["q"] = q;
  j["intervals"] = nlohmann::json::array({interval_json(a_plus), interval_json(a_minus),
                                          interval_json(b_plus), interval_json(b_minus)});
  return j.dump();
}

PingPongCertificate PingPongCertificate::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PingPongCertificate cert;
  cert.a = parse_group_element(j.at("a").get<std::string>());
  cert.b = parse_group_element(j.at("b").get<std::string>());
  cert.p = j.at("p").get<int>();
  cert.q = j.at("q").get<int>();
  const auto& ivs = j.at("intervals");
  cert.a_plus = interval_from_json(ivs.at(0));
  cert.a_minus = interval_from_json(ivs.at(1));
  cert.b_plus = interval_from_json(ivs.at(2));
  cert.b_minus = interval_from_json(ivs.at(3));
  return cert;
}

}  // namespace curvewalk
