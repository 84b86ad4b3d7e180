#include <doctest.h>

#include "curvewalk/schottky.hpp"

using namespace curvewalk;

namespace {
const GroupElement kA(2, 1, 1, 1);  // trace 3, golden-ratio fixed points
const GroupElement kB(1, 1, 1, 2);  // trace 3, conjugate pair
}

TEST_CASE("hyperbolicity test") {
  CHECK(is_hyperbolic(kA));
  CHECK(!is_hyperbolic(gen_R()));                    // trace 2, parabolic
  CHECK(!is_hyperbolic(GroupElement(0, -1, 1, 0)));  // trace 0, periodic
}

TEST_CASE("fixed point quadratics") {
  FixedPointData fa = fixed_points(kA);
  // x^2 - x - 1
  CHECK(fa.c2 == 1);
  CHECK(fa.c1 == -1);
  CHECK(fa.c0 == -1);
  CHECK(fa.discriminant == 5);
  // attracting root is the golden ratio, in (1,2); repelling in (-1,0)
  CHECK(fa.attracting_lo > 1);
  CHECK(fa.attracting_hi < 2);
  CHECK(fa.repelling_lo > -1);
  CHECK(fa.repelling_hi < 0);
  // brackets really straddle the roots
  CHECK(fa.sign_at(fa.attracting_lo) * fa.sign_at(fa.attracting_hi) < 0);
  CHECK(fa.sign_at(fa.repelling_lo) * fa.sign_at(fa.repelling_hi) < 0);

  FixedPointData fb = fixed_points(kB);
  CHECK(fb.c2 == 1);
  CHECK(fb.c1 == 1);
  CHECK(fb.c0 == -1);

  CHECK_THROWS_AS(fixed_points(gen_L()), std::invalid_argument);
}

TEST_CASE("powers share fixed point data") {
  CHECK(fixed_points(kA) == fixed_points(kA * kA));
  CHECK(fixed_points(kA) == fixed_points(kA.power(5)));
}

TEST_CASE("conjugates transport the quadratic") {
  GroupElement h = gen_L() * gen_R() * gen_L();
  GroupElement conj = h * kA * h.inverse();
  FixedPointData fc = fixed_points(conj);
  // transported quadratic: substitute h^-1 x into the original form
  FixedPointData fa = fixed_points(kA);
  GroupElement hi = h.inverse();
  Int p = hi.a(), q = hi.b(), r = hi.c(), s = hi.d();
  Int t2 = fa.c2 * p * p + fa.c1 * p * r + fa.c0 * r * r;
  Int t1 = 2 * fa.c2 * p * q + fa.c1 * (p * s + q * r) + 2 * fa.c0 * r * s;
  Int t0 = fa.c2 * q * q + fa.c1 * q * s + fa.c0 * s * s;
  Int g = gcd(gcd(abs(t2), abs(t1)), abs(t0));
  t2 /= g;
  t1 /= g;
  t0 /= g;
  if (t2 < 0) {
    t2 = -t2;
    t1 = -t1;
    t0 = -t0;
  }
  CHECK(fc.c2 == t2);
  CHECK(fc.c1 == t1);
  CHECK(fc.c0 == t0);
}

TEST_CASE("independence via resultant") {
  CHECK(!independent(kA, kA.power(3)));
  CHECK(independent(kA, kB));
  CHECK(fixed_point_resultant(kA, kB) != 0);
  GroupElement h = gen_R() * gen_L() * gen_L();
  CHECK(independent(kA, h * kA * h.inverse()));
}

TEST_CASE("schottky certification of the golden pair") {
  SchottkySearch search = certify_schottky(kA, kB, 10);
  REQUIRE(search.certificate.has_value());
  const PingPongCertificate& cert = *search.certificate;
  CHECK(cert.p <= 10);
  CHECK(cert.q <= 10);
  CHECK(verify_certificate(cert));

  // serialization round trip re-verifies
  PingPongCertificate loaded = PingPongCertificate::from_json(cert.to_json());
  CHECK(loaded.p == cert.p);
  CHECK(verify_certificate(loaded));

  // higher powers contract more: the same intervals certify (p+1, q)
  PingPongCertificate bumped = cert;
  bumped.p += 1;
  CHECK(verify_certificate(bumped));
  bumped = cert;
  bumped.q += 1;
  CHECK(verify_certificate(bumped));

  // intervals are pairwise disjoint: tampering the certificate must fail
  PingPongCertificate broken = cert;
  broken.a_plus = broken.a_minus;
  std::vector<std::string> reasons;
  CHECK(!verify_certificate(broken, &reasons));
  CHECK(!reasons.empty());

  CHECK_THROWS_AS(certify_schottky(kA, kA * kA, 5), std::invalid_argument);
  CHECK_THROWS_AS(certify_schottky(kA, gen_R(), 5), std::invalid_argument);
}

TEST_CASE("free group audit") {
  SchottkySearch search = certify_schottky(kA, kB, 10);
  REQUIRE(search.certificate.has_value());
  FreeGroupAudit audit = free_group_audit(*search.certificate, 4);
  // 4 + 12 + 36 + 108 reduced words
  CHECK(audit.words_checked == 160);
  CHECK(audit.identity_words == 0);
  CHECK(audit.non_hyperbolic_words == 0);
  CHECK(audit.counterexamples.empty());
}
