#include "braidforge/error.hpp"
#include "braidforge/qp.hpp"
#include "braidforge/random.hpp"
#include "doctest.h"

using namespace braidforge;
using namespace braidforge::qp;

namespace {

BraidWord w(const char* text, int n) { return parse_word(text, n); }

QPCertificate b4_certificate() { return QPCertificate(4, {{w("2", 4), 3}, {w("1", 4), 2}}); }

}  // namespace

TEST_CASE("expand") {
  CHECK(expand(QPCertificate(3)).empty());
  CHECK(format_word(expand(b4_certificate())) == "2 3 -2 1 2 -1");
  CHECK(format_word(expand(QPCertificate(3, {{BraidWord(3), 1}}))) == "1");
  CHECK_THROWS_AS(QPCertificate(3, {{BraidWord(3), 3}}), InvalidArgument);
}

TEST_CASE("verify") {
  CHECK(verify(b4_certificate(), w("2 1 3 2 -1 -1", 4)));
  CHECK_FALSE(verify(QPCertificate(3), w("1", 3)));
  CHECK_THROWS_AS(verify(QPCertificate(3), w("1", 4)), StrandMismatch);
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_certificate(rng, rng.uniform(2, 6), 4, 5);
    CHECK(verify(c, expand(c)));
    CHECK(exponent_sum(expand(c)) == static_cast<std::int64_t>(c.size()));
  }
}

TEST_CASE("conjugate_certificate") {
  const auto c = b4_certificate();
  const auto same = conjugate_certificate(c, BraidWord(4));
  CHECK(same == c);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform(2, 6);
    const auto cert = random_certificate(rng, n, 4, 5);
    const auto u = random_word(rng, n, rng.uniform(0, 8));
    const auto conj = conjugate_certificate(cert, u);
    CHECK(conj.size() == cert.size());
    CHECK(exponent_sum(expand(conj)) == static_cast<std::int64_t>(cert.size()));
    CHECK(verify(conj, concat(concat(u, expand(cert)), invert_word(u))));
  }
}

TEST_CASE("sigma_1 normal form of bands") {
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      const auto c = sigma1_connector(i, n);
      CHECK(is_positive_braid(c));
      CHECK(is_equal(concat(concat(c, w("1", n)), invert_word(c)), BraidWord::from_signed(n, {i})));
    }
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto cert = random_certificate(rng, rng.uniform(2, 6), 4, 4);
    const auto s1 = to_sigma1_form(cert);
    for (const auto& b : s1.bands()) CHECK(b.gen == 1);
    CHECK(is_equal(expand(s1), expand(cert)));
  }
}

TEST_CASE("obstruct examples") {
  const auto beta = w("(1 2)^6 1^-13", 3);
  const auto v = obstruct(beta);
  CHECK(v.kind == Verdict::Kind::NotQP);
  CHECK(v.reason == Reason::NegativeExponentSum);

  const auto id = obstruct(w("1 -1", 3));
  CHECK(id.kind == Verdict::Kind::QP);
  CHECK(id.certificate->size() == 0);

  CHECK(obstruct(w("1 -2", 3)).reason == Reason::ZeroExponentNonidentity);

  const auto band = obstruct(w("1 2 -1", 3));
  REQUIRE(band.kind == Verdict::Kind::QP);
  CHECK(band.certificate->size() == 1);
  CHECK(verify(*band.certificate, w("1 2 -1", 3)));

  // Closure of s1^2 s2^-1 links the fixed strand with the other component.
  const auto linked = obstruct(w("1 1 -2", 3));
  CHECK(linked.kind == Verdict::Kind::NotQP);
  CHECK(linked.reason == Reason::AbelianizationOneNotBand);

  const auto pos = obstruct(w("1 1 2", 3));
  REQUIRE(pos.kind == Verdict::Kind::QP);
  CHECK(pos.certificate->size() == 3);
  CHECK(verify(*pos.certificate, w("1 1 2", 3)));

  const auto hidden = w("2 1 3 2 -1 -1", 4);
  REQUIRE_FALSE(is_positive_braid(hidden));
  CHECK(obstruct(hidden).kind == Verdict::Kind::Unknown);
}

TEST_CASE("obstructions are sound") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(2, 5);
    const auto cert = random_certificate(rng, n, 3, 4);
    const auto b = expand(cert);
    const auto v = obstruct(b);
    CHECK(v.kind != Verdict::Kind::NotQP);
    if (v.kind == Verdict::Kind::QP) CHECK(verify(*v.certificate, b));
  }
}

TEST_CASE("screening verdicts are conjugation invariant") {
  Rng rng(6);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.uniform(2, 4);
    const auto b = random_word(rng, n, rng.uniform(0, 7));
    if (exponent_sum(b) > 1) continue;
    const auto u = random_word(rng, n, rng.uniform(0, 6));
    const auto v1 = obstruct(b);
    const auto v2 = obstruct(concat(concat(u, b), invert_word(u)));
    if (v1.kind != Verdict::Kind::Unknown && v2.kind != Verdict::Kind::Unknown) CHECK(v1.kind == v2.kind);
  }
}

TEST_CASE("quasipositive periodic roots") {
  const auto d2 = power(half_twist(3), 2);
  const auto c3 = qp_root_periodic(d2, 3);
  REQUIRE(c3);
  CHECK(c3->size() == 2);
  CHECK(is_equal(power(expand(*c3), 3), d2));
  const auto c2 = qp_root_periodic(d2, 2);
  REQUIRE(c2);
  CHECK(c2->size() == 3);
  CHECK(is_equal(power(expand(*c2), 2), d2));
  CHECK_FALSE(qp_root_periodic(power(half_twist(2), -2), 2));
  CHECK_THROWS_AS(qp_root_periodic(w("1", 3), 2), InvalidArgument);
}
