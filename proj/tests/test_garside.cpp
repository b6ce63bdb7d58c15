#include <algorithm>
#include <numeric>

#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/random.hpp"
#include "doctest.h"

using namespace braidforge;

namespace {

BraidWord w(const char* text, int n) { return parse_word(text, n); }

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j] ? 1 : 0;
  return c;
}

std::vector<int> swap_entries(std::vector<int> p, int i) {
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
  return p;
}

std::vector<int> swap_values(std::vector<int> p, int i) {
  for (int& v : p) v = v == i ? i + 1 : (v == i + 1 ? i : v);
  return p;
}

// sigma_{i+1} is a prefix (resp. suffix) of the permutation braid iff
// removing it there shortens the braid.
bool prefix(const std::vector<int>& p, int i) { return inversions(swap_entries(p, i)) == inversions(p) - 1; }
bool suffix(const std::vector<int>& p, int i) { return inversions(swap_values(p, i)) == inversions(p) - 1; }

void check_normal_form_shape(const NormalForm& nf) {
  const int n = nf.strands;
  for (const auto& f : nf.factors) {
    CHECK_FALSE(f.is_identity());
    CHECK(inversions(f.images()) != n * (n - 1) / 2);
  }
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j)
    for (int i = 0; i + 1 < n; ++i)
      if (prefix(nf.factors[j + 1].images(), i)) CHECK(suffix(nf.factors[j].images(), i));
}

}  // namespace

TEST_CASE("half twist") {
  CHECK(format_word(half_twist(2)) == "1");
  CHECK(format_word(half_twist(3)) == "1 2 1");
  CHECK_THROWS_AS(half_twist(1), InvalidArgument);
  for (int n = 2; n <= 7; ++n) {
    const auto d = half_twist(n);
    CHECK(d.length() == static_cast<std::size_t>(n * (n - 1) / 2));
    const auto p = underlying_permutation(d);
    for (int i = 0; i < n; ++i) CHECK(p[i] == n - 1 - i);
  }
  // Every positive length-3 word of B_3 reversing the strands equals Delta_3.
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) {
        const auto x = BraidWord::from_signed(3, {a, b, c});
        if (underlying_permutation(x) == underlying_permutation(half_twist(3))) CHECK(is_equal(x, half_twist(3)));
      }
}

TEST_CASE("normal form examples") {
  const auto id = normal_form(BraidWord(3));
  CHECK(id.delta_power == 0);
  CHECK(id.factors.empty());

  const auto d = normal_form(w("1 2 1", 3));
  CHECK(d.delta_power == 1);
  CHECK(d.factors.empty());

  CHECK(normal_form(w("1 -1 2", 3)) == normal_form(w("2", 3)));
  CHECK(normal_form(w("2 1 2", 3)) == normal_form(w("1 2 1", 3)));

  const auto s = normal_form(w("1 2", 3));
  CHECK(s.delta_power == 0);
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].one_based() == std::vector<int>{3, 1, 2});
}

TEST_CASE("nf_to_word round trip") {
  NormalForm zero{3, 0, {}};
  CHECK(nf_to_word(zero).empty());
  NormalForm delta{3, 1, {}};
  CHECK(is_equal(nf_to_word(delta), half_twist(3)));

  Rng rng(101);
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.uniform(2, 6);
    const auto x = random_word(rng, n, rng.uniform(0, 25));
    const auto nf = normal_form(x);
    check_normal_form_shape(nf);
    CHECK(normal_form(nf_to_word(nf)) == nf);
    CHECK(exponent_sum(nf_to_word(nf)) == exponent_sum(x));
  }
}

TEST_CASE("is_equal") {
  CHECK(is_equal(w("2 3 -2 1 2 -1", 4), w("2 1 3 2 -1 -1", 4)));
  CHECK(is_equal(w("1 2 1", 3), w("2 1 2", 3)));
  CHECK_FALSE(is_equal(w("1", 3), w("2", 3)));
  CHECK_THROWS_AS(is_equal(w("1", 3), w("1", 4)), StrandMismatch);
}

TEST_CASE("inf and sup") {
  CHECK(inf_sup(BraidWord(3)) == std::pair{0, 0});
  CHECK(inf_sup(power(half_twist(3), 2)) == std::pair{2, 2});
  CHECK(inf_sup(w("-1", 2)) == std::pair{-1, -1});
  CHECK(is_equal(concat(w("-1", 2), half_twist(2)), BraidWord(2)));
  CHECK(inf_sup(w("1 -2", 3)) == std::pair{-1, 1});
}

TEST_CASE("positivity") {
  CHECK(is_positive_braid(w("1 2 2 1 3", 4)));
  CHECK_FALSE(is_positive_braid(w("1 -2", 3)));
  CHECK(is_positive_braid(w("1 -1", 3)));
  CHECK(is_positive_braid(w("-1 2 1 2", 3)));  // = s2 s1
  CHECK_FALSE(is_positive_braid(w("2 1 -2", 3)));
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform(2, 6);
    const auto x = random_word(rng, n, rng.uniform(1, 20));
    if (exponent_sum(x) < 0) CHECK_FALSE(is_positive_braid(x));
    std::vector<int> gens;
    for (const auto& a : x.letters()) gens.push_back(a.index);
    CHECK(is_positive_braid(BraidWord::from_signed(n, gens)));
  }
}

TEST_CASE("power") {
  const auto x = w("1 -2", 3);
  CHECK(power(x, 0).empty());
  CHECK(power(x, 1) == x);
  CHECK(power(x, -1) == invert_word(x));
  CHECK(is_equal(power(w("1 2", 3), 3), power(half_twist(3), 2)));
}

TEST_CASE("periodicity") {
  CHECK(is_periodic(w("1 2", 3)));
  CHECK(is_periodic(w("1 1 2", 3)));
  CHECK_FALSE(is_periodic(w("1", 3)));
  CHECK_FALSE(is_periodic(w("1 -2", 3)));
  CHECK(is_periodic(w("1 1 1", 2)));
  CHECK(is_periodic(half_twist(4)));
  CHECK_THROWS_AS(is_periodic(BraidWord(1)), InvalidArgument);
  for (int n = 2; n <= 5; ++n)
    for (int j = -4; j <= 4; ++j) {
      CHECK(is_periodic(root_word(RootKind::Delta, j, n)));
      CHECK(is_periodic(root_word(RootKind::Gamma, j, n)));
    }
  CHECK(is_equal(power(root_word(RootKind::Delta, 1, 4), 4), power(half_twist(4), 2)));
  CHECK(is_equal(power(root_word(RootKind::Gamma, 1, 4), 3), power(half_twist(4), 2)));

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform(2, 5);
    const auto x = rng.coin() ? root_word(rng.coin() ? RootKind::Delta : RootKind::Gamma, rng.uniform(-3, 3), n)
                              : random_word(rng, n, rng.uniform(1, 8));
    const auto u = random_word(rng, n, rng.uniform(0, 8));
    CHECK(is_periodic(x) == is_periodic(concat(concat(u, x), invert_word(u))));
  }
}

TEST_CASE("Delta squared is central") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(2, 6);
    const auto d2 = power(half_twist(n), 2);
    const auto x = random_word(rng, n, rng.uniform(0, 20));
    CHECK(is_equal(concat(d2, x), concat(x, d2)));
  }
}

TEST_CASE("normal form is invariant under relation rewrites") {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform(2, 6);
    const auto x = random_word(rng, n, rng.uniform(0, 30));
    const auto y = random_rewrite(x, rng, 25);
    CHECK(normal_form(x) == normal_form(y));
  }
}

TEST_CASE("conjugacy examples") {
  const auto r1 = is_conjugate(w("1", 3), w("2", 3));
  REQUIRE(r1.verdict == ConjugacyVerdict::Conjugate);
  CHECK(is_equal(concat(concat(*r1.witness, w("1", 3)), invert_word(*r1.witness)), w("2", 3)));

  CHECK(is_conjugate(w("1", 3), w("1 -2", 3)).verdict == ConjugacyVerdict::NotConjugate);
  CHECK(is_conjugate(w("1 2", 3), w("2 1", 3)).verdict == ConjugacyVerdict::Conjugate);
  // Closures have pairwise linking numbers {1,0,0} and {2,-1,0}.
  CHECK(is_conjugate(w("1 1", 3), w("1 1 1 1 -2 -2", 3)).verdict == ConjugacyVerdict::NotConjugate);
  CHECK(is_conjugate(w("1 -2", 3), w("-1 2", 3)).verdict == ConjugacyVerdict::Conjugate);
  CHECK_THROWS_AS(is_conjugate(w("1", 3), w("1", 4)), StrandMismatch);
}

TEST_CASE("conjugacy finds verified witnesses for random conjugates") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.uniform(2, 5);
    const auto a = random_word(rng, n, rng.uniform(1, 10));
    const auto u = random_word(rng, n, rng.uniform(0, 10));
    const auto b = concat(concat(u, a), invert_word(u));
    const auto r = is_conjugate(a, b);
    REQUIRE(r.verdict == ConjugacyVerdict::Conjugate);
    CHECK(is_equal(concat(concat(*r.witness, a), invert_word(*r.witness)), b));
  }
}

TEST_CASE("budget exhaustion is reported separately") {
  const auto a = w("1 1 -2 3 -2 1 -3 2 2 -1", 4);
  const auto u = w("3 2 -1 2 -3 1", 4);
  const auto b = concat(concat(u, a), invert_word(u));
  const auto r = is_conjugate(a, b, 1);
  CHECK(r.verdict != ConjugacyVerdict::NotConjugate);
}

TEST_CASE("roots of equal powers are conjugate") {
  Rng rng(43);
  int nontrivial = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = rng.uniform(2, 4);
    const int d = rng.uniform(2, 3);
    BraidWord a = random_word(rng, n, rng.uniform(1, 6));
    if (t % 2 == 0) a = root_word(rng.coin() ? RootKind::Delta : RootKind::Gamma, rng.uniform(-2, 2), n);
    const auto u = random_word(rng, n, rng.uniform(0, 6));
    const auto b = concat(concat(u, a), invert_word(u));
    if (is_equal(power(a, d), power(b, d))) {
      ++nontrivial;
      CHECK(is_conjugate(a, b).verdict == ConjugacyVerdict::Conjugate);
    }
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("periodic roots") {
  const auto d2 = power(half_twist(3), 2);
  const auto r3 = periodic_root(d2, 3);
  REQUIRE(r3);
  CHECK(r3->kind == RootKind::Delta);
  CHECK(r3->power == 1);
  const auto r2 = periodic_root(d2, 2);
  REQUIRE(r2);
  CHECK(r2->kind == RootKind::Gamma);
  CHECK(r2->power == 1);
  CHECK_FALSE(periodic_root(w("1", 2), 2));
  CHECK_THROWS_AS(periodic_root(w("1", 3), 2), InvalidArgument);

  // The returned conjugator realises the match.
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    const int n = rng.uniform(2, 5);
    const int d = rng.uniform(1, 3);
    const auto kind = rng.coin() ? RootKind::Delta : RootKind::Gamma;
    const auto u = random_word(rng, n, rng.uniform(0, 5));
    const auto x = concat(concat(u, root_word(kind, rng.uniform(-2, 2), n)), invert_word(u));
    const auto b = power(x, d);
    const auto r = periodic_root(b, d);
    REQUIRE(r);
    const auto c = power(root_word(r->kind, r->power, n), d);
    CHECK(is_equal(concat(concat(r->conjugator, c), invert_word(r->conjugator)), b));
  }
}
