#include <numeric>

#include "braidforge/cover.hpp"
#include "braidforge/error.hpp"
#include "braidforge/random.hpp"
#include "doctest.h"

using namespace braidforge;
using namespace braidforge::cover;

namespace {

BraidWord w(const char* text, int n) { return parse_word(text, n); }

// Polynomial product, lowest degree first.
IntVector poly_mul(const IntVector& a, const IntVector& b) {
  IntVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntMatrix permutation_matrix(const Permutation& p) {
  IntMatrix m(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

bool antisymmetric(const IntMatrix& m) { return transpose(m) == -1 * m; }

}  // namespace

TEST_CASE("cover_data") {
  const auto a = cover_data(3, 2);
  CHECK(a.euler_char == -1);
  CHECK(a.boundary_components == 1);
  CHECK(a.genus == 1);
  CHECK(a.h1_rank == 2);
  const auto b = cover_data(2, 2);
  CHECK(b.euler_char == 0);
  CHECK(b.boundary_components == 2);
  CHECK(b.genus == 0);
  CHECK(b.h1_rank == 1);
  const auto c = cover_data(5, 4);
  CHECK(c.euler_char == -11);
  CHECK(c.boundary_components == 1);
  CHECK(c.genus == 6);
  CHECK(c.h1_rank == 12);
  CHECK_THROWS_AS(cover_data(1, 3), InvalidArgument);
  CHECK_THROWS_AS(cover_data(3, 1), InvalidArgument);
  for (int n = 2; n <= 8; ++n)
    for (int k = 2; k <= 8; ++k) {
      const auto d = cover_data(n, k);
      CHECK(d.h1_rank == 1 - d.euler_char);
      CHECK(d.euler_char == 2 - 2 * d.genus - d.boundary_components);
      CHECK(d.genus >= 0);
    }
}

TEST_CASE("twist words") {
  CHECK(format_twist_word(lift_word(w("1", 2), 3)) == "t[1,1] t[1,2]");
  CHECK(format_twist_word(lift_word(w("-1", 2), 3)) == "t[1,2]^-1 t[1,1]^-1");
  CHECK(lift_word(BraidWord(4), 5).letters().empty());
  const auto t = parse_twist_word(" t[2,1]^-1  t[1, 3] ", 3, 4);
  CHECK(t.letters() == std::vector<TwistLetter>{{2, 1, -1}, {1, 3, 1}});
  CHECK(parse_twist_word(format_twist_word(t), 3, 4) == t);
  CHECK_THROWS_AS(parse_twist_word("t[3,1]", 3, 4), ParseError);
  CHECK_THROWS_AS(parse_twist_word("t[1,1]^2", 3, 4), ParseError);
  CHECK_THROWS_AS(parse_twist_word("s[1,1]", 3, 4), ParseError);
  CHECK_THROWS_AS(TwistWord(3, 4, {{1, 4, 1}}), InvalidArgument);
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(2, 5), k = rng.uniform(2, 5);
    const auto a = random_word(rng, n, 5), b = random_word(rng, n, 5);
    const auto la = lift_word(a, k), lb = lift_word(b, k);
    std::vector<TwistLetter> joined = la.letters();
    joined.insert(joined.end(), lb.letters().begin(), lb.letters().end());
    CHECK(lift_word(concat(a, b), k).letters() == joined);
  }
}

TEST_CASE("intersection form") {
  CHECK(intersection_form(2, 2) == IntMatrix(1, 1));
  const auto passing = passing_conventions();
  CHECK(passing.size() == 4);
  CHECK(std::find(passing.begin(), passing.end(), intersection_convention()) != passing.end());
  CHECK(intersection_convention() == IntersectionConvention{-1, 1, -1, -1});
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= 6; ++k) {
      const auto form = intersection_form(n, k);
      CHECK(antisymmetric(form));
      CHECK(rank(form) == 2 * cover_data(n, k).genus);
      for (int i = 1; i < n; ++i)
        for (int l = 1; l < k; ++l)
          for (int i2 = 1; i2 < n; ++i2)
            for (int l2 = 1; l2 < k; ++l2) {
              const auto x = (i - 1) * (k - 1) + l - 1, y = (i2 - 1) * (k - 1) + l2 - 1;
              const auto v = form(x, y);
              if (std::abs(i - i2) >= 2 || std::abs(l - l2) >= 2) CHECK(v == 0);
              if ((i == i2 && std::abs(l - l2) == 1) || (l == l2 && std::abs(i - i2) == 1))
                CHECK(std::abs(v) == 1);
            }
    }
}

TEST_CASE("deck matrix") {
  CHECK(deck_matrix(4, 2) == -1 * IntMatrix::identity(3));
  CHECK(deck_matrix(2, 3) == IntMatrix::from_rows({{0, -1}, {1, -1}}));
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= 6; ++k) {
      const auto d = deck_matrix(n, k);
      CHECK(power(d, k).is_identity());
      for (int j = 1; j < k; ++j) CHECK_FALSE(power(d, j).is_identity());
      const auto form = intersection_form(n, k);
      CHECK(transpose(d) * form * d == form);
      for (int i = 1; i < n; ++i) {
        CHECK(d * twist_class(i, k - 1, n, k) == twist_class(i, k, n, k));
        CHECK(d * twist_class(i, k, n, k) == twist_class(i, 1, n, k));
        for (int l = 1; l + 1 <= k; ++l) CHECK(d * twist_class(i, l, n, k) == twist_class(i, l + 1, n, k));
      }
    }
  const auto last = twist_class(1, 4, 3, 4);
  CHECK(last == IntVector{-1, -1, -1, 0, 0, 0});
  CHECK_THROWS_AS(twist_class(3, 1, 3, 4), InvalidArgument);
}

TEST_CASE("transvections") {
  // The boundary class of (2,2) spans the radical.
  CHECK(transvection(twist_class(1, 1, 2, 2), intersection_form(2, 2)).is_identity());
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= 4; ++k) {
      const auto form = intersection_form(n, k);
      const int d = form.rows();
      for (int i = 1; i < n; ++i)
        for (int l = 1; l <= k; ++l) {
          const auto c = twist_class(i, l, n, k);
          const auto m = transvection(c, form);
          const auto minus = m - IntMatrix::identity(d);
          CHECK((minus * minus).is_zero());
          CHECK(rank(minus) <= 1);
          CHECK(determinant(m) == 1);
          CHECK(transpose(m) * form * m == form);
          CHECK((m * transvection(c, form, -1)).is_identity());
        }
    }
}

TEST_CASE("homology_rep") {
  CHECK(homology_rep(TwistWord(3, 3)).is_identity());
  CHECK(homology_rep(lift_word(w("(1 2)^6", 3), 2)) == IntMatrix::identity(2));
  CHECK(homology_rep(lift_word(w("(1 2 3)^4", 4), 2)) == IntMatrix::identity(3));
  CHECK(homology_rep(lift_word(w("1", 2), 2)) == IntMatrix::identity(1));
  CHECK_FALSE(homology_rep(lift_word(w("(1 2)^3", 3), 2)).is_identity());
}

TEST_CASE("representation property") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k <= 4; ++k)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const auto a = BraidWord::from_signed(n, {i, j, i});
          const auto b = BraidWord::from_signed(n, {j, i, j});
          const auto c = BraidWord::from_signed(n, {i, j});
          const auto e = BraidWord::from_signed(n, {j, i});
          if (j == i + 1)
            CHECK(check_identity(lift_word(a, k), lift_word(b, k)));
          else
            CHECK(check_identity(lift_word(c, k), lift_word(e, k)));
          CHECK(homology_rep(lift_word(BraidWord::from_signed(n, {i, -i}), k)).is_identity());
        }
}

TEST_CASE("burau") {
  CHECK(burau_reduced(BraidWord(4)) == LaurentMatrix::identity(3));
  const auto s = burau_reduced(w("1", 2));
  CHECK(s(0, 0) == LaurentPoly::monomial(-1, 1));
  CHECK(to_string(s(0, 0)) == "-t");
  CHECK(to_string(burau_reduced(w("-1", 3))(0, 1)) == "t^-1");
  CHECK_THROWS_AS(burau_reduced(BraidWord(1)), InvalidArgument);
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(burau_reduced(BraidWord::from_signed(n, {i, i + 1, i})) ==
            burau_reduced(BraidWord::from_signed(n, {i + 1, i, i + 1})));
      for (int j = i + 2; j < n; ++j)
        CHECK(burau_reduced(BraidWord::from_signed(n, {i, j})) == burau_reduced(BraidWord::from_signed(n, {j, i})));
    }
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 6);
    const auto b = random_word(rng, n, rng.uniform(0, 12));
    CHECK(burau_reduced(concat(b, invert_word(b))) == LaurentMatrix::identity(n - 1));
    // At t = 1 the permutation action splits as the reduced part plus a
    // trivial line.
    const auto at_one = characteristic_polynomial(evaluate(burau_reduced(b), 1));
    const auto perm = characteristic_polynomial(permutation_matrix(underlying_permutation(b)));
    CHECK(poly_mul(at_one, {-1, 1}) == perm);
  }
}

TEST_CASE("burau at companion") {
  CHECK(burau_at_companion(BraidWord(3), 4).is_identity());
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(2, 5);
    const auto b = random_word(rng, n, rng.uniform(0, 10));
    CHECK(burau_at_companion(b, 2) == evaluate(burau_reduced(b), -1));
    const int k = rng.uniform(2, 5);
    IntMatrix product = IntMatrix::identity((n - 1) * (k - 1));
    for (const auto& a : b.letters())
      product = product * burau_at_companion(BraidWord(n, {a}), k);
    CHECK(burau_at_companion(b, k) == product);
  }
}

TEST_CASE("cross-oracle through the base change") {
  const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {3, 4}, {5, 2}};
  Rng rng(24);
  for (const auto& [n, k] : sizes) {
    const auto v = base_change(n, k);
    CHECK(std::abs(determinant(v)) == 1);
    const auto v_inv = inverse_unimodular(v);
    for (int trial = 0; trial < 25; ++trial) {
      const auto b = random_word(rng, n, rng.uniform(0, 20));
      CHECK(burau_at_companion(b, k) == v_inv * homology_rep(lift_word(b, k)) * v);
    }
  }
}

TEST_CASE("symmetry and identities") {
  CHECK(symmetry_check(TwistWord(3, 3)));
  CHECK_FALSE(symmetry_check(parse_twist_word("t[1,1]", 3, 3)));
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 5), k = rng.uniform(2, 4);
    CHECK(symmetry_check(lift_word(random_word(rng, n, rng.uniform(0, 15)), k)));
  }
  for (int n = 3; n <= 4; ++n)
    for (int k = 2; k <= 4; ++k)
      CHECK(check_identity(lift_word(w("1 2 1", n), k), lift_word(w("2 1 2", n), k)));
  CHECK(check_identity(lift_word(w("(1 2 3)^4", 4), 2), TwistWord(4, 2)));
  CHECK_FALSE(check_identity(lift_word(w("1", 3), 2), lift_word(w("2", 3), 2)));
  CHECK_THROWS_AS(check_identity(TwistWord(3, 2), TwistWord(3, 3)), InvalidArgument);
}
