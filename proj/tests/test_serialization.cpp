#include "braidforge/error.hpp"
#include "braidforge/random.hpp"
#include "braidforge/serialization.hpp"
#include "doctest.h"

using namespace braidforge;

TEST_CASE("normal form JSON") {
  const auto j = to_json(normal_form(parse_word("1 2", 3)));
  CHECK(j == Json::parse(R"({"n":3,"delta":0,"factors":[[3,1,2]]})"));
}

TEST_CASE("certificate JSON round trip") {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_certificate(rng, rng.uniform(2, 5), 4, 5);
    CHECK(certificate_from_json(Json::parse(to_json(c).dump())) == c);
  }
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"n":3})")), InvalidArgument);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"n":"3","bands":[]})")), InvalidArgument);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"n":3,"bands":[{"conj":"","gen":3}]})")), InvalidArgument);
}

TEST_CASE("regular form JSON") {
  const auto rf = regular_form_from_json(
      Json::parse(R"({"tubular":"1","widths":[2,2],"interiors":[{"orbit":0,"word":"-1 -1"}]})"));
  CHECK(rf.tubular == parse_word("1", 2));
  CHECK(rf.interiors == std::vector<BraidWord>{parse_word("-1 -1", 2)});
  CHECK(regular_form_from_json(to_json(rf)).interiors == rf.interiors);
  const auto sparse = regular_form_from_json(Json::parse(R"({"tubular":"","widths":[1,3]})"));
  CHECK(sparse.interiors.size() == 2);
  CHECK(sparse.interiors[1] == BraidWord(3));
  CHECK_THROWS_AS(regular_form_from_json(Json::parse(R"({"tubular":"","widths":[1],"interiors":[{"orbit":2,"word":""}]})")),
                  InvalidArgument);
}

TEST_CASE("matrix JSON") {
  const auto j = to_json(IntMatrix::from_rows({{0, -1}, {1, -1}}), 2, 3);
  CHECK(j == Json::parse(R"({"n":2,"k":3,"dim":2,"rows":[[0,-1],[1,-1]]})"));
  LaurentMatrix m(1);
  m(0, 0) = LaurentPoly::monomial(-1, 1);
  CHECK(to_json(m).at("rows") == Json::parse(R"([["-t"]])"));
}
