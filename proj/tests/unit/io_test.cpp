#include "doctest.h"
#include "jordan/errors.hpp"
#include "jordan/hopf.hpp"
#include "jordan/io.hpp"
#include "printers.hpp"

using namespace jordan;

TEST_CASE("scalar JSON round trip") {
  for (const char* text : {"0", "1", "-3/4*z^2 + z", "sqrt(2)*z^3 - 5/3*sqrt(6)", "29*sqrt(3)/12*z^2"}) {
    Scalar s = parse_scalar(text);
    CHECK(scalar_from_json(to_json(s)) == s);
    CHECK(scalar_from_json(Json::parse(to_json(s).dump())) == s);
  }
  CHECK_THROWS_AS(to_json(Scalar::z(-1)), Error);
  CHECK_THROWS_AS(scalar_from_json(Json("1")), Error);
}

TEST_CASE("representation documents round trip") {
  std::vector<Representation> reps{quotient_rep("uzsl2", {{"beta", -3}}), quotient_rep("uzsl2ext", {{"beta", -1}, {"delta", 1}}),
                                   monomial_rep("uzsl2", Rational(4))};
  Representation q = quotient_rep("uzsl2", {{"beta", -1}});
  reps.push_back(coproduct_rep(q, q, default_catalog().hopf("uzsl2")));
  for (const auto& rep : reps) {
    Json doc = Json::parse(representation_document(rep).dump());
    Representation back = representation_from_document(doc);
    CHECK(back.algebra == rep.algebra);
    CHECK(back.dim() == rep.dim());
    CHECK(back.params == rep.params);
    CHECK(back.normalization == rep.normalization);
    for (const auto& g : rep.order) CHECK(back.matrix(g) == rep.matrix(g));
  }
}

TEST_CASE("truncated blocks are written certified and refused on input") {
  Realization r = realization("gd-quantum", {{"beta", Rational(1, 2)}});
  Representation rep = fock_rep(r, 3, 4);
  Json doc = representation_document(rep);
  CHECK(doc["dim"] == 3);
  CHECK(doc["generators"]["Jm"].size() == 3);
  CHECK(matrix_from_json(doc["generators"]["Jm"]) == rep.certified_block(rep.matrix("Jm")));
  CHECK_THROWS_AS(representation_from_document(doc), Error);
}

TEST_CASE("malformed documents") {
  Json doc = representation_document(quotient_rep("uzsl2", {{"beta", -1}}));
  Json missing = doc;
  missing["generators"].erase("Jm");
  CHECK_THROWS_AS(representation_from_document(missing), Error);
  Json wrong = doc;
  wrong["dim"] = 3;
  CHECK_THROWS_AS(representation_from_document(wrong), Error);
  Json ragged = Json::array({Json::array({to_json(Scalar(1L))}), Json::array()});
  CHECK_THROWS_AS(matrix_from_json(ragged), Error);
}

TEST_CASE("half integers") {
  CHECK(half_integer(1) == "1/2");
  CHECK(half_integer(4) == "2");
  CHECK(parse_half_integer("3/2") == 3);
  CHECK(parse_half_integer("1") == 2);
  CHECK_THROWS_AS(parse_half_integer("1/3"), Error);
  CHECK_THROWS_AS(parse_half_integer("-1/2"), Error);
}

TEST_CASE("latex output") {
  Representation rep = quotient_rep("uzsl2", {{"beta", -1}});
  std::string jm = latex(rep.matrix("Jm"));
  CHECK(jm.find("-\\frac{1}{4} z^{2}") != std::string::npos);
  CHECK(jm.find(". & 1") != std::string::npos);
  std::string dec = latex(decompose_product("uzsl2", 1, 1));
  CHECK(dec.find("{\\bf U}_{-1}") != std::string::npos);
  CHECK(dec.find("xy") != std::string::npos);
}

TEST_CASE("decomposition document") {
  Json doc = to_json(decompose_product("uzsl2", 2, 1));
  CHECK(doc["labels"] == Json::array({"3/2", "1/2"}));
  CHECK(doc["factor_dims"] == Json::array({3, 2}));
  CHECK(doc["z"] == "symbolic");
  CHECK(doc["components"][0]["vectors"].size() == 4);
}
