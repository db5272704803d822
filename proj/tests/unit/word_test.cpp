#include "doctest.h"
#include "jordan/errors.hpp"
#include "jordan/presentation.hpp"
#include "printers.hpp"

using namespace jordan;

namespace {
const std::set<std::string> kSl2{"J3", "Jp", "Jm"};
}

TEST_CASE("word arithmetic") {
  Word a = parse_word("J3*Jp - Jp*J3", kSl2);
  CHECK(a == commutator(Word::generator("J3"), Word::generator("Jp")));
  CHECK(parse_word("exp(2*z*Jp)*exp(-2*z*Jp)", kSl2) == Word(1L));
  CHECK(parse_word(a.str(), kSl2) == a);
  CHECK_THROWS_AS(parse_word("Jq", kSl2), Error);
}

TEST_CASE("commutation normal form only uses declared pairs") {
  CommutingPairs pairs{{"Pm", "Pp"}};
  std::set<std::string> gens{"K", "Pp", "Pm"};
  CHECK(commutation_normal_form(parse_word("Pp*Pm - Pm*Pp", gens), pairs).is_zero());
  CHECK_FALSE(commutation_normal_form(parse_word("K*Pm - Pm*K", gens), pairs).is_zero());
  CHECK(commutation_normal_form(parse_word("exp(2*z*Pp)*Pm - Pm*exp(2*z*Pp)", gens), pairs).is_zero());
}

TEST_CASE("tensor words") {
  TensorWord t = parse_tensor_word("1@J3 + J3@exp(2*z*Jp)", kSl2);
  TensorWord f = t.flipped();
  CHECK(f == parse_tensor_word("J3@1 + exp(2*z*Jp)@J3", kSl2));
  CHECK(f.flipped() == t);
}

TEST_CASE("antipode as an anti-homomorphism") {
  const HopfData& h = default_catalog().hopf("uzsl2");
  Word w = apply_antihomomorphism(parse_word("J3*Jp", kSl2), h.antipode);
  CHECK(w == h.antipode.at("Jp") * h.antipode.at("J3"));
  // exp(2z Jp) -> exp(-2z Jp)
  CHECK(apply_antihomomorphism(Word::exp("Jp", 2), h.antipode) == Word::exp("Jp", -2));
}

TEST_CASE("eps substitution of generators") {
  GeneratorSubstitution sub;
  sub.images["Jp"] = {EpsilonScalar::eps(1), "Pp"};
  sub.z_power = -1;
  Word w = substitute(parse_word("z*Jp", kSl2), sub);
  CHECK(w == parse_word("z*Pp"));
  // exp(2 z Jp) -> exp(2 z Pp): z Jp is invariant
  CHECK(substitute(Word::exp("Jp", 2), sub) == Word::exp("Pp", 2));
  CHECK(epsilon_limit(parse_word("eps*Pp + K")) == parse_word("K"));
}

TEST_CASE("presentations are well formed") {
  for (const auto& [id, pres] : default_catalog().presentations()) {
    CHECK_FALSE(pres.generators.empty());
    CHECK_FALSE(pres.relations.empty());
    for (const auto& rel : pres.relations)
      for (const auto& g : rel.residual.generators()) CHECK_MESSAGE(pres.generator_set().count(g), id << " " << rel.name);
  }
}
