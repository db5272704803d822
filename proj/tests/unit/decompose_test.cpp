#include "doctest.h"
#include "jordan/decompose.hpp"
#include "jordan/errors.hpp"
#include "jordan/hopf.hpp"
#include "oracle.hpp"
#include "printers.hpp"

using namespace jordan;

namespace {

// Every generator maps the span into itself: rank does not grow when images are added.
bool span_closed(const std::vector<Vector>& span, const Representation& rep) {
  std::vector<Vector> grown = span;
  for (const auto& g : rep.order)
    for (const auto& v : span) grown.push_back(jordan::apply(rep.matrix(g), v));
  return rank_of_columns(grown) == rank_of_columns(span);
}

std::vector<int> classical_labels(int a, int b) {
  std::vector<int> out;
  for (int t = a + b; t >= std::abs(a - b); t -= 2) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("labels follow the classical rule up to 3/2 x 3/2") {
  for (const char* alg : {"sl2", "uzsl2"})
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        DecompositionResult d = decompose_product(alg, a, b);
        CHECK_MESSAGE(d.labels() == classical_labels(a, b), alg << " " << a << "/2 x " << b << "/2");
        Representation rep = tensor_product_rep(alg, a, b);
        CHECK(check_block_diagonal(d, rep).empty());
        CHECK(rank(cg_matrix(d)) == rep.dim());
      }
}

TEST_CASE("components are invariant subspaces, symbolically and at z = 1") {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    Representation rep = tensor_product_rep("uzsl2", a, b);
    DecompositionResult sym = decompose_product("uzsl2", a, b);
    DecompositionResult one = decompose_product("uzsl2", a, b, Rational(1));
    Representation rep1 = specialize(rep, Rational(1));
    REQUIRE(sym.components.size() == one.components.size());
    for (std::size_t c = 0; c < sym.components.size(); ++c) {
      CHECK(span_closed(sym.components[c].vectors, rep));
      CHECK(span_closed(one.components[c].vectors, rep1));
      std::vector<Vector> at_one;
      for (const auto& v : sym.components[c].vectors) {
        Vector w;
        for (const auto& s : v) w.push_back(specialize(s, Rational(1)));
        at_one.push_back(w);
      }
      CHECK(spans_equal(at_one, one.components[c].vectors));
    }
  }
}

TEST_CASE("half x half reproduces the deformed basis") {
  // x^a y^b at index 2a + b
  DecompositionResult d = decompose_product("uzsl2", 1, 1);
  REQUIRE(d.labels() == std::vector<int>{2, 0});
  auto vec = [](std::vector<std::string> s) {
    Vector v;
    for (const auto& t : s) v.push_back(parse_scalar(t));
    return v;
  };
  CHECK(d.components[0].vectors[0] == vec({"1", "0", "0", "0"}));
  CHECK(d.components[0].vectors[1] == vec({"0", "1/2", "1/2", "0"}));
  CHECK(d.components[0].vectors[2] == vec({"3/4*z^2", "-z/2", "z/2", "1"}));
  CHECK(d.components[1].vectors[0] == vec({"z/2", "-1/2", "1/2", "0"}));
}

TEST_CASE("flip symmetry holds and a mutated basis breaks it") {
  DecompositionResult d = decompose_product("uzsl2", 1, 1);
  CHECK(check_flip_symmetry(d));
  DecompositionResult bad = d;
  // z^2 is even under swap and z -> -z while the singlet is odd
  bad.components[1].vectors[0][0] += Scalar::z(2);
  CHECK_FALSE(check_flip_symmetry(bad));
  CHECK_FALSE(check_block_diagonal(bad, tensor_product_rep("uzsl2", 1, 1)).empty());
}

TEST_CASE("default classical top") {
  CHECK(default_classical_top(2, 2, 0) == Vector{Scalar(1L), Scalar(), Scalar(), Scalar()});
  CHECK(default_classical_top(2, 2, 1) == Vector{Scalar(), Scalar(Rational(-1, 2)), Scalar(Rational(1, 2)), Scalar()});
  Vector sq = default_classical_top(3, 3, 2);
  // ((x - y)/2)^2 = x^2/4 - xy/2 + y^2/4
  CHECK(sq[6] == Scalar(Rational(1, 4)));
  CHECK(sq[4] == Scalar(Rational(-1, 2)));
  CHECK(sq[2] == Scalar(Rational(1, 4)));
}

TEST_CASE("non-reducible input is reported") {
  Representation rep = tensor_product_rep("sl2", 1, 1);
  Representation bad = rep;
  bad.generators.at("Jm").m(0, 3) += Scalar(1L);
  try {
    decompose(bad);
    FAIL("decomposed a broken module");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCompletelyReducible);
  }
  Representation flat = rep;
  flat.generators.at("J3").m(1, 1) += Scalar(1L);
  CHECK_THROWS_AS(decompose(flat), Error);
}

TEST_CASE("coordinates in an invertible basis") {
  DecompositionResult d = decompose_product("uzsl2", 2, 1);
  Matrix c = cg_matrix(d);
  Vector target(c.rows());
  target[0] = Scalar(1L);
  target[5] = Scalar::z(1);
  Vector coords = coordinates(c, target);
  CHECK(jordan::apply(c, coords) == target);
}
