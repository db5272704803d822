#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jordan/epsilon.hpp"

namespace jordan {

// A generator, or exp(slope * z * generator) when slope != 0.
struct Letter {
  std::string gen;
  Rational slope;
  bool is_exp() const { return slope != 0; }
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.slope == b.slope; }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.slope < b.slope;
  }
  std::string str() const;
};

using Monomial = std::vector<Letter>;

// Element of the free algebra over EpsilonScalar (Laurent in z allowed).
class Word {
 public:
  Word() = default;
  Word(const EpsilonScalar& c);  // NOLINT
  Word(long c) : Word(EpsilonScalar(c)) {}  // NOLINT
  static Word generator(const std::string& name);
  static Word exp(const std::string& name, const Rational& slope);
  static Word monomial(const EpsilonScalar& c, Monomial m);

  const std::map<Monomial, EpsilonScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  EpsilonScalar scalar_value() const;
  std::set<std::string> generators() const;

  Word operator-() const;
  Word& operator+=(const Word& o);
  Word& operator-=(const Word& o);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend Word operator-(Word a, const Word& b) { return a -= b; }
  friend Word operator*(const Word& a, const Word& b);
  friend Word operator*(const EpsilonScalar& c, const Word& w);
  friend bool operator==(const Word& a, const Word& b) { return a.terms_ == b.terms_; }
  Word pow(int n) const;

  std::string str() const;

 private:
  void add(Monomial m, const EpsilonScalar& c);
  std::map<Monomial, EpsilonScalar> terms_;
};

Word commutator(const Word& x, const Word& y);

class TensorWord {
 public:
  using Key = std::pair<Monomial, Monomial>;
  TensorWord() = default;
  static TensorWord tensor(const Word& left, const Word& right);

  const std::map<Key, EpsilonScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorWord operator-() const;
  TensorWord& operator+=(const TensorWord& o);
  TensorWord& operator-=(const TensorWord& o);
  friend TensorWord operator+(TensorWord a, const TensorWord& b) { return a += b; }
  friend TensorWord operator-(TensorWord a, const TensorWord& b) { return a -= b; }
  friend TensorWord operator*(const TensorWord& a, const TensorWord& b);
  friend TensorWord operator*(const EpsilonScalar& c, const TensorWord& t);
  friend bool operator==(const TensorWord& a, const TensorWord& b) { return a.terms_ == b.terms_; }

  // Factor swap.
  TensorWord flipped() const;
  std::string str() const;

 private:
  void add(const Key& k, const EpsilonScalar& c);
  std::map<Key, EpsilonScalar> terms_;
};

// Generators with a common name are declared in `generators`; an empty set
// accepts any name.
Word parse_word(std::string_view text, const std::set<std::string>& generators = {});
TensorWord parse_tensor_word(std::string_view text, const std::set<std::string>& generators = {});

// Linear substitution: each generator g is replaced by factor(g) * image(g),
// and z_old = eps^z_power z_new. Exponential letters exp(s z g) are carried to
// exp(s z image) when the image is a single generator and the rescaling leaves
// the exponent invariant; InvalidArgument otherwise.
struct GeneratorSubstitution {
  std::map<std::string, std::pair<EpsilonScalar, std::string>> images;
  int z_power = 0;
};
Word substitute(const Word& w, const GeneratorSubstitution& sub);
TensorWord substitute(const TensorWord& t, const GeneratorSubstitution& sub);

// Apply eps -> 0 to every coefficient.
Word epsilon_limit(const Word& w);
TensorWord epsilon_limit(const TensorWord& t);

// Anti-homomorphism defined on generators: gamma(xy) = gamma(y) gamma(x),
// gamma(exp(s z X)) = exp(s z gamma(X)) which requires gamma(X) = -X.
Word apply_antihomomorphism(const Word& w, const std::map<std::string, Word>& images);

// Pairs of generators declared to commute.
using CommutingPairs = std::set<std::pair<std::string, std::string>>;
// Canonical representative modulo the declared commutations (and merging of
// adjacent exponentials of one generator).
Word commutation_normal_form(const Word& w, const CommutingPairs& pairs);
TensorWord commutation_normal_form(const TensorWord& t, const CommutingPairs& pairs);

}  // namespace jordan
