#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/word.hpp"

namespace jordan {

struct Relation {
  std::string name;
  std::string text;
  Word residual;  // must vanish
};

struct Presentation {
  std::string id;
  std::vector<std::string> generators;
  std::set<std::string> exp_capable;
  CommutingPairs commuting;
  std::vector<Relation> relations;
  std::optional<Word> casimir;
  std::string casimir_text;
  std::string classical_r;
  std::string default_realization;
  std::optional<std::string> deformation_of;

  std::set<std::string> generator_set() const { return {generators.begin(), generators.end()}; }
};

// exp(coeff * left (x) right); the R-matrix is the ordered product.
struct RFactor {
  Scalar coeff;
  std::string coeff_text;
  std::string left, right;
};

struct HopfData {
  std::string algebra;
  std::map<std::string, TensorWord> coproduct;
  std::map<std::string, Scalar> counit;
  std::map<std::string, Word> antipode;
  std::vector<RFactor> r_matrix;
};

struct RealizationSpec {
  std::string id;
  std::string algebra;
  int modes = 1;
  std::vector<std::string> params;
  // "", "beta" (dimension 1 - beta) or "delta-beta" (dimension 1 + delta - beta)
  std::string quotient;
  std::optional<std::string> mu;
  std::map<std::string, std::string> generators;
};

// Difference-operator realization in the letters del (d/dx), D (discrete
// derivative with step 2z), x and the parameter letters beta, delta.
struct DifferenceSpec {
  std::string id;
  std::string algebra;
  bool finite = true;
  std::map<std::string, Word> generators;
};

struct QuadraticSpec {
  std::string variant;
  std::string source, target, realization;
  std::map<std::string, Word> basis;  // new generator -> word in source generators
};

class Catalog {
 public:
  static Catalog from_json(std::string_view text);

  const Presentation& presentation(const std::string& id) const;
  const HopfData& hopf(const std::string& algebra) const;
  const RealizationSpec& realization(const std::string& id) const;
  const QuadraticSpec& quadratic(const std::string& variant) const;
  const DifferenceSpec& difference(const std::string& id) const;
  // Difference realization of an algebra, if any.
  const DifferenceSpec* difference_for(const std::string& algebra) const;
  bool has_hopf(const std::string& algebra) const { return hopf_.count(algebra) > 0; }

  const std::map<std::string, Presentation>& presentations() const { return presentations_; }
  const std::map<std::string, RealizationSpec>& realizations() const { return realizations_; }
  const std::map<std::string, QuadraticSpec>& quadratics() const { return quadratic_; }

 private:
  std::map<std::string, Presentation> presentations_;
  std::map<std::string, HopfData> hopf_;
  std::map<std::string, RealizationSpec> realizations_;
  std::map<std::string, QuadraticSpec> quadratic_;
  std::map<std::string, DifferenceSpec> difference_;
};

// The catalog compiled into the library.
const Catalog& default_catalog();

}  // namespace jordan
