#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jordan/catalog.hpp"
#include "jordan/realizations.hpp"
#include "jordan/representation.hpp"

namespace jordan {

struct RelationResult {
  std::string name;
  bool passed = false;
  // On failure: first nonzero residual entry (matrix level, certified
  // block coordinates) or the residual expression (realization level).
  std::optional<std::pair<std::size_t, std::size_t>> entry;
  Scalar value;
  std::string residual;
};

struct RelationReport {
  std::string algebra;
  std::vector<RelationResult> results;
  bool passed() const;
  std::string str() const;
};

// Exponential letters need the image of their generator to be exactly a+.
BosonExpression evaluate(const Word& w, const Realization& r);

// MarginInsufficient when a residual is not certified on the checked block.
RelationReport check_relations(const Representation& rep, const Presentation& pres);
RelationReport check_relations(const Realization& r, const Presentation& pres);

struct CasimirResult {
  bool is_scalar = false;
  Scalar value;  // lambda when is_scalar, else the offending entry
  std::size_t row = 0, col = 0;
  std::string str() const;
};

CasimirResult casimir_value(const Representation& rep, const Presentation& pres);
CasimirResult casimir_value(const Realization& r, const Presentation& pres);
// Casimir word of an arbitrary presentation value on a representation.
Operator evaluate_certified(const Word& w, const Representation& rep);

// Change to the quadratic basis of the given variant (sl2, poincare, h4) and
// verify the quadratic relations; RelationFailure if they do not close.
Realization quadratic_basis(const Realization& source, const std::string& variant);
Representation quadratic_basis(const Representation& source, const std::string& variant);

}  // namespace jordan
