#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jordan/catalog.hpp"
#include "jordan/realizations.hpp"

namespace jordan {

// Rescalings are written new = factor * old, as in the scheme files.
struct ContractionScheme {
  std::string id;
  std::string source_quantum, source_classical;
  std::string target_quantum, target_classical;
  // target generator -> (factor, source generator)
  std::map<std::string, std::pair<EpsilonScalar, std::string>> generators;
  std::map<std::string, EpsilonScalar> bosons;  // "a+", "a-", "b+", "b-"
  std::map<std::string, EpsilonScalar> params;
  EpsilonScalar z = 1L;
  EpsilonScalar casimir_prefactor = 1L;
  std::vector<std::pair<std::string, std::string>> realizations;  // source id, target id

  static ContractionScheme from_json(std::string_view text);
  // Shipped schemes: "sl2-to-poincare", "ext-to-h4".
  static ContractionScheme load(const std::string& id);
  static std::vector<std::string> shipped();

  // Source generators in terms of target ones, z_old = eps^k z_new.
  GeneratorSubstitution substitution() const;
  BosonRescaling rescaling() const;
  int z_power() const;
  const std::string& target_of(const std::string& source_algebra) const;
  bool is_classical(const std::string& source_algebra) const;
};

// Source parameters expressed through the target values, for building the
// source realization before the limit.
SymbolTable contracted_symbols(const ContractionScheme& scheme, const Params& target_params);

// Substitute, multiply by the generator factors and take eps -> 0; the result
// is checked against the target presentation (RelationFailure otherwise).
Realization contract_realization(const Realization& eps_source, const ContractionScheme& scheme,
                                 const Params& target_params);
Realization contract_realization(const std::string& source_id, const ContractionScheme& scheme,
                                 const Params& target_params);

// lim prefactor * C(source generators through the map); commutation normal form
// of the target presentation.
Word contract_casimir(const Word& casimir, const ContractionScheme& scheme, const std::string& source_algebra);
HopfData contract_hopf(const HopfData& hopf, const ContractionScheme& scheme);

bool equal_modulo_commutation(const Word& a, const Word& b, const CommutingPairs& pairs);
bool equal_modulo_commutation(const TensorWord& a, const TensorWord& b, const CommutingPairs& pairs);

struct HopfComparison {
  std::vector<std::pair<std::string, bool>> items;  // "coproduct K", ...
  bool passed() const;
};
HopfComparison compare_hopf(const HopfData& got, const HopfData& expected);

}  // namespace jordan
