#pragma once

#include <map>
#include <string>
#include <vector>

#include "jordan/catalog.hpp"
#include "jordan/parse.hpp"

namespace jordan {

using Params = std::map<std::string, Rational>;

// Generator images as boson expressions.
struct Realization {
  std::string id;
  std::string algebra;
  int modes = 1;
  Params params;
  std::vector<std::string> order;  // presentation order
  std::map<std::string, BosonExpression> generators;

  const BosonExpression& at(const std::string& name) const;
};

SymbolTable parameter_symbols(const Params& params);

// Parameters given as symbols so contraction can feed eps-dependent values.
// Every image must be free of net negative z powers.
Realization build_realization(const RealizationSpec& spec, const SymbolTable& symbols);
Realization build_realization(const RealizationSpec& spec, const Params& params);
Realization realization(const std::string& id, const Params& params, const Catalog& catalog = default_catalog());

// "beta=-1, delta=1/2"
std::string format_params(const Params& params);

}  // namespace jordan
