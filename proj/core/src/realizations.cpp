#include "jordan/realizations.hpp"

#include "jordan/errors.hpp"

namespace jordan {

const BosonExpression& Realization::at(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw Error(ErrorKind::InvalidArgument, id + " has no generator " + name);
  return it->second;
}

SymbolTable parameter_symbols(const Params& params) {
  SymbolTable t;
  for (const auto& [k, v] : params) t[k] = BosonExpression(EpsilonScalar(v));
  return t;
}

Realization build_realization(const RealizationSpec& spec, const SymbolTable& symbols) {
  SymbolTable table = symbols;
  for (const auto& p : spec.params)
    if (!table.count(p)) throw Error(ErrorKind::InvalidArgument, spec.id + " needs parameter " + p);
  if (spec.mu) {
    BosonExpression mu = parse_boson(*spec.mu, table);
    if (!mu.is_scalar()) throw Error(ErrorKind::InvalidArgument, "mu must be a scalar");
    EpsilonScalar half_inv_z = EpsilonScalar(Scalar::z(-1)) * EpsilonScalar(Rational(1, 2));
    table["abar+"] = half_inv_z * (BosonExpression::exp_a(1) - BosonExpression(1L));
    table["abar-"] = BosonExpression::a_minus() + EpsilonScalar(Scalar::z()) * mu;
  }
  const Presentation& pres = default_catalog().presentation(spec.algebra);
  Realization r;
  r.id = spec.id;
  r.algebra = spec.algebra;
  r.modes = spec.modes;
  r.order = pres.generators;
  for (const auto& g : pres.generators) {
    auto it = spec.generators.find(g);
    if (it == spec.generators.end()) throw Error(ErrorKind::InvalidArgument, spec.id + " lacks generator " + g);
    BosonExpression x = parse_boson(it->second, table);
    require_z_regular(x);
    if (spec.modes == 1 && x.uses_b()) throw Error(ErrorKind::InvalidArgument, spec.id + ": b mode in a one-mode realization");
    r.generators[g] = x;
  }
  return r;
}

Realization build_realization(const RealizationSpec& spec, const Params& params) {
  Realization r = build_realization(spec, parameter_symbols(params));
  for (const auto& p : spec.params) r.params[p] = params.at(p);
  return r;
}

Realization realization(const std::string& id, const Params& params, const Catalog& catalog) {
  return build_realization(catalog.realization(id), params);
}

std::string format_params(const Params& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ", ";
    s += k + "=" + to_string(v);
  }
  return s;
}

}  // namespace jordan
