#include "jordan/contract.hpp"

#include <nlohmann/json.hpp>

#include "jordan/embedded.hpp"
#include "jordan/errors.hpp"
#include "jordan/parse.hpp"
#include "jordan/presentation.hpp"

namespace jordan {

using nlohmann::json;

namespace {

int eps_power(const EpsilonScalar& f, const std::string& what) {
  if (!f.is_monomial() || f.terms().size() != 1 || !f.terms()[0].second.is_unit())
    throw Error(ErrorKind::InvalidArgument, what + " must be a rational multiple of a power of eps");
  return f.terms()[0].first;
}

}  // namespace

ContractionScheme ContractionScheme::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("scheme: ") + e.what());
  }
  ContractionScheme s;
  s.id = j.at("id").get<std::string>();
  s.source_quantum = j.at("source").at("quantum").get<std::string>();
  s.source_classical = j.at("source").at("classical").get<std::string>();
  s.target_quantum = j.at("target").at("quantum").get<std::string>();
  s.target_classical = j.at("target").at("classical").get<std::string>();
  const auto sources = default_catalog().presentation(s.source_quantum).generator_set();
  for (const auto& [g, text] : j.at("generators").items()) {
    Word w = parse_word(text.get<std::string>(), sources);
    if (w.terms().size() != 1 || w.terms().begin()->first.size() != 1 || w.terms().begin()->first[0].is_exp())
      throw Error(ErrorKind::InvalidArgument, "generator map for " + g + " must be a multiple of one generator");
    const auto& [mono, c] = *w.terms().begin();
    eps_power(c, "factor of " + g);
    s.generators[g] = {c, mono[0].gen};
  }
  for (const auto& [m, text] : j.at("bosons").items()) {
    if (m != "a+" && m != "a-" && m != "b+" && m != "b-") throw Error(ErrorKind::InvalidArgument, "unknown mode " + m);
    s.bosons[m] = parse_coefficient(text.get<std::string>());
    eps_power(s.bosons[m], "rescaling of " + m);
  }
  for (const auto& [p, text] : j.at("params").items()) {
    s.params[p] = parse_coefficient(text.get<std::string>());
    eps_power(s.params[p], "rescaling of " + p);
  }
  if (j.contains("z")) s.z = parse_coefficient(j.at("z").get<std::string>());
  eps_power(s.z, "rescaling of z");
  if (j.contains("casimir_prefactor")) s.casimir_prefactor = parse_coefficient(j.at("casimir_prefactor").get<std::string>());
  if (j.contains("realizations"))
    for (const auto& r : j.at("realizations"))
      s.realizations.emplace_back(r.at("source").get<std::string>(), r.at("target").get<std::string>());
  return s;
}

ContractionScheme ContractionScheme::load(const std::string& id) {
  std::string_view text = embedded::scheme_json(id);
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "unknown contraction scheme " + id);
  return from_json(text);
}

std::vector<std::string> ContractionScheme::shipped() { return {"sl2-to-poincare", "ext-to-h4"}; }

int ContractionScheme::z_power() const { return -eps_power(z, "rescaling of z"); }

GeneratorSubstitution ContractionScheme::substitution() const {
  GeneratorSubstitution sub;
  for (const auto& [target, fs] : generators) sub.images[fs.second] = {fs.first.inverse(), target};
  sub.z_power = z_power();
  return sub;
}

BosonRescaling ContractionScheme::rescaling() const {
  BosonRescaling r;
  auto inv = [&](const char* m) { return bosons.count(m) ? bosons.at(m).inverse() : EpsilonScalar(1L); };
  r.a_plus = inv("a+");
  r.a_minus = inv("a-");
  r.b_plus = inv("b+");
  r.b_minus = inv("b-");
  r.z_power = z_power();
  return r;
}

bool ContractionScheme::is_classical(const std::string& source_algebra) const {
  if (source_algebra == source_quantum) return false;
  if (source_algebra == source_classical) return true;
  throw Error(ErrorKind::InvalidArgument, "scheme " + id + " does not start from " + source_algebra);
}

const std::string& ContractionScheme::target_of(const std::string& source_algebra) const {
  return is_classical(source_algebra) ? target_classical : target_quantum;
}

SymbolTable contracted_symbols(const ContractionScheme& scheme, const Params& target_params) {
  SymbolTable out;
  for (const auto& [p, v] : target_params) {
    EpsilonScalar f = scheme.params.count(p) ? scheme.params.at(p).inverse() : EpsilonScalar(1L);
    out[p] = BosonExpression(f * EpsilonScalar(v));
  }
  return out;
}

Realization contract_realization(const Realization& eps_source, const ContractionScheme& scheme,
                                 const Params& target_params) {
  const std::string& target = scheme.target_of(eps_source.algebra);
  const Presentation& pres = default_catalog().presentation(target);
  const BosonRescaling map = scheme.rescaling();
  Realization out;
  out.id = eps_source.id + "/" + scheme.id;
  out.algebra = target;
  out.modes = eps_source.modes;
  out.params = target_params;
  out.order = pres.generators;
  for (const auto& g : pres.generators) {
    auto it = scheme.generators.find(g);
    if (it == scheme.generators.end()) throw Error(ErrorKind::InvalidArgument, "scheme " + scheme.id + " lacks " + g);
    const auto& [factor, source] = it->second;
    BosonExpression x = factor * substitute(eps_source.at(source), map);
    try {
      out.generators[g] = epsilon_limit(x);
    } catch (const Error& e) {
      throw Error(ErrorKind::NegativeEpsilonDegree, g + " diverges: " + x.str());
    }
    require_z_regular(out.generators[g]);
  }
  RelationReport rep = check_relations(out, pres);
  if (!rep.passed()) throw Error(ErrorKind::RelationFailure, "contracted " + out.id + ":\n" + rep.str());
  return out;
}

Realization contract_realization(const std::string& source_id, const ContractionScheme& scheme,
                                 const Params& target_params) {
  const RealizationSpec& spec = default_catalog().realization(source_id);
  Realization src = build_realization(spec, contracted_symbols(scheme, target_params));
  Realization out = contract_realization(src, scheme, target_params);
  for (auto it = out.params.begin(); it != out.params.end();) {
    bool used = false;
    for (const auto& [src_id, tgt_id] : scheme.realizations)
      if (src_id == source_id)
        for (const auto& p : default_catalog().realization(tgt_id).params) used = used || p == it->first;
    it = used ? std::next(it) : out.params.erase(it);
  }
  return out;
}

Word contract_casimir(const Word& casimir, const ContractionScheme& scheme, const std::string& source_algebra) {
  const Presentation& pres = default_catalog().presentation(scheme.target_of(source_algebra));
  Word w = scheme.casimir_prefactor * substitute(casimir, scheme.substitution());
  return epsilon_limit(commutation_normal_form(w, pres.commuting));
}

namespace {

Word contract_image(const Word& source_word, const EpsilonScalar& factor, const ContractionScheme& scheme,
                    const CommutingPairs& pairs) {
  return epsilon_limit(commutation_normal_form(factor * substitute(source_word, scheme.substitution()), pairs));
}

}  // namespace

HopfData contract_hopf(const HopfData& hopf, const ContractionScheme& scheme) {
  const Presentation& pres = default_catalog().presentation(scheme.target_of(hopf.algebra));
  const GeneratorSubstitution sub = scheme.substitution();
  HopfData out;
  out.algebra = pres.id;
  for (const auto& [g, fs] : scheme.generators) {
    const auto& [factor, source] = fs;
    TensorWord d = factor * substitute(hopf.coproduct.at(source), sub);
    out.coproduct[g] = epsilon_limit(commutation_normal_form(d, pres.commuting));
    out.counit[g] = epsilon_limit(factor * EpsilonScalar(hopf.counit.at(source)));
    out.antipode[g] = contract_image(hopf.antipode.at(source), factor, scheme, pres.commuting);
  }
  for (const RFactor& f : hopf.r_matrix) {
    const auto& l = sub.images.at(f.left);
    const auto& r = sub.images.at(f.right);
    EpsilonScalar c = rescale_z(EpsilonScalar(f.coeff), sub.z_power) * l.first * r.first;
    RFactor t;
    try {
      t.coeff = epsilon_limit(c);
    } catch (const Error&) {
      throw Error(ErrorKind::NegativeEpsilonDegree, "R factor " + f.coeff_text + " " + f.left + "(x)" + f.right + " diverges");
    }
    t.coeff_text = t.coeff.str();
    t.left = l.second;
    t.right = r.second;
    out.r_matrix.push_back(t);
  }
  return out;
}

bool equal_modulo_commutation(const Word& a, const Word& b, const CommutingPairs& pairs) {
  return commutation_normal_form(a - b, pairs).is_zero();
}

bool equal_modulo_commutation(const TensorWord& a, const TensorWord& b, const CommutingPairs& pairs) {
  return commutation_normal_form(a - b, pairs).is_zero();
}

bool HopfComparison::passed() const {
  for (const auto& [name, ok] : items)
    if (!ok) return false;
  return true;
}

HopfComparison compare_hopf(const HopfData& got, const HopfData& expected) {
  const CommutingPairs& pairs = default_catalog().presentation(expected.algebra).commuting;
  HopfComparison cmp;
  for (const auto& [g, d] : expected.coproduct) {
    auto it = got.coproduct.find(g);
    cmp.items.emplace_back("coproduct " + g, it != got.coproduct.end() && equal_modulo_commutation(it->second, d, pairs));
  }
  for (const auto& [g, c] : expected.counit) {
    auto it = got.counit.find(g);
    cmp.items.emplace_back("counit " + g, it != got.counit.end() && it->second == c);
  }
  for (const auto& [g, w] : expected.antipode) {
    auto it = got.antipode.find(g);
    cmp.items.emplace_back("antipode " + g, it != got.antipode.end() && equal_modulo_commutation(it->second, w, pairs));
  }
  bool r_ok = got.r_matrix.size() == expected.r_matrix.size();
  for (std::size_t i = 0; r_ok && i < got.r_matrix.size(); ++i) {
    const RFactor &a = got.r_matrix[i], &b = expected.r_matrix[i];
    r_ok = a.coeff == b.coeff && a.left == b.left && a.right == b.right;
  }
  cmp.items.emplace_back("R-matrix", r_ok);
  return cmp;
}

}  // namespace jordan
