#include "jordan/catalog.hpp"

#include <nlohmann/json.hpp>

#include "jordan/embedded.hpp"
#include "jordan/errors.hpp"
#include "jordan/parse.hpp"

namespace jordan {

using nlohmann::json;

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end()) throw Error(ErrorKind::InvalidArgument, std::string("unknown ") + what + " '" + key + "'");
  return it->second;
}

Presentation read_presentation(const std::string& id, const json& j) {
  Presentation p;
  p.id = id;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  auto gens = p.generator_set();
  for (const auto& g : j.at("exp_capable")) p.exp_capable.insert(g.get<std::string>());
  if (j.contains("commuting"))
    for (const auto& pair : j["commuting"]) {
      auto a = pair.at(0).get<std::string>(), b = pair.at(1).get<std::string>();
      p.commuting.insert({std::min(a, b), std::max(a, b)});
    }
  for (const auto& r : j.at("relations")) {
    Relation rel;
    rel.name = r.at("name").get<std::string>();
    rel.text = r.at("residual").get<std::string>();
    rel.residual = parse_word(rel.text, gens);
    for (const auto& [mono, c] : rel.residual.terms())
      for (const auto& l : mono)
        if (l.is_exp() && p.exp_capable.count(l.gen) == 0)
          throw Error(ErrorKind::InvalidArgument, id + ": exponential of " + l.gen + " in relation " + rel.name);
    p.relations.push_back(std::move(rel));
  }
  if (!j.at("casimir").is_null()) {
    p.casimir_text = j["casimir"].get<std::string>();
    p.casimir = parse_word(p.casimir_text, gens);
  }
  p.classical_r = j.value("classical_r", "none");
  p.default_realization = j.value("default_realization", "");
  if (j.contains("deformation_of") && !j["deformation_of"].is_null())
    p.deformation_of = j["deformation_of"].get<std::string>();
  return p;
}

HopfData read_hopf(const std::string& algebra, const json& j, const Presentation& pres) {
  HopfData h;
  h.algebra = algebra;
  auto gens = pres.generator_set();
  for (const auto& [g, text] : j.at("coproduct").items())
    h.coproduct[g] = parse_tensor_word(text.get<std::string>(), gens);
  for (const auto& [g, text] : j.at("counit").items()) h.counit[g] = parse_scalar(text.get<std::string>());
  for (const auto& [g, text] : j.at("antipode").items())
    h.antipode[g] = parse_word(text.get<std::string>(), gens);
  for (const auto& f : j.at("r_matrix")) {
    RFactor r;
    r.coeff_text = f.at("coeff").get<std::string>();
    r.coeff = parse_scalar(r.coeff_text);
    r.left = f.at("left").get<std::string>();
    r.right = f.at("right").get<std::string>();
    h.r_matrix.push_back(r);
  }
  for (const auto& g : pres.generators)
    if (!h.coproduct.count(g) || !h.counit.count(g) || !h.antipode.count(g))
      throw Error(ErrorKind::InvalidArgument, algebra + ": incomplete Hopf data for " + g);
  return h;
}

}  // namespace

Catalog Catalog::from_json(std::string_view text) {
  Catalog c;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("catalog: ") + e.what());
  }
  for (const auto& [id, j] : doc.at("presentations").items()) c.presentations_[id] = read_presentation(id, j);
  for (const auto& [id, j] : doc.at("hopf").items())
    c.hopf_[id] = read_hopf(id, j, lookup(c.presentations_, id, "algebra"));
  for (const auto& [id, j] : doc.at("realizations").items()) {
    RealizationSpec r;
    r.id = id;
    r.algebra = j.at("algebra").get<std::string>();
    lookup(c.presentations_, r.algebra, "algebra");
    r.modes = j.value("modes", 1);
    r.params = j.value("params", std::vector<std::string>{});
    r.quotient = j.value("quotient", "");
    if (j.contains("mu")) r.mu = j["mu"].get<std::string>();
    for (const auto& [g, text] : j.at("generators").items()) r.generators[g] = text.get<std::string>();
    c.realizations_[id] = r;
  }
  for (const auto& [id, j] : doc.at("difference_realizations").items()) {
    DifferenceSpec d;
    d.id = id;
    d.algebra = j.at("algebra").get<std::string>();
    d.finite = j.value("finite", true);
    const std::set<std::string> letters{"del", "D", "x", "beta", "delta"};
    for (const auto& [g, text] : j.at("generators").items()) d.generators[g] = parse_word(text.get<std::string>(), letters);
    c.difference_[id] = d;
  }
  for (const auto& [variant, j] : doc.at("quadratic").items()) {
    QuadraticSpec q;
    q.variant = variant;
    q.source = j.at("source").get<std::string>();
    q.target = j.at("target").get<std::string>();
    q.realization = j.at("realization").get<std::string>();
    auto gens = lookup(c.presentations_, q.source, "algebra").generator_set();
    for (const auto& [g, text] : j.at("basis").items()) q.basis[g] = parse_word(text.get<std::string>(), gens);
    c.quadratic_[variant] = q;
  }
  return c;
}

const Presentation& Catalog::presentation(const std::string& id) const {
  return lookup(presentations_, id, "algebra");
}
const HopfData& Catalog::hopf(const std::string& algebra) const { return lookup(hopf_, algebra, "Hopf algebra"); }
const RealizationSpec& Catalog::realization(const std::string& id) const {
  return lookup(realizations_, id, "realization");
}
const QuadraticSpec& Catalog::quadratic(const std::string& variant) const {
  return lookup(quadratic_, variant, "quadratic variant");
}

const DifferenceSpec& Catalog::difference(const std::string& id) const {
  return lookup(difference_, id, "difference realization");
}

const DifferenceSpec* Catalog::difference_for(const std::string& algebra) const {
  for (const auto& [id, d] : difference_)
    if (d.algebra == algebra) return &d;
  return nullptr;
}

const Catalog& default_catalog() {
  static const Catalog catalog = Catalog::from_json(embedded::catalog_json());
  return catalog;
}

}  // namespace jordan
