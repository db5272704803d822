#include "jordan/io.hpp"

#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

Json to_json(const Scalar& s) {
  Json out = Json::array();
  for (const auto& [r, p] : s.terms()) {
    if (!p.is_polynomial()) throw Error(ErrorKind::NegativeZDegree, "cannot emit " + s.str());
    Json coeffs = Json::array();
    for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(to_string(p.coeff(d)));
    out.push_back(Json{{"radicand", r}, {"coeffs", coeffs}});
  }
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "scalar must be an array of radical terms");
  Scalar out;
  for (const auto& t : j) {
    std::vector<Rational> c;
    for (const auto& q : t.at("coeffs")) c.push_back(parse_rational(q.get<std::string>()));
    Radicand r = t.at("radicand").get<Radicand>();
    out += Scalar::sqrt_of(r) * Scalar(ZPolynomial::from_coefficients(std::move(c)));
  }
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error(ErrorKind::Parse, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = to_string(v);
  return out;
}

Json basis_json(const BasisSpec& basis) {
  return Json{{"kind", basis_kind_name(basis.kind)},
              {"modes", basis.modes},
              {"cutoff", basis.cutoff},
              {"margin", basis.margin}};
}

Json representation_document(const Representation& rep) {
  Json doc;
  doc["algebra"] = rep.algebra;
  doc["params"] = params_json(rep.params);
  doc["basis"] = basis_json(rep.basis);
  if (!rep.realization.empty()) doc["realization"] = rep.realization;
  if (!rep.normalization.empty()) doc["normalization"] = rep.normalization;
  if (rep.twice_label) doc["label"] = half_integer(*rep.twice_label);
  const std::size_t dim = rep.certified_indices().size();
  doc["dim"] = dim;
  Json gens = Json::object();
  for (const auto& g : rep.order) gens[g] = to_json(rep.truncated() ? rep.certified_block(rep.matrix(g)) : rep.matrix(g));
  doc["generators"] = gens;
  return doc;
}

Representation representation_from_document(const Json& j) {
  Representation rep;
  rep.algebra = j.at("algebra").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) rep.params[k] = parse_rational(v.get<std::string>());
  const std::string kind = j.at("basis").at("kind").get<std::string>();
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (kind == basis_kind_name(BasisKind::FockLower))
    throw Error(ErrorKind::Unsupported, "a truncated Fock block cannot be re-certified from a document; rebuild it");
  for (BasisKind k : {BasisKind::FockQuotient, BasisKind::MonomialUpper, BasisKind::Tensor, BasisKind::Trivial})
    if (kind == basis_kind_name(k)) rep.basis.kind = k;
  rep.basis.modes = j.at("basis").value("modes", 1);
  rep.basis.cutoff = dim;
  rep.basis.margin = 0;
  rep.axes = {Axis{dim, dim, false}};
  if (j.contains("realization")) rep.realization = j.at("realization").get<std::string>();
  if (j.contains("normalization")) rep.normalization = j.at("normalization").get<std::string>();
  if (j.contains("label")) rep.twice_label = parse_half_integer(j.at("label").get<std::string>());
  rep.order = default_catalog().presentation(rep.algebra).generators;
  for (const auto& g : rep.order) {
    if (!j.at("generators").contains(g)) throw Error(ErrorKind::InvalidArgument, "document lacks generator " + g);
    Matrix m = matrix_from_json(j.at("generators").at(g));
    if (m.rows() != dim || m.cols() != dim) throw Error(ErrorKind::InvalidArgument, g + " has the wrong size");
    rep.generators[g] = Operator{m, exact_certificate(1)};
  }
  return rep;
}

Json matrix_document(const std::string& algebra, const Params& params, const BasisSpec& basis, const std::string& name,
                     const Matrix& m) {
  Json doc;
  doc["algebra"] = algebra;
  doc["params"] = params_json(params);
  doc["basis"] = basis_json(basis);
  doc["dim"] = m.rows();
  doc["generators"] = Json{{name, to_json(m)}};
  return doc;
}

Json to_json(const Realization& r) {
  Json doc;
  doc["algebra"] = r.algebra;
  doc["realization"] = r.id;
  doc["params"] = params_json(r.params);
  Json gens = Json::object();
  for (const auto& g : r.order) gens[g] = r.at(g).str();
  doc["generators"] = gens;
  return doc;
}

Json to_json(const TensorWord& t) { return t.str(); }

Json to_json(const HopfData& h) {
  Json doc;
  doc["algebra"] = h.algebra;
  Json co = Json::object(), cu = Json::object(), an = Json::object();
  for (const auto& [g, t] : h.coproduct) co[g] = t.str();
  for (const auto& [g, s] : h.counit) cu[g] = s.str();
  for (const auto& [g, w] : h.antipode) an[g] = w.str();
  doc["coproduct"] = co;
  doc["counit"] = cu;
  doc["antipode"] = an;
  Json r = Json::array();
  for (const auto& f : h.r_matrix) r.push_back(Json{{"coeff", f.coeff.str()}, {"left", f.left}, {"right", f.right}});
  doc["r_matrix"] = r;
  return doc;
}

Json to_json(const DecompositionResult& d) {
  Json doc;
  doc["algebra"] = d.algebra;
  doc["factor_dims"] = {d.dim1, d.dim2};
  doc["z"] = d.z ? to_string(*d.z) : std::string("symbolic");
  Json labels = Json::array();
  for (int t : d.labels()) labels.push_back(half_integer(t));
  doc["labels"] = labels;
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json vs = Json::array();
    for (const auto& v : c.vectors) {
      Json col = Json::array();
      for (const auto& s : v) col.push_back(to_json(s));
      vs.push_back(std::move(col));
    }
    comps.push_back(Json{{"label", half_integer(c.twice_label)},
                         {"weight", to_string(c.weight)},
                         {"normalization", c.module.normalization},
                         {"vectors", vs}});
  }
  doc["components"] = comps;
  doc["change_of_basis"] = to_json(cg_matrix(d));
  return doc;
}

std::string half_integer(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

int parse_half_integer(const std::string& text) {
  Rational q = parse_rational(text) * 2;
  if (!is_integer(q) || q < 0) throw Error(ErrorKind::InvalidArgument, "not a non-negative half-integer: " + text);
  return static_cast<int>(q.get_num().get_si());
}

std::string latex(const Matrix& m) {
  std::ostringstream os;
  os << "\\left(\\begin{array}{" << std::string(m.cols(), 'l') << "}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << " & ";
      os << (m(r, c).is_zero() ? std::string(".") : m(r, c).latex());
    }
    os << (r + 1 < m.rows() ? " \\cr\n" : "\n");
  }
  os << "\\end{array}\\right)";
  return os.str();
}

std::string latex(const Representation& rep) {
  std::ostringstream os;
  for (const auto& g : rep.order) {
    const Matrix& m = rep.matrix(g);
    os << g << " = " << latex(rep.truncated() ? rep.certified_block(m) : m) << "\n";
  }
  return os.str();
}

namespace {

// Polynomial in x (first factor) and y (second factor) from grid coordinates.
std::string xy_polynomial(const Vector& v, std::size_t dim2) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const std::size_t a = i / dim2, b = i % dim2;
    std::string mono;
    if (a) mono += a == 1 ? "x" : "x^{" + std::to_string(a) + "}";
    if (b) mono += b == 1 ? "y" : "y^{" + std::to_string(b) + "}";
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) {
      os << v[i].latex();
    } else if (v[i] == Scalar(1L)) {
      os << mono;
    } else {
      os << "(" << v[i].latex() << ")\\," << mono;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string latex(const DecompositionResult& d) {
  std::ostringstream os;
  os << "\\begin{eqnarray}\n";
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& comp = d.components[c];
    for (std::size_t k = 0; k < comp.vectors.size(); ++k) {
      os << "{\\bf " << (c == 0 ? "E" : "U") << "}_{-" << (k + 1) << "}";
      if (c > 1) os << "^{(" << c << ")}";
      os << " &=& " << xy_polynomial(comp.vectors[k], d.dim2) << " \\nonumber\\\\\n";
    }
  }
  os << "\\end{eqnarray}";
  return os.str();
}

}  // namespace jordan
