#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jordan/catalog.hpp"
#include "jordan/contract.hpp"
#include "jordan/decompose.hpp"
#include "jordan/errors.hpp"
#include "jordan/hopf.hpp"
#include "jordan/io.hpp"
#include "jordan/presentation.hpp"
#include "jordan/representation.hpp"

using namespace jordan;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

struct RepOptions {
  std::string algebra;  // empty: taken from --realization, else uzsl2
  std::string realization;
  std::string basis = "auto";
  std::optional<std::string> beta, delta, alpha, beta_plus;
  std::size_t cutoff = 4, margin = 4;
  std::string z = "symbolic";
  std::string input;
};

struct OutputOptions {
  std::string out;
  bool latex = false;
};

void add_rep_options(CLI::App* cmd, RepOptions& o) {
  cmd->add_option("--algebra", o.algebra, "Algebra id (uzsl2, sl2, uzsl2ext, uzpoincare, uzh4, ...)");
  cmd->add_option("--realization", o.realization, "Realization id; defaults to the algebra's own");
  cmd->add_option("--basis", o.basis, "auto | fock | quotient | monomial")
      ->check(CLI::IsMember({"auto", "fock", "quotient", "monomial"}));
  cmd->add_option("--beta", o.beta, "Rational beta");
  cmd->add_option("--delta", o.delta, "Rational delta");
  cmd->add_option("--alpha", o.alpha, "Rational alpha");
  cmd->add_option("--beta-plus", o.beta_plus, "Integer beta_+ >= 2 for the monomial basis");
  cmd->add_option("--cutoff", o.cutoff, "Certified states per mode")->check(CLI::PositiveNumber);
  cmd->add_option("--margin", o.margin, "Extra states per mode used for certification")->check(CLI::NonNegativeNumber);
  cmd->add_option("--z", o.z, "symbolic, or a rational value to specialize at");
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_flag("--latex", o.latex, "Emit LaTeX instead of JSON");
}

void emit(const OutputOptions& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.out);
  f << text << "\n";
}

void emit(const OutputOptions& o, const Json& j) { emit(o, j.dump(2)); }

std::optional<Rational> z_value(const std::string& z) {
  if (z == "symbolic") return std::nullopt;
  return parse_rational(z);
}

Params collect_params(const RepOptions& o) {
  Params p;
  if (o.beta) p["beta"] = parse_rational(*o.beta);
  if (o.delta) p["delta"] = parse_rational(*o.delta);
  if (o.alpha) p["alpha"] = parse_rational(*o.alpha);
  if (o.beta_plus) p["beta_plus"] = parse_rational(*o.beta_plus);
  return p;
}

void resolve_algebra(RepOptions& o) {
  if (!o.algebra.empty()) return;
  o.algebra = o.realization.empty() ? "uzsl2" : default_catalog().realization(o.realization).algebra;
}

Realization build_realization_for(RepOptions o) {
  resolve_algebra(o);
  const Presentation& pres = default_catalog().presentation(o.algebra);
  const std::string id = o.realization.empty() ? pres.default_realization : o.realization;
  const RealizationSpec& spec = default_catalog().realization(id);
  if (spec.algebra != o.algebra) throw Error(ErrorKind::InvalidArgument, id + " realizes " + spec.algebra + ", not " + o.algebra);
  Params p = collect_params(o);
  for (const auto& name : spec.params)
    if (!p.count(name)) throw Error(ErrorKind::InvalidArgument, id + " needs --" + name);
  return build_realization(spec, p);
}

Representation build_rep(RepOptions o) {
  resolve_algebra(o);
  Representation rep;
  if (!o.input.empty()) {
    std::ifstream f(o.input);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + o.input);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::Parse, o.input + ": " + e.what());
    }
    rep = representation_from_document(j);
  } else if (o.basis == "monomial") {
    rep = monomial_rep(o.algebra, collect_params(o), o.cutoff, o.margin);
  } else {
    Realization r = build_realization_for(o);
    const RealizationSpec& spec = default_catalog().realization(r.id);
    bool quotient = o.basis == "quotient";
    if (o.basis == "auto" && !spec.quotient.empty()) {
      try {
        quotient_dimension(spec, r.params);
        quotient = true;
      } catch (const Error&) {
      }
    }
    rep = quotient ? quotient_rep(r) : fock_rep(r, o.cutoff, o.margin);
  }
  if (auto z = z_value(o.z)) rep = specialize(rep, *z);
  return rep;
}

Json check(const std::string& name, bool passed, const std::string& detail = "") {
  Json j{{"name", name}, {"passed", passed}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

Json report_header(const std::string& suite, const Representation& rep) {
  Json j;
  j["suite"] = suite;
  j["algebra"] = rep.algebra;
  j["params"] = params_json(rep.params);
  j["basis"] = basis_json(rep.basis);
  j["dim"] = rep.certified_indices().size();
  return j;
}

void add_relations(Json& checks, const RelationReport& rep) {
  for (const auto& r : rep.results) {
    std::string detail;
    if (!r.passed && r.entry)
      detail = "entry (" + std::to_string(r.entry->first) + "," + std::to_string(r.entry->second) + ") = " + r.value.str();
    checks.push_back(check(r.name, r.passed, detail));
  }
}

void add_hopf(Json& checks, const HopfReport& rep) {
  for (const auto& r : rep.results) checks.push_back(check(r.check + " " + r.generator, r.passed, r.detail));
}

Operator r_matrix_on(const Representation& rep) {
  const HopfData& hopf = default_catalog().hopf(rep.algebra);
  return evaluate_R(hopf, rep, rep);
}

int run_verify(const std::string& suite, const RepOptions& ro, const OutputOptions& oo) {
  Representation rep = build_rep(ro);
  Json report = report_header(suite, rep);
  Json checks = Json::array();
  const Presentation& pres = default_catalog().presentation(rep.algebra);
  if (suite == "relations") {
    add_relations(checks, check_relations(rep, pres));
  } else if (suite == "casimir") {
    CasimirResult c = casimir_value(rep, pres);
    checks.push_back(check("casimir scalar", c.is_scalar, c.is_scalar ? "" : c.str()));
    if (c.is_scalar) report["value"] = c.value.str();
  } else if (suite == "qybe") {
    if (rep.truncated()) throw Error(ErrorKind::Unsupported, "qybe needs a finite representation");
    Operator r = r_matrix_on(rep);
    checks.push_back(check("R12 R13 R23 = R23 R13 R12", check_qybe(r.m)));
  } else if (suite == "intertwiner") {
    add_hopf(checks, check_intertwiner(r_matrix_on(rep), default_catalog().hopf(rep.algebra), rep, rep));
  } else if (suite == "hopf") {
    add_hopf(checks, check_hopf_axioms(default_catalog().hopf(rep.algebra), rep));
  } else if (suite == "quadratic") {
    std::string variant;
    for (const auto& [v, q] : default_catalog().quadratics())
      if (q.source == rep.algebra) variant = v;
    if (variant.empty()) throw Error(ErrorKind::Unsupported, "no quadratic basis starts from " + rep.algebra);
    report["variant"] = variant;
    try {
      Representation q = quadratic_basis(rep, variant);
      add_relations(checks, check_relations(q, default_catalog().presentation(q.algebra)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RelationFailure) throw;
      checks.push_back(check("quadratic relations", false, e.what()));
    }
  }
  bool passed = true;
  for (const auto& c : checks) passed = passed && c["passed"].get<bool>();
  report["passed"] = passed;
  report["checks"] = checks;
  emit(oo, report);
  return passed ? kPass : kCheckFailed;
}

int run_generate(const RepOptions& ro, const OutputOptions& oo, bool print_realization) {
  if (print_realization) {
    emit(oo, to_json(build_realization_for(ro)));
    return kPass;
  }
  Representation rep = build_rep(ro);
  if (oo.latex) {
    emit(oo, latex(rep));
  } else {
    emit(oo, representation_document(rep));
  }
  return kPass;
}

int run_rmatrix(const RepOptions& ro, const OutputOptions& oo) {
  Representation rep = build_rep(ro);
  Operator r = r_matrix_on(rep);
  Representation pair = coproduct_rep(rep, rep, default_catalog().hopf(rep.algebra));
  Matrix m = r.m;
  if (pair.truncated()) {
    if (!certificate_covers(r.cert, pair.axes))
      throw Error(ErrorKind::MarginInsufficient, "R is not certified on the cutoff block; raise --margin");
    m = pair.certified_block(r.m);
  }
  if (oo.latex) {
    emit(oo, latex(m));
  } else {
    emit(oo, matrix_document(rep.algebra, rep.params, pair.basis, "R", m));
  }
  return kPass;
}

int run_decompose(const std::string& algebra, const std::string& j1, const std::string& j2, const std::string& z,
                  const OutputOptions& oo) {
  DecompositionResult d = decompose_product(algebra, parse_half_integer(j1), parse_half_integer(j2), z_value(z));
  if (oo.latex) {
    emit(oo, latex(d));
  } else {
    emit(oo, to_json(d));
  }
  return kPass;
}

struct ContractOptions {
  std::string scheme;
  bool classical = false;
  bool emit_matrices = false;
  std::optional<std::string> alpha, beta, delta;
  std::size_t cutoff = 4, margin = 4;
};

int run_contract(const ContractOptions& co, const OutputOptions& oo) {
  ContractionScheme s = ContractionScheme::load(co.scheme);
  const std::string source_algebra = co.classical ? s.source_classical : s.source_quantum;
  const std::string target_algebra = s.target_of(source_algebra);
  std::string source_id, target_id;
  for (const auto& [src, tgt] : s.realizations)
    if (default_catalog().realization(src).algebra == source_algebra) {
      source_id = src;
      target_id = tgt;
    }
  Params p;
  p["alpha"] = co.alpha ? parse_rational(*co.alpha) : Rational(1);
  p["beta"] = co.beta ? parse_rational(*co.beta) : Rational(1);
  p["delta"] = co.delta ? parse_rational(*co.delta) : Rational(1);

  Json doc;
  doc["scheme"] = s.id;
  doc["source"] = source_algebra;
  doc["target"] = target_algebra;
  bool passed = true;

  Realization r = contract_realization(source_id, s, p);
  Realization direct = realization(target_id, r.params);
  bool same = true;
  for (const auto& g : r.order) same = same && r.at(g) == direct.at(g);
  doc["realization"] = to_json(r);
  doc["realization_matches"] = target_id;
  doc["realization_equal"] = same;
  passed = passed && same;

  const Presentation& sp = default_catalog().presentation(source_algebra);
  const Presentation& tp = default_catalog().presentation(target_algebra);
  if (sp.casimir && tp.casimir) {
    Word c = contract_casimir(*sp.casimir, s, source_algebra);
    bool eq = equal_modulo_commutation(c, *tp.casimir, tp.commuting);
    doc["casimir"] = Json{{"contracted", c.str()}, {"expected", tp.casimir->str()}, {"equal", eq}};
    passed = passed && eq;
  }

  HopfData h = contract_hopf(default_catalog().hopf(source_algebra), s);
  HopfComparison cmp = compare_hopf(h, default_catalog().hopf(target_algebra));
  doc["hopf"] = to_json(h);
  Json items = Json::array();
  for (const auto& [name, ok] : cmp.items) items.push_back(check(name, ok));
  doc["hopf_checks"] = items;
  passed = passed && cmp.passed();

  if (co.emit_matrices) doc["matrices"] = representation_document(fock_rep(r, co.cutoff, co.margin));
  doc["passed"] = passed;
  emit(oo, doc);
  return passed ? kPass : kCheckFailed;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidBeta:
      return kUsage;
    case ErrorKind::RelationFailure:
    case ErrorKind::NotCompletelyReducible:
    case ErrorKind::NegativeEpsilonDegree:
      return kCheckFailed;
    default:
      return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact representations of the non-standard quantum sl(2,R) family"};
  app.require_subcommand(1);
  OutputOptions out;

  RepOptions gen_opts;
  bool print_realization = false;
  auto* gen = app.add_subcommand("generate", "Representation matrices as a JSON document");
  add_rep_options(gen, gen_opts);
  add_output_options(gen, out);
  gen->add_flag("--print-realization", print_realization, "Print the boson realization instead of matrices");

  RepOptions ver_opts;
  std::string suite;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  add_rep_options(ver, ver_opts);
  ver->add_option("--suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"relations", "casimir", "qybe", "intertwiner", "hopf", "quadratic"}));
  ver->add_option("--input", ver_opts.input, "Representation document to verify instead of building one");
  ver->add_option("--out", out.out, "Output path (default stdout)");

  RepOptions rm_opts;
  auto* rm = app.add_subcommand("rmatrix", "Universal R-matrix on a pair of equal representations");
  add_rep_options(rm, rm_opts);
  rm->add_option("--input", rm_opts.input, "Representation document");
  add_output_options(rm, out);

  std::string dec_algebra = "uzsl2", j1, j2, dec_z = "symbolic";
  auto* dec = app.add_subcommand("decompose", "Reduce a tensor product of finite modules");
  dec->add_option("--j1", j1, "First label (half-integer)")->required();
  dec->add_option("--j2", j2, "Second label (half-integer)")->required();
  dec->add_option("--algebra", dec_algebra, "uzsl2 or sl2")->check(CLI::IsMember({"uzsl2", "sl2"}));
  dec->add_option("--z", dec_z, "symbolic, or a rational value");
  add_output_options(dec, out);

  ContractOptions con_opts;
  auto* con = app.add_subcommand("contract", "Apply a contraction scheme and compare with the target algebra");
  con->add_option("--scheme", con_opts.scheme, "sl2-to-poincare or ext-to-h4")
      ->required()
      ->check(CLI::IsMember(ContractionScheme::shipped()));
  con->add_flag("--classical", con_opts.classical, "Contract the undeformed algebra");
  con->add_option("--alpha", con_opts.alpha, "Target alpha (default 1)");
  con->add_option("--beta", con_opts.beta, "Target beta (default 1)");
  con->add_option("--delta", con_opts.delta, "Target delta (default 1)");
  con->add_flag("--emit-matrices", con_opts.emit_matrices, "Also emit Fock matrices of the contracted realization");
  con->add_option("--cutoff", con_opts.cutoff, "Cutoff for --emit-matrices")->check(CLI::PositiveNumber);
  con->add_option("--margin", con_opts.margin, "Margin for --emit-matrices")->check(CLI::NonNegativeNumber);
  con->add_option("--out", out.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) return run_generate(gen_opts, out, print_realization);
    if (*ver) return run_verify(suite, ver_opts, out);
    if (*rm) return run_rmatrix(rm_opts, out);
    if (*dec) return run_decompose(dec_algebra, j1, j2, dec_z, out);
    if (*con) return run_contract(con_opts, out);
  } catch (const Error& e) {
    std::cerr << "jordan: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "jordan: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
