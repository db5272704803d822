#include "jordan/presentation.hpp"

#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

bool RelationReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string RelationReport::str() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.name << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.passed) {
      if (r.entry) os << " at (" << r.entry->first << "," << r.entry->second << ") = " << r.value.str();
      if (!r.residual.empty()) os << " residual " << r.residual;
    }
    os << "\n";
  }
  return os.str();
}

std::string CasimirResult::str() const {
  if (is_scalar) return value.str();
  std::ostringstream os;
  os << "not scalar: entry (" << row << "," << col << ") = " << value.str();
  return os.str();
}

// ---- realization level -----------------------------------------------------

namespace {

BosonExpression letter_image(const Letter& l, const Realization& r) {
  const BosonExpression& x = r.at(l.gen);
  if (!l.is_exp()) return x;
  if (!(x == BosonExpression::a_plus()))
    throw Error(ErrorKind::Unsupported, "exp of " + l.gen + " needs the image a+, got " + x.str());
  Rational half = l.slope / 2;
  if (!is_integer(half)) throw Error(ErrorKind::Unsupported, "exponential slope must be a multiple of 2z");
  return BosonExpression::exp_a(static_cast<int>(half.get_num().get_si()));
}

}  // namespace

BosonExpression evaluate(const Word& w, const Realization& r) {
  BosonExpression out;
  for (const auto& [mono, coeff] : w.terms()) {
    BosonExpression t(coeff);
    for (const auto& l : mono) t = t * letter_image(l, r);
    out += t;
  }
  return out;
}

RelationReport check_relations(const Realization& r, const Presentation& pres) {
  RelationReport rep{pres.id, {}};
  for (const auto& rel : pres.relations) {
    BosonExpression res = evaluate(rel.residual, r);
    RelationResult rr;
    rr.name = rel.name;
    rr.passed = res.is_zero();
    if (!rr.passed) rr.residual = res.str();
    rep.results.push_back(rr);
  }
  return rep;
}

CasimirResult casimir_value(const Realization& r, const Presentation& pres) {
  if (!pres.casimir) throw Error(ErrorKind::Unsupported, pres.id + " has no Casimir in the catalog");
  BosonExpression c = evaluate(*pres.casimir, r);
  CasimirResult out;
  if (c.is_scalar() && c.scalar_value().is_plain()) {
    out.is_scalar = true;
    out.value = c.scalar_value().plain();
  } else {
    for (const auto& t : c.terms())
      if (!t.sig.is_identity()) {
        out.value = t.coeff.is_plain() ? t.coeff.plain() : Scalar();
        break;
      }
  }
  return out;
}

// ---- matrix level ----------------------------------------------------------

Operator evaluate_certified(const Word& w, const Representation& rep) {
  WordEvaluator ev = rep.evaluator();
  Operator op = ev.eval(w);
  if (!certificate_covers(op.cert, rep.axes))
    throw Error(ErrorKind::MarginInsufficient,
                "margin " + std::to_string(rep.basis.margin) + " does not certify " + w.str() + " on the checked block");
  return op;
}

RelationReport check_relations(const Representation& rep, const Presentation& pres) {
  RelationReport report{pres.id, {}};
  WordEvaluator ev = rep.evaluator();
  for (const auto& rel : pres.relations) {
    Operator op = ev.eval(rel.residual);
    if (!certificate_covers(op.cert, rep.axes))
      throw Error(ErrorKind::MarginInsufficient, "relation " + rel.name + " is not certified with margin " +
                                                     std::to_string(rep.basis.margin));
    Matrix block = rep.certified_block(op.m);
    RelationResult rr;
    rr.name = rel.name;
    auto nz = block.first_nonzero();
    rr.passed = !nz.has_value();
    if (nz) {
      rr.entry = nz;
      rr.value = block(nz->first, nz->second);
    }
    report.results.push_back(rr);
  }
  return report;
}

CasimirResult casimir_value(const Representation& rep, const Presentation& pres) {
  if (!pres.casimir) throw Error(ErrorKind::Unsupported, pres.id + " has no Casimir in the catalog");
  Matrix c = rep.certified_block(evaluate_certified(*pres.casimir, rep).m);
  CasimirResult out;
  Scalar lambda = c.rows() ? c(0, 0) : Scalar();
  for (std::size_t r = 0; r < c.rows(); ++r)
    for (std::size_t col = 0; col < c.cols(); ++col) {
      Scalar expect = r == col ? lambda : Scalar();
      if (!(c(r, col) == expect)) {
        out.row = r;
        out.col = col;
        out.value = c(r, col);
        return out;
      }
    }
  out.is_scalar = true;
  out.value = lambda;
  return out;
}

// ---- quadratic bases -------------------------------------------------------

Realization quadratic_basis(const Realization& source, const std::string& variant) {
  const QuadraticSpec& q = default_catalog().quadratic(variant);
  if (source.algebra != q.source)
    throw Error(ErrorKind::InvalidArgument, "quadratic " + variant + " starts from " + q.source + ", not " + source.algebra);
  const Presentation& target = default_catalog().presentation(q.target);
  Realization out = source;
  out.id = source.id + "/quadratic";
  out.algebra = q.target;
  out.order = target.generators;
  out.generators.clear();
  for (const auto& g : target.generators) {
    BosonExpression x = evaluate(q.basis.at(g), source);
    require_z_regular(x);
    out.generators[g] = x;
  }
  RelationReport rep = check_relations(out, target);
  if (!rep.passed()) throw Error(ErrorKind::RelationFailure, "quadratic " + variant + ":\n" + rep.str());
  return out;
}

Representation quadratic_basis(const Representation& source, const std::string& variant) {
  const QuadraticSpec& q = default_catalog().quadratic(variant);
  if (source.algebra != q.source)
    throw Error(ErrorKind::InvalidArgument, "quadratic " + variant + " starts from " + q.source + ", not " + source.algebra);
  const Presentation& target = default_catalog().presentation(q.target);
  Representation out = source;
  out.algebra = q.target;
  out.order = target.generators;
  out.generators.clear();
  WordEvaluator ev = source.evaluator();
  for (const auto& g : target.generators) {
    Operator op = ev.eval(q.basis.at(g));
    if (!op.m.entries_polynomial()) throw Error(ErrorKind::NegativeZDegree, "quadratic generator " + g);
    out.generators[g] = std::move(op);
  }
  RelationReport rep = check_relations(out, target);
  if (!rep.passed()) throw Error(ErrorKind::RelationFailure, "quadratic " + variant + ":\n" + rep.str());
  return out;
}

}  // namespace jordan
