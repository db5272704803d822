#include "jordan/hopf.hpp"

#include <cmath>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "jordan/errors.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

bool HopfReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string HopfReport::str() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.check << " " << r.generator << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<Axis> joined_axes(const Representation& a, const Representation& b) {
  std::vector<Axis> axes = a.axes;
  axes.insert(axes.end(), b.axes.begin(), b.axes.end());
  return axes;
}

// Monomial values on one representation, memoized.
class MonomialCache {
 public:
  explicit MonomialCache(const Representation& rep) : ev_(rep.evaluator()) {}
  const Operator& operator()(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(m, ev_.eval(m)).first->second;
  }

 private:
  WordEvaluator ev_;
  std::map<Monomial, Operator> cache_;
};

Operator tensor_value(const TensorWord& t, MonomialCache& left, MonomialCache& right, std::size_t dim,
                      std::size_t n_axes) {
  Operator out{Matrix(dim, dim), exact_certificate(n_axes)};
  for (const auto& [key, c] : t.terms()) {
    if (!c.is_plain()) throw Error(ErrorKind::InvalidArgument, "eps in a coproduct evaluated on matrices");
    const Operator& l = left(key.first);
    const Operator& r = right(key.second);
    out.m += c.plain() * kron(l.m, r.m);
    out.cert = certificate_sum(out.cert, certificate_kron(l.cert, r.cert));
  }
  return out;
}

Representation tensor_rep(const Representation& a, const Representation& b, const HopfData& hopf, bool flip) {
  if (a.algebra != b.algebra) throw Error(ErrorKind::InvalidArgument, "tensor factors of different algebras");
  Representation out;
  out.algebra = a.algebra;
  out.realization = flip ? "flipped-coproduct" : "coproduct";
  out.params = a.params;
  out.basis = {BasisKind::Tensor, a.basis.modes + b.basis.modes, std::min(a.basis.cutoff, b.basis.cutoff),
               std::min(a.basis.margin, b.basis.margin)};
  out.order = a.order;
  out.axes = joined_axes(a, b);
  MonomialCache left(a), right(b);
  for (const auto& g : a.order) {
    TensorWord t = hopf.coproduct.at(g);
    if (flip) t = t.flipped();
    out.generators[g] = tensor_value(t, left, right, out.dim(), out.axes.size());
  }
  return out;
}

}  // namespace

Operator evaluate_tensor(const TensorWord& t, const Representation& left, const Representation& right) {
  MonomialCache l(left), r(right);
  return tensor_value(t, l, r, left.dim() * right.dim(), left.axes.size() + right.axes.size());
}

Representation coproduct_rep(const Representation& a, const Representation& b, const HopfData& hopf) {
  return tensor_rep(a, b, hopf, false);
}

Representation flipped_coproduct_rep(const Representation& a, const Representation& b, const HopfData& hopf) {
  return tensor_rep(a, b, hopf, true);
}

Operator evaluate_R(const HopfData& hopf, const Representation& a, const Representation& b) {
  if (hopf.r_matrix.empty()) throw Error(ErrorKind::Unsupported, hopf.algebra + " has no R-matrix in the catalog");
  std::vector<Axis> axes = joined_axes(a, b);
  const std::size_t dim = a.dim() * b.dim();
  Operator out{Matrix::identity(dim), exact_certificate(axes.size())};
  for (const RFactor& f : hopf.r_matrix) {
    const Operator& l = a.generators.at(f.left);
    const Operator& r = b.generators.at(f.right);
    Matrix e = exp_nilpotent(f.coeff * kron(l.m, r.m));
    Certificate c = certificate_exp(certificate_kron(l.cert, r.cert), axes);
    out.cert = certificate_product(out.cert, c);
    out.m = out.m * e;
  }
  return out;
}

Matrix embed_12(const Matrix& r, std::size_t d3) { return kron(r, Matrix::identity(d3)); }
Matrix embed_23(const Matrix& r, std::size_t d1) { return kron(Matrix::identity(d1), r); }

Matrix embed_13(const Matrix& r, std::size_t d1, std::size_t d2, std::size_t d3) {
  if (r.rows() != d1 * d3) throw Error(ErrorKind::InvalidArgument, "R13 has the wrong size");
  const std::size_t n = d1 * d2 * d3;
  Matrix out(n, n);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t k = 0; k < d3; ++k)
      for (std::size_t i2 = 0; i2 < d1; ++i2)
        for (std::size_t k2 = 0; k2 < d3; ++k2) {
          const Scalar& v = r(i * d3 + k, i2 * d3 + k2);
          if (v.is_zero()) continue;
          for (std::size_t j = 0; j < d2; ++j) out((i * d2 + j) * d3 + k, (i2 * d2 + j) * d3 + k2) = v;
        }
  return out;
}

bool check_qybe(const Matrix& rab, const Matrix& rac, const Matrix& rbc, std::size_t da, std::size_t db,
                std::size_t dc) {
  if (rab.rows() != da * db || rbc.rows() != db * dc) throw Error(ErrorKind::InvalidArgument, "R has the wrong size");
  Matrix r12 = embed_12(rab, dc), r13 = embed_13(rac, da, db, dc), r23 = embed_23(rbc, da);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

bool check_qybe(const Matrix& r) {
  auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(r.rows()))));
  if (!r.square() || d * d != r.rows()) throw Error(ErrorKind::InvalidArgument, "R must be square of size d^2");
  return check_qybe(r, r, r, d, d, d);
}

Operator inverse_certified(const Operator& op, const std::vector<Axis>& axes) {
  bool lower_ok = true, raise_ok = true;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (!axes[i].truncated) continue;
    const long size = static_cast<long>(axes[i].size);
    lower_ok = lower_ok && op.cert[i].lower == 0 && op.cert[i].rows >= size;
    raise_ok = raise_ok && op.cert[i].raise == 0 && op.cert[i].cols >= size;
  }
  if (!lower_ok && !raise_ok)
    throw Error(ErrorKind::MarginInsufficient, "cannot certify the inverse of a two-sided truncated operator");
  return Operator{inverse(op.m), op.cert};
}

// ---- checks ----------------------------------------------------------------

namespace {

std::string entry_detail(const Matrix& diff) {
  auto nz = diff.first_nonzero();
  if (!nz) return "";
  std::ostringstream os;
  os << "entry (" << nz->first << "," << nz->second << ") differs by " << diff(nz->first, nz->second).str();
  return os.str();
}

TensorWord delta_letter(const Letter& l, const HopfData& hopf) {
  const TensorWord& d = hopf.coproduct.at(l.gen);
  if (!l.is_exp()) return d;
  Word g = Word::generator(l.gen);
  if (!(d == TensorWord::tensor(Word(1L), g) + TensorWord::tensor(g, Word(1L))))
    throw Error(ErrorKind::Unsupported, "coproduct of exp(" + l.gen + ") needs a primitive " + l.gen);
  Word e = Word::exp(l.gen, l.slope);
  return TensorWord::tensor(e, e);
}

TensorWord delta_monomial(const Monomial& m, const HopfData& hopf) {
  TensorWord acc = TensorWord::tensor(Word(1L), Word(1L));
  for (const auto& l : m) acc = acc * delta_letter(l, hopf);
  return acc;
}

struct Triple {
  EpsilonScalar coeff;
  Monomial a, b, c;
};

// Sum of coeff * rho(a) (x) rho(b) (x) rho(c) on certified indices, sparse.
class TripleAccumulator {
 public:
  explicit TripleAccumulator(const Representation& rep) : rep_(rep), cache_(rep) {
    k_ = rep.certified_indices().size();
  }

  void add(const Triple& t, int sign) {
    if (!t.coeff.is_plain()) throw Error(ErrorKind::InvalidArgument, "eps in a coproduct evaluated on matrices");
    Scalar c = t.coeff.plain() * Rational(sign);
    const auto& a = nonzeros(t.a);
    const auto& b = nonzeros(t.b);
    const auto& d = nonzeros(t.c);
    const std::uint64_t n = k_ * k_ * k_;
    for (const auto& [ra, ca, va] : a) {
      Scalar cva = c * va;
      for (const auto& [rb, cb, vb] : b) {
        Scalar cvab = cva * vb;
        for (const auto& [rc, cc, vc] : d) {
          std::uint64_t row = (ra * k_ + rb) * k_ + rc, col = (ca * k_ + cb) * k_ + cc;
          acc_[row * n + col] += cvab * vc;
        }
      }
    }
  }

  std::string first_nonzero() const {
    for (const auto& [key, v] : acc_)
      if (!v.is_zero()) return "triple entry " + std::to_string(key) + " = " + v.str();
    return "";
  }

 private:
  using Entries = std::vector<std::tuple<std::uint64_t, std::uint64_t, Scalar>>;
  const Entries& nonzeros(const Monomial& m) {
    auto it = nz_.find(m);
    if (it != nz_.end()) return it->second;
    const Operator& op = cache_(m);
    if (!certificate_covers(op.cert, rep_.axes))
      throw Error(ErrorKind::MarginInsufficient, "coproduct leg not certified on the checked block");
    Matrix block = rep_.certified_block(op.m);
    Entries e;
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        if (!block(r, c).is_zero()) e.emplace_back(r, c, block(r, c));
    return nz_.emplace(m, std::move(e)).first->second;
  }

  const Representation& rep_;
  MonomialCache cache_;
  std::uint64_t k_ = 0;
  std::map<Monomial, Entries> nz_;
  std::unordered_map<std::uint64_t, Scalar> acc_;
};

Matrix certified(const Representation& rep, const Word& w, const char* what) {
  Operator op = rep.evaluator().eval(w);
  if (!certificate_covers(op.cert, rep.axes))
    throw Error(ErrorKind::MarginInsufficient, std::string(what) + " not certified on the checked block");
  return rep.certified_block(op.m);
}

}  // namespace

HopfReport check_intertwiner(const Operator& r, const HopfData& hopf, const Representation& a,
                             const Representation& b) {
  Representation delta = coproduct_rep(a, b, hopf);
  Representation sigma = flipped_coproduct_rep(a, b, hopf);
  Operator rinv = inverse_certified(r, delta.axes);
  HopfReport report;
  for (const auto& g : delta.order) {
    const Operator& d = delta.generators.at(g);
    Certificate c = certificate_product(certificate_product(r.cert, d.cert), rinv.cert);
    if (!certificate_covers(c, delta.axes) || !certificate_covers(sigma.generators.at(g).cert, delta.axes))
      throw Error(ErrorKind::MarginInsufficient, "intertwiner for " + g + " is not certified");
    Matrix diff = delta.certified_block(r.m * d.m * rinv.m) - delta.certified_block(sigma.matrix(g));
    report.results.push_back({"intertwiner", g, diff.is_zero(), entry_detail(diff)});
  }
  return report;
}

HopfReport check_hopf_axioms(const HopfData& hopf, const Representation& rep) {
  HopfReport report;
  const std::vector<std::string>& gens = rep.order;

  for (const auto& g : gens) {
    TripleAccumulator acc(rep);
    for (const auto& [key, c] : hopf.coproduct.at(g).terms()) {
      const TensorWord dl = delta_monomial(key.first, hopf), dr = delta_monomial(key.second, hopf);
      for (const auto& [k2, c2] : dl.terms()) acc.add({c * c2, k2.first, k2.second, key.second}, 1);
      for (const auto& [k2, c2] : dr.terms()) acc.add({c * c2, key.first, k2.first, k2.second}, -1);
    }
    std::string bad = acc.first_nonzero();
    report.results.push_back({"coassociativity", g, bad.empty(), bad});
  }

  Representation eps = counit_rep(rep.algebra, hopf.counit);
  WordEvaluator eps_ev = eps.evaluator();
  auto counit_of = [&](const Monomial& m) { return eps_ev.eval(m).m(0, 0); };
  for (const auto& g : gens) {
    Word left, right;
    for (const auto& [key, c] : hopf.coproduct.at(g).terms()) {
      left += EpsilonScalar(counit_of(key.first)) * Word::monomial(c, key.second);
      right += EpsilonScalar(counit_of(key.second)) * Word::monomial(c, key.first);
    }
    Matrix x = certified(rep, Word::generator(g), "generator");
    Matrix dl = certified(rep, left, "counit image") - x;
    Matrix dr = certified(rep, right, "counit image") - x;
    report.results.push_back({"counit-left", g, dl.is_zero(), entry_detail(dl)});
    report.results.push_back({"counit-right", g, dr.is_zero(), entry_detail(dr)});
  }

  for (const auto& g : gens) {
    Word left, right;
    for (const auto& [key, c] : hopf.coproduct.at(g).terms()) {
      Word l = Word::monomial(c, key.first), r = Word::monomial(1L, key.second);
      left += apply_antihomomorphism(l, hopf.antipode) * r;
      right += l * apply_antihomomorphism(r, hopf.antipode);
    }
    Matrix unit = certified(rep, Word(EpsilonScalar(hopf.counit.at(g))), "counit");
    Matrix dl = certified(rep, left, "antipode image") - unit;
    Matrix dr = certified(rep, right, "antipode image") - unit;
    report.results.push_back({"antipode-left", g, dl.is_zero(), entry_detail(dl)});
    report.results.push_back({"antipode-right", g, dr.is_zero(), entry_detail(dr)});
  }
  return report;
}

}  // namespace jordan
