#include "jordan/representation.hpp"

#include <algorithm>
#include <tuple>

#include "jordan/errors.hpp"
#include "jordan/presentation.hpp"

namespace jordan {

// ---- certificates ----------------------------------------------------------

namespace {

long sat_add(long a, long b) { return std::min(a + b, kUnbounded); }
long sat_sub(long a, long b) {
  if (b >= kUnbounded) return -kUnbounded;
  if (a >= kUnbounded) return kUnbounded;
  return a - b;
}

}  // namespace

Certificate exact_certificate(std::size_t axes) { return Certificate(axes); }

Certificate certificate_product(const Certificate& a, const Certificate& b) {
  Certificate out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].rows = std::min(a[i].rows, sat_sub(b[i].rows, a[i].lower));
    out[i].cols = std::min(b[i].cols, sat_sub(a[i].cols, b[i].raise));
    out[i].lower = sat_add(a[i].lower, b[i].lower);
    out[i].raise = sat_add(a[i].raise, b[i].raise);
  }
  return out;
}

Certificate certificate_sum(const Certificate& a, const Certificate& b) {
  Certificate out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].rows = std::min(a[i].rows, b[i].rows);
    out[i].cols = std::min(a[i].cols, b[i].cols);
    out[i].lower = std::max(a[i].lower, b[i].lower);
    out[i].raise = std::max(a[i].raise, b[i].raise);
  }
  return out;
}

Certificate certificate_exp(const Certificate& a, const std::vector<Axis>& axes) {
  Certificate out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!axes[i].truncated) continue;
    const AxisCert& c = a[i];
    if (c.lower == 0) {
      out[i] = {c.rows, c.raise == 0 ? c.cols : -kUnbounded, 0, c.raise == 0 ? 0 : kUnbounded};
    } else if (c.raise == 0) {
      out[i] = {-kUnbounded, c.cols, kUnbounded, 0};
    } else {
      throw Error(ErrorKind::MarginInsufficient,
                  "exponential of an operator that both raises and lowers on a truncated axis");
    }
  }
  return out;
}

Certificate certificate_kron(const Certificate& a, const Certificate& b) {
  Certificate out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool certificate_covers(const Certificate& c, const std::vector<Axis>& axes) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (!axes[i].truncated) continue;
    long need = static_cast<long>(axes[i].certified);
    if (need > c[i].rows && need > c[i].cols) return false;
  }
  return true;
}

// ---- evaluation ------------------------------------------------------------

WordEvaluator::WordEvaluator(std::vector<Axis> axes, std::map<std::string, Operator> letters)
    : axes_(std::move(axes)), letters_(std::move(letters)) {
  for (const auto& a : axes_) dim_ *= a.size;
}

const Operator& WordEvaluator::letter(const Letter& l) {
  if (!l.is_exp()) {
    auto it = letters_.find(l.gen);
    if (it == letters_.end()) throw Error(ErrorKind::InvalidArgument, "no matrix for generator " + l.gen);
    return it->second;
  }
  auto it = exps_.find(l);
  if (it != exps_.end()) return it->second;
  const Operator& base = letter(Letter{l.gen, Rational(0)});
  Scalar c = Scalar::z() * l.slope;
  Operator e{exp_nilpotent(c * base.m), certificate_exp(base.cert, axes_)};
  return exps_.emplace(l, std::move(e)).first->second;
}

Operator WordEvaluator::eval(const Monomial& m) {
  if (m.empty()) return {Matrix::identity(dim_), exact_certificate(axes_.size())};
  Operator acc = letter(m.front());
  for (std::size_t i = 1; i < m.size(); ++i) {
    const Operator& next = letter(m[i]);
    acc.cert = certificate_product(acc.cert, next.cert);
    acc.m = acc.m * next.m;
  }
  return acc;
}

Operator WordEvaluator::eval(const Word& w) {
  Operator out{Matrix(dim_, dim_), exact_certificate(axes_.size())};
  for (const auto& [mono, coeff] : w.terms()) {
    if (!coeff.is_plain()) throw Error(ErrorKind::InvalidArgument, "eps in a word evaluated on matrices: " + w.str());
    Operator t = eval(mono);
    out.m += coeff.plain() * t.m;
    out.cert = certificate_sum(out.cert, t.cert);
  }
  return out;
}

// ---- representation --------------------------------------------------------

const char* basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::FockLower: return "fock-lower";
    case BasisKind::FockQuotient: return "fock-quotient";
    case BasisKind::MonomialUpper: return "monomial-upper";
    case BasisKind::Tensor: return "tensor";
    case BasisKind::Trivial: return "trivial";
  }
  return "?";
}

std::size_t Representation::dim() const {
  std::size_t d = 1;
  for (const auto& a : axes) d *= a.size;
  return d;
}

bool Representation::truncated() const {
  return std::any_of(axes.begin(), axes.end(), [](const Axis& a) { return a.truncated; });
}

const Matrix& Representation::matrix(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw Error(ErrorKind::InvalidArgument, "representation has no generator " + name);
  return it->second.m;
}

std::vector<std::size_t> Representation::certified_indices() const {
  std::vector<std::size_t> out;
  std::size_t n = dim();
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    bool ok = true;
    for (std::size_t a = axes.size(); a-- > 0;) {
      std::size_t coord = rest % axes[a].size;
      rest /= axes[a].size;
      if (coord >= axes[a].certified) ok = false;
    }
    if (ok) out.push_back(idx);
  }
  return out;
}

Matrix Representation::certified_block(const Matrix& m) const {
  auto idx = certified_indices();
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

WordEvaluator Representation::evaluator() const { return WordEvaluator(axes, generators); }

// ---- Fock matrices ---------------------------------------------------------

namespace {

std::vector<unsigned long> primes_upto(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p <= n; ++p) {
    bool prime = true;
    for (unsigned long q : ps) {
      if (q * q > p) break;
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(p);
  }
  return ps;
}

unsigned long legendre(unsigned long n, unsigned long p) {
  unsigned long e = 0;
  for (unsigned long q = p; q <= n; q *= p) e += n / q;
  return e;
}

// sqrt(m! r!) / d!
class FactorialRoots {
 public:
  Scalar operator()(unsigned long m, unsigned long r, unsigned long d) {
    auto key = std::make_tuple(m, r, d);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Integer outside = 1, inside = 1;
    for (unsigned long p : primes_upto(std::max(m, r))) {
      long e = static_cast<long>(legendre(m, p) + legendre(r, p)) - 2 * static_cast<long>(legendre(d, p));
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "factorial ratio is not integral");
      Integer pp = p;
      for (long i = 0; i < e / 2; ++i) outside *= pp;
      if (e % 2) inside *= pp;
    }
    if (!inside.fits_ulong_p()) throw Error(ErrorKind::Unsupported, "radicand exceeds 64 bits; lower the cutoff");
    Scalar s = Scalar::radical(inside.get_ui(), ZPolynomial(Rational(outside)));
    cache_.emplace(key, s);
    return s;
  }

 private:
  std::map<std::tuple<unsigned long, unsigned long, unsigned long>, Scalar> cache_;
};

Rational factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace

Matrix fock_matrix(const BosonExpression& expr, const std::vector<std::size_t>& sizes) {
  if (sizes.empty() || sizes.size() > 2) throw Error(ErrorKind::InvalidArgument, "one or two modes");
  if (sizes.size() == 1 && expr.uses_b()) throw Error(ErrorKind::InvalidArgument, "b mode on a one-mode basis");
  const std::size_t sa = sizes[0], sb = sizes.size() == 2 ? sizes[1] : 1;
  Matrix out(sa * sb, sa * sb);
  FactorialRoots roots;
  for (const BosonTerm& t : expr.terms()) {
    if (!t.coeff.is_plain()) throw Error(ErrorKind::InvalidArgument, "eps in a matrix coefficient");
    const Scalar c = t.coeff.plain();
    const Signature& s = t.sig;
    for (std::size_t ma = static_cast<std::size_t>(s.qa); ma < sa; ++ma) {
      const std::size_t da = ma - s.qa, ka = da + s.pa;
      for (std::size_t j = 0; ka + j < sa; ++j) {
        if (s.slope == 0 && j > 0) break;
        const std::size_t ra = ka + j;
        Rational w = 1;
        for (std::size_t i = 0; i < j; ++i) w *= 2 * s.slope;
        w /= factorial(static_cast<int>(j));
        Scalar wa = roots(ma, ra, da) * Scalar::z(static_cast<int>(j)) * w;
        for (std::size_t mb = static_cast<std::size_t>(s.qb); mb < sb; ++mb) {
          const std::size_t db = mb - s.qb, rb = db + s.pb;
          if (rb >= sb) continue;
          Scalar wb = sizes.size() == 2 ? roots(mb, rb, db) : Scalar(1L);
          out(ra * sb + rb, ma * sb + mb) += c * wa * wb;
        }
      }
    }
  }
  if (!out.entries_polynomial())
    throw Error(ErrorKind::NegativeZDegree, "matrix of " + expr.str() + " keeps negative powers of z");
  return out;
}

AxisCert fock_axis_certificate(const BosonExpression& expr, int mode, std::size_t size) {
  AxisCert c{static_cast<long>(size), static_cast<long>(size), 0, 0};
  if (mode == 1) {
    for (const auto& t : expr.terms()) {
      c.lower = std::max<long>(c.lower, t.sig.qb - t.sig.pb);
      c.raise = std::max<long>(c.raise, t.sig.pb - t.sig.qb);
    }
    return c;
  }
  // Expand exponentials far enough to see every lowering contribution; they
  // may cancel between terms, as in (e^{2z a+} - 1)/(2z) a-.
  std::map<Signature, EpsilonScalar> lowering;
  for (const auto& t : expr.terms()) {
    const Signature& s = t.sig;
    if (s.slope != 0) c.raise = kUnbounded;
    else c.raise = std::max<long>(c.raise, s.pa - s.qa);
    for (int j = 0; s.pa + j < s.qa; ++j) {
      if (s.slope == 0 && j > 0) break;
      Rational w = 1;
      for (int i = 0; i < j; ++i) w *= 2 * s.slope;
      w /= factorial(j);
      Signature key{0, s.pa + j, s.qa, s.pb, s.qb};
      lowering[key] += t.coeff * EpsilonScalar(Scalar::z(j) * w);
    }
  }
  for (const auto& [sig, coeff] : lowering)
    if (!coeff.is_zero()) c.lower = std::max<long>(c.lower, sig.qa - sig.pa);
  return c;
}

Matrix fock_matrix(const BosonExpression& expr, const BasisSpec& spec) {
  for (int mode = 0; mode < spec.modes; ++mode) {
    AxisCert c = fock_axis_certificate(expr, mode, spec.cutoff + spec.margin);
    if (c.lower > static_cast<long>(spec.margin))
      throw Error(ErrorKind::CutoffTooSmall, "margin " + std::to_string(spec.margin) + " below lowering degree " +
                                                 std::to_string(c.lower) + " of " + expr.str());
  }
  return fock_matrix(expr, std::vector<std::size_t>(spec.modes, spec.cutoff + spec.margin));
}

Representation fock_rep(const Realization& r, std::size_t cutoff, std::size_t margin) {
  if (cutoff < 1) throw Error(ErrorKind::InvalidArgument, "cutoff must be at least 1");
  Representation rep;
  rep.algebra = r.algebra;
  rep.realization = r.id;
  rep.params = r.params;
  rep.basis = {BasisKind::FockLower, r.modes, cutoff, margin};
  rep.order = r.order;
  const std::size_t size = cutoff + margin;
  rep.axes.assign(r.modes, Axis{size, cutoff, true});
  for (const auto& g : r.order) {
    const BosonExpression& x = r.at(g);
    Operator op;
    op.m = fock_matrix(x, rep.basis);
    for (int mode = 0; mode < r.modes; ++mode) op.cert.push_back(fock_axis_certificate(x, mode, size));
    rep.generators[g] = std::move(op);
  }
  return rep;
}

std::size_t quotient_dimension(const RealizationSpec& spec, const Params& params) {
  auto get = [&](const char* k) {
    auto it = params.find(k);
    if (it == params.end()) throw Error(ErrorKind::InvalidArgument, spec.id + " needs parameter " + k);
    return it->second;
  };
  Rational top;
  if (spec.quotient == "beta") {
    top = -get("beta");
  } else if (spec.quotient == "delta-beta") {
    top = get("delta") - get("beta");
  } else {
    throw Error(ErrorKind::Unsupported, spec.id + " has no finite quotient");
  }
  if (!is_integer(top) || top < 0 || (spec.quotient == "beta" && top == 0))
    throw Error(ErrorKind::InvalidBeta, spec.quotient == "beta"
                                            ? "beta must be a negative integer, got " + to_string(-top)
                                            : "delta - beta must be a non-negative integer, got " + to_string(top));
  return top.get_num().get_ui() + 1;
}

Representation quotient_rep(const Realization& r) {
  const RealizationSpec& spec = default_catalog().realization(r.id);
  const std::size_t n = quotient_dimension(spec, r.params);
  const std::size_t big = n + 4;
  Representation rep;
  rep.algebra = r.algebra;
  rep.realization = r.id;
  rep.params = r.params;
  rep.basis = {BasisKind::FockQuotient, 1, n, 0};
  rep.order = r.order;
  rep.axes = {Axis{n, n, false}};
  rep.twice_label = static_cast<int>(n) - 1;
  for (const auto& g : r.order) {
    Matrix m = fock_matrix(r.at(g), std::vector<std::size_t>{big});
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = n; col < big; ++col)
        if (!m(row, col).is_zero())
          throw Error(ErrorKind::InvalidBeta, "states above " + std::to_string(n - 1) + " do not span a submodule");
    rep.generators[g] = Operator{m.block(0, 0, n, n), exact_certificate(1)};
  }
  return rep;
}

Representation quotient_rep(const std::string& algebra, const Params& params) {
  const Presentation& pres = default_catalog().presentation(algebra);
  return quotient_rep(realization(pres.default_realization, params));
}

// ---- difference operators --------------------------------------------------

namespace {

Rational binom(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::map<std::string, Operator> difference_letters(std::size_t size, const Params& params) {
  const long s = static_cast<long>(size);
  Matrix del(size, size), x(size, size), d(size, size);
  for (std::size_t n = 1; n < size; ++n) del(n - 1, n) = Scalar(static_cast<long>(n));
  for (std::size_t n = 0; n + 1 < size; ++n) x(n + 1, n) = Scalar(1L);
  // ((x + 2z)^n - x^n) / (2z)
  for (std::size_t n = 1; n < size; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      Rational w = binom(n, k);
      for (std::size_t i = 0; i + 1 < n - k; ++i) w *= 2;
      d(k, n) = Scalar::z(static_cast<int>(n - k - 1)) * w;
    }
  std::map<std::string, Operator> out;
  out["del"] = {del, {AxisCert{s, s, 1, 0}}};
  out["D"] = {d, {AxisCert{s, s, kUnbounded, 0}}};
  out["x"] = {x, {AxisCert{s, s, 0, 1}}};
  for (const char* p : {"beta", "delta"})
    if (auto it = params.find(p); it != params.end())
      out[p] = {Scalar(it->second) * Matrix::identity(size), exact_certificate(1)};
  return out;
}

struct Candidate {
  Rational beta;
  std::string beta_label;
  bool flip_x = false, flip_z = false;
  unsigned signs = 0;
};

std::string describe(const Candidate& c, const std::vector<std::string>& order) {
  std::string s = c.beta_label;
  if (c.flip_x) s += "; x->-x";
  if (c.flip_z) s += "; z->-z";
  for (std::size_t i = 0; i < order.size(); ++i)
    if (c.signs & (1u << i)) s += "; " + order[i] + "->-" + order[i];
  return s;
}

// Build one candidate at window `size`; returns generator operators.
std::map<std::string, Operator> difference_candidate(const DifferenceSpec& spec, const std::vector<std::string>& order,
                                                     std::size_t size, Params params, const Candidate& c) {
  params["beta"] = c.beta;
  WordEvaluator ev({Axis{size, size, true}}, difference_letters(size, params));
  Matrix parity(size, size);
  for (std::size_t i = 0; i < size; ++i) parity(i, i) = Scalar(i % 2 ? -1L : 1L);
  std::map<std::string, Operator> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Operator op = ev.eval(spec.generators.at(order[i]));
    if (c.flip_x) op.m = parity * op.m * parity;
    if (c.flip_z) op.m = reflected(op.m);
    if (c.signs & (1u << i)) op.m = -op.m;
    out[order[i]] = std::move(op);
  }
  return out;
}

bool relations_hold(const Representation& rep) {
  try {
    return check_relations(rep, default_catalog().presentation(rep.algebra)).passed();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Representation monomial_rep(const std::string& algebra, const Rational& beta_plus) {
  const DifferenceSpec* spec = default_catalog().difference_for(algebra);
  if (!spec || !spec->finite) throw Error(ErrorKind::Unsupported, "no finite difference realization for " + algebra);
  if (!is_integer(beta_plus) || beta_plus < 2)
    throw Error(ErrorKind::InvalidBeta, "beta_plus - 2 must be a non-negative integer, got " + to_string(beta_plus));
  const std::size_t n = beta_plus.get_num().get_ui() - 1;
  const std::size_t size = n + 2;
  const Presentation& pres = default_catalog().presentation(algebra);
  const std::vector<std::pair<Rational, std::string>> betas{{beta_plus, "beta=beta_plus"},
                                                            {-beta_plus, "beta=-beta_plus"},
                                                            {beta_plus - 2, "beta=beta_plus-2"},
                                                            {2 - beta_plus, "beta=2-beta_plus"}};
  for (const auto& [beta, label] : betas)
    for (int flips = 0; flips < 4; ++flips)
      for (unsigned signs = 0; signs < (1u << pres.generators.size()); ++signs) {
        Candidate c{beta, label, (flips & 1) != 0, (flips & 2) != 0, signs};
        auto ops = difference_candidate(*spec, pres.generators, size, {}, c);
        bool ok = true;
        Representation rep;
        rep.algebra = algebra;
        rep.realization = spec->id;
        rep.params = {{"beta_plus", beta_plus}, {"beta", beta}};
        rep.basis = {BasisKind::MonomialUpper, 1, n, 0};
        rep.order = pres.generators;
        rep.axes = {Axis{n, n, false}};
        rep.twice_label = static_cast<int>(n) - 1;
        for (auto& [g, op] : ops) {
          // span{1..x^{n-1}} must be invariant and exactly computed
          if (op.cert[0].cols < static_cast<long>(n)) ok = false;
          for (std::size_t r = n; r < size && ok; ++r)
            for (std::size_t col = 0; col < n; ++col)
              if (!op.m(r, col).is_zero()) ok = false;
          if (!ok) break;
          rep.generators[g] = Operator{op.m.block(0, 0, n, n), exact_certificate(1)};
        }
        if (!ok || !relations_hold(rep)) continue;
        rep.normalization = describe(c, pres.generators);
        return rep;
      }
  throw Error(ErrorKind::RelationFailure, "no sign normalization of " + spec->id + " satisfies the relations");
}

Representation monomial_rep(const std::string& algebra, const Params& params, std::size_t cutoff, std::size_t margin) {
  const DifferenceSpec* spec = default_catalog().difference_for(algebra);
  if (!spec) throw Error(ErrorKind::Unsupported, "no difference realization for " + algebra);
  if (spec->finite) {
    auto it = params.find("beta_plus");
    if (it == params.end()) throw Error(ErrorKind::InvalidArgument, "finite difference modules take beta_plus");
    return monomial_rep(algebra, it->second);
  }
  const Presentation& pres = default_catalog().presentation(algebra);
  const std::size_t size = cutoff + margin;
  const Rational beta = params.count("beta") ? params.at("beta") : Rational(0);
  const std::vector<std::pair<Rational, std::string>> betas{{beta, "beta=beta"}, {-beta, "beta=-beta"}};
  for (const auto& [b, label] : betas)
    for (int flips = 0; flips < 4; ++flips)
      for (unsigned signs = 0; signs < (1u << pres.generators.size()); ++signs) {
        Candidate c{b, label, (flips & 1) != 0, (flips & 2) != 0, signs};
        Representation rep;
        rep.algebra = algebra;
        rep.realization = spec->id;
        rep.params = params;
        rep.basis = {BasisKind::MonomialUpper, 1, cutoff, margin};
        rep.order = pres.generators;
        rep.axes = {Axis{size, cutoff, true}};
        rep.generators = difference_candidate(*spec, pres.generators, size, params, c);
        if (!relations_hold(rep)) continue;
        rep.normalization = describe(c, pres.generators);
        return rep;
      }
  throw Error(ErrorKind::RelationFailure, "no sign normalization of " + spec->id + " satisfies the relations");
}

// ---- limits ----------------------------------------------------------------

Representation specialize(const Representation& rep, const Rational& z_value) {
  Representation out = rep;
  for (auto& [g, op] : out.generators) op.m = specialize(op.m, z_value);
  return out;
}

Representation classical_limit(const Representation& rep) {
  Representation out = specialize(rep, Rational(0));
  const Presentation& pres = default_catalog().presentation(rep.algebra);
  if (pres.deformation_of) out.algebra = *pres.deformation_of;
  return out;
}

Representation counit_rep(const std::string& algebra, const std::map<std::string, Scalar>& counit) {
  Representation rep;
  rep.algebra = algebra;
  rep.realization = "counit";
  rep.basis = {BasisKind::Trivial, 1, 1, 0};
  rep.order = default_catalog().presentation(algebra).generators;
  rep.axes = {Axis{1, 1, false}};
  for (const auto& g : rep.order) {
    Matrix m(1, 1);
    m(0, 0) = counit.at(g);
    rep.generators[g] = Operator{m, exact_certificate(1)};
  }
  return rep;
}

}  // namespace jordan
