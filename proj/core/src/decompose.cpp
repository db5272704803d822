#include "jordan/decompose.hpp"

#include <algorithm>

#include "jordan/catalog.hpp"
#include "jordan/errors.hpp"
#include "jordan/hopf.hpp"

namespace jordan {

std::vector<int> DecompositionResult::labels() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.twice_label);
  return out;
}

namespace {

void require_sl2_family(const std::string& algebra) {
  if (algebra != "uzsl2" && algebra != "sl2")
    throw Error(ErrorKind::Unsupported, "decomposition is implemented for sl2 and uzsl2, not " + algebra);
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = v[i] * s;
  return out;
}

Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

Vector divided(const Vector& v, const Scalar& d) {
  if (d.is_unit()) return scaled(v, Scalar(Rational(1) / d.as_rational()));
  if (!d.is_rational()) throw Error(ErrorKind::Unsupported, "division by a radical " + d.str());
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_rational()) throw Error(ErrorKind::Unsupported, "division of a radical entry");
    out[i] = Scalar(ZPolynomial::divexact(v[i].rational_part(), d.rational_part()));
  }
  return out;
}

bool lex_support_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool na = !a[i].is_zero(), nb = !b[i].is_zero();
    if (na != nb) return na;
  }
  return false;
}

// Coefficients of the monic characteristic polynomial, c[k] multiplies t^k.
std::vector<Rational> charpoly(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * m + c[n-k+1] * I, c[n-k] = -tr(a m) / k
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& t) {
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& root) {
  std::vector<Rational> out(c.size() - 1);
  Rational carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = carry * root + c[k];
    out[k - 1] = carry;
  }
  return out;
}

// All roots with multiplicity; NonRationalEigenvalue otherwise.
std::vector<Rational> rational_roots(std::vector<Rational> c) {
  std::vector<Rational> roots;
  while (c.size() > 1) {
    if (c[0] == 0) {
      roots.push_back(0);
      c.erase(c.begin());
      continue;
    }
    mpz_class den = 1;
    for (const auto& q : c) den = lcm(den, mpz_class(q.get_den()));
    mpz_class lead = mpz_class(c.back() * den), cst = mpz_class(c.front() * den);
    bool found = false;
    for (const auto& p : divisors(cst)) {
      for (const auto& q : divisors(lead)) {
        for (int s : {1, -1}) {
          Rational t(p * s, q);
          t.canonicalize();
          if (eval_poly(c, t) == 0) {
            roots.push_back(t);
            c = deflate(c, t);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw Error(ErrorKind::NonRationalEigenvalue, "characteristic polynomial has an irrational root");
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Matrix label_module_matrix(const Component& c, const std::string& g) { return c.module.matrix(g); }

}  // namespace

Vector default_classical_top(std::size_t dim1, std::size_t dim2, int k) {
  Vector v(dim1 * dim2);
  if (k < 0 || static_cast<std::size_t>(k) >= std::min(dim1, dim2)) throw Error(ErrorKind::InvalidArgument, "top degree out of range");
  mpz_class binom = 1;
  Rational scale(1, 1);
  for (int i = 0; i < k; ++i) scale /= 2;
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    Rational c = scale * Rational(binom) * ((b % 2) ? -1 : 1);
    v[static_cast<std::size_t>(a) * dim2 + static_cast<std::size_t>(b)] = Scalar(c);
    binom = binom * (k - a) / (a + 1);
  }
  return v;
}

DecompositionResult decompose(const Representation& delta_rep, const DecomposeOptions& opts) {
  require_sl2_family(delta_rep.algebra);
  if (delta_rep.axes.size() != 2 || delta_rep.truncated())
    throw Error(ErrorKind::InvalidArgument, "decompose expects a finite two-factor tensor representation");
  DecompositionResult out;
  out.algebra = delta_rep.algebra;
  out.dim1 = delta_rep.axes[0].size;
  out.dim2 = delta_rep.axes[1].size;
  out.z = opts.z;
  const std::size_t n = delta_rep.dim();
  const Matrix& jp = delta_rep.matrix("Jp");
  const Matrix& j3 = delta_rep.matrix("J3");
  const Matrix& jm = delta_rep.matrix("Jm");

  // (1) kernel of Delta(J+), free coordinates carry the identity
  std::vector<Vector> kernel = nullspace(jp);
  const std::size_t k = kernel.size();
  std::vector<std::size_t> free(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t f = 0;
    for (std::size_t p = 0; p < n; ++p) {
      bool one = kernel[i][p].is_unit() && kernel[i][p].as_rational() == 1;
      bool isolated = one;
      for (std::size_t o = 0; o < k && isolated; ++o)
        if (o != i && !kernel[o][p].is_zero()) isolated = false;
      if (isolated) {
        f = p;
        break;
      }
    }
    free[i] = f;
  }

  // (2) Delta(J3) restricted to the kernel
  Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vector img = jordan::apply(j3, kernel[j]);
    for (std::size_t i = 0; i < k; ++i) m(i, j) = img[free[i]];
    Vector back(n);
    for (std::size_t i = 0; i < k; ++i) axpy(back, m(i, j), kernel[i]);
    if (!(back == img)) throw Error(ErrorKind::NotCompletelyReducible, "kernel of Delta(J+) is not Delta(J3)-stable");
  }
  std::vector<std::vector<Rational>> m0(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Scalar s = specialize(m(i, j), Rational(0));
      if (!s.is_zero()) m0[i][j] = s.as_rational();
    }
  std::vector<Rational> weights = rational_roots(charpoly(m0));
  std::size_t nullities = 0;
  std::vector<std::pair<Rational, std::vector<Vector>>> tops;
  for (const auto& w : weights) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= Scalar(w);
    std::vector<Vector> eig = nullspace(shifted);
    nullities += eig.size();
    std::vector<Vector> full;
    for (const auto& e : eig) {
      Vector v(n);
      for (std::size_t i = 0; i < k; ++i)
        if (!e[i].is_zero()) axpy(v, e[i], kernel[i]);
      full.push_back(std::move(v));
    }
    std::sort(full.begin(), full.end(), lex_support_less);
    tops.emplace_back(w, std::move(full));
  }
  if (nullities != k)
    throw Error(ErrorKind::NotCompletelyReducible, "Delta(J3) is not diagonalizable on the kernel of Delta(J+)");

  const std::string base = delta_rep.algebra;
  const int max_twice = static_cast<int>(out.dim1 + out.dim2) - 2;
  std::map<int, Representation> modules;
  auto module_for = [&](int t) -> const Representation& {
    auto it = modules.find(t);
    if (it != modules.end()) return it->second;
    Representation mod = monomial_rep(base, Rational(t + 2));
    if (opts.z) mod = specialize(mod, *opts.z);
    return modules.emplace(t, std::move(mod)).first->second;
  };

  for (auto& [w, vs] : tops) {
    int twice = -1;
    for (int t = 0; t <= max_twice && twice < 0; ++t) {
      const Matrix& l3 = module_for(t).matrix("J3");
      Vector e0 = l3.column(0);
      bool diag = e0[0] == Scalar(w);
      for (std::size_t r = 1; r < e0.size(); ++r) diag = diag && e0[r].is_zero();
      if (diag) twice = t;
    }
    if (twice < 0)
      throw Error(ErrorKind::NotCompletelyReducible, "no irreducible module has top weight " + to_string(w));
    const int depth = (static_cast<int>(out.dim1 + out.dim2) - 2 - twice) / 2;
    for (Vector& v : vs) {
      // (5) classical top coefficient fixes the scale
      if (vs.size() == 1) {
        auto it = opts.classical_tops.find(twice);
        Vector c = it != opts.classical_tops.end() ? it->second : default_classical_top(out.dim1, out.dim2, depth);
        if (c.size() != n) throw Error(ErrorKind::InvalidArgument, "classical top has the wrong length");
        std::size_t i = 0;
        while (i < n && c[i].is_zero()) ++i;
        Scalar vi = opts.z ? v[i] : specialize(v[i], Rational(0));
        if (i < n && vi.is_unit()) v = scaled(v, Scalar(c[i].as_rational() / vi.as_rational()));
      }
      Component comp;
      comp.twice_label = twice;
      comp.weight = w;
      comp.module = module_for(twice);
      // (4) orbit through the label module's lowering action
      const Matrix& lm = comp.module.matrix("Jm");
      const std::size_t d = static_cast<std::size_t>(twice) + 1;
      comp.vectors.push_back(v);
      for (std::size_t col = 0; col + 1 < d; ++col) {
        Vector next = jordan::apply(jm, comp.vectors[col]);
        for (std::size_t r = 0; r <= col; ++r)
          if (!lm(r, col).is_zero()) axpy(next, -lm(r, col), comp.vectors[r]);
        if (lm(col + 1, col).is_zero())
          throw Error(ErrorKind::NotCompletelyReducible, "label module lowering degenerates");
        comp.vectors.push_back(divided(next, lm(col + 1, col)));
      }
      out.components.push_back(std::move(comp));
    }
  }
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const Component& a, const Component& b) { return a.twice_label > b.twice_label; });

  std::size_t total = 0;
  for (const auto& c : out.components) total += c.vectors.size();
  if (total != n)
    throw Error(ErrorKind::NotCompletelyReducible,
                "components span " + std::to_string(total) + " of " + std::to_string(n) + " dimensions");
  std::string bad = check_block_diagonal(out, delta_rep);
  if (!bad.empty()) throw Error(ErrorKind::NotCompletelyReducible, "orbit does not close under " + bad);
  if (rank(cg_matrix(out)) != n) throw Error(ErrorKind::NotCompletelyReducible, "component vectors are dependent");
  return out;
}

Representation tensor_product_rep(const std::string& algebra, int twice_j1, int twice_j2) {
  require_sl2_family(algebra);
  if (twice_j1 < 0 || twice_j2 < 0) throw Error(ErrorKind::InvalidArgument, "labels must be non-negative");
  Representation a = monomial_rep(algebra, Rational(twice_j1 + 2));
  Representation b = monomial_rep(algebra, Rational(twice_j2 + 2));
  return coproduct_rep(a, b, default_catalog().hopf(algebra));
}

DecompositionResult decompose_product(const std::string& algebra, int twice_j1, int twice_j2, std::optional<Rational> z,
                                      const std::map<int, Vector>& classical_tops) {
  Representation rep = tensor_product_rep(algebra, twice_j1, twice_j2);
  if (z) rep = specialize(rep, *z);
  return decompose(rep, DecomposeOptions{z, classical_tops});
}

Matrix cg_matrix(const DecompositionResult& result) {
  std::vector<Vector> cols;
  for (const auto& c : result.components) cols.insert(cols.end(), c.vectors.begin(), c.vectors.end());
  return from_columns(cols);
}

std::string check_block_diagonal(const DecompositionResult& result, const Representation& delta_rep) {
  Matrix c = cg_matrix(result);
  const std::size_t n = c.rows();
  for (const auto& g : delta_rep.order) {
    Matrix blocks(n, n);
    std::size_t off = 0;
    for (const auto& comp : result.components) {
      Matrix b = label_module_matrix(comp, g);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t col = 0; col < b.cols(); ++col) blocks(off + r, off + col) = b(r, col);
      off += b.rows();
    }
    if (!(delta_rep.matrix(g) * c == c * blocks)) return g;
  }
  return "";
}

bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank_of_columns(a);
  return ra == rank_of_columns(b) && ra == rank_of_columns(both);
}

bool is_invariant(const std::vector<Vector>& span, const Representation& rep) {
  const std::size_t r = rank_of_columns(span);
  for (const auto& g : rep.order) {
    std::vector<Vector> both = span;
    for (const auto& v : span) both.push_back(jordan::apply(rep.matrix(g), v));
    if (rank_of_columns(both) != r) return false;
  }
  return true;
}

bool check_flip_symmetry(const DecompositionResult& result) {
  if (result.dim1 != result.dim2) throw Error(ErrorKind::InvalidArgument, "flip symmetry needs equal factors");
  const std::size_t d = result.dim1;
  for (const auto& comp : result.components) {
    std::vector<Vector> flipped;
    for (const auto& v : comp.vectors) {
      Vector w(v.size());
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) w[b * d + a] = v[a * d + b].reflected();
      flipped.push_back(std::move(w));
    }
    if (!spans_equal(comp.vectors, flipped)) return false;
  }
  return true;
}

Vector coordinates(const Matrix& basis, const Vector& v) { return jordan::apply(inverse(basis), v); }

}  // namespace jordan
