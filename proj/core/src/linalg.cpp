#include "jordan/linalg.hpp"

#include <algorithm>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

bool is_one(const Scalar& s) { return s.is_unit() && s.as_rational() == 1; }

}  // namespace

std::vector<Vector> nullspace(const Matrix& input) {
  Matrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<bool> row_used(rows, false), col_pivot(cols, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  for (;;) {
    // Any unit entry in the unreduced block will do.
    std::size_t pr = rows, pc = cols;
    for (std::size_t c = 0; c < cols && pr == rows; ++c) {
      if (col_pivot[c]) continue;
      for (std::size_t r = 0; r < rows; ++r)
        if (!row_used[r] && a(r, c).is_unit()) {
          pr = r;
          pc = c;
          break;
        }
    }
    if (pr == rows) break;
    Rational inv = Rational(1) / a(pr, pc).as_rational();
    for (std::size_t c = 0; c < cols; ++c)
      if (!a(pr, c).is_zero()) a(pr, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || a(r, pc).is_zero()) continue;
      Scalar f = a(r, pc);
      for (std::size_t c = 0; c < cols; ++c)
        if (!a(pr, c).is_zero()) a(r, c) -= f * a(pr, c);
    }
    row_used[pr] = true;
    col_pivot[pc] = true;
    pivots.emplace_back(pr, pc);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_used[r]) continue;
    for (std::size_t c = 0; c < cols; ++c)
      if (!a(r, c).is_zero())
        throw Error(ErrorKind::Unsupported, "elimination needs a non-unit pivot: " + a(r, c).str());
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (col_pivot[f]) continue;
    Vector v(cols);
    v[f] = Scalar(1L);
    for (auto [pr, pc] : pivots) v[pc] = -a(pr, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::vector<std::vector<ZPolynomial>> to_polys(const Matrix& m) {
  if (!m.entries_rational() || !m.entries_polynomial())
    throw Error(ErrorKind::Unsupported, "fraction-free elimination needs rational polynomial entries");
  std::vector<std::vector<ZPolynomial>> a(m.rows(), std::vector<ZPolynomial>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).rational_part();
  return a;
}

// Bareiss elimination with column skipping. Returns the rank; `last` receives
// the final pivot and `sign` the row-swap parity.
std::size_t bareiss(std::vector<std::vector<ZPolynomial>>& a, std::size_t cols, ZPolynomial& last, int& sign) {
  const std::size_t rows = a.size();
  ZPolynomial prev(Rational(1));
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = ZPolynomial::divexact(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = ZPolynomial();
    }
    prev = a[r][c];
    ++r;
  }
  last = prev;
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto a = to_polys(m);
  ZPolynomial last;
  int sign = 1;
  return bareiss(a, m.cols(), last, sign);
}

std::size_t rank_of_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return 0;
  return rank(from_columns(columns));
}

ZPolynomial determinant(const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return ZPolynomial(Rational(1));
  auto a = to_polys(m);
  ZPolynomial last;
  int sign = 1;
  if (bareiss(a, m.cols(), last, sign) < m.rows()) return {};
  return sign > 0 ? last : -last;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::SingularR, "non-square matrix");
  const std::size_t n = m.rows();
  bool unit_diag = true;
  for (std::size_t i = 0; i < n; ++i) unit_diag = unit_diag && is_one(m(i, i));
  if (unit_diag && m.is_lower_triangular(false)) {
    // Column-by-column forward substitution on L x = e_c.
    Matrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      inv(c, c) = Scalar(1L);
      for (std::size_t r = c + 1; r < n; ++r) {
        Scalar acc;
        for (std::size_t k = c; k < r; ++k)
          if (!m(r, k).is_zero() && !inv(k, c).is_zero()) acc += m(r, k) * inv(k, c);
        inv(r, c) = -acc;
      }
    }
    return inv;
  }
  if (unit_diag && m.is_upper_triangular(false)) return inverse(m.transposed()).transposed();

  Matrix a = m, inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !a(p, c).is_unit()) ++p;
    if (p == n) throw Error(ErrorKind::SingularR, "no unit pivot in column " + std::to_string(c));
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational s = Rational(1) / a(c, c).as_rational();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Scalar f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

}  // namespace jordan
