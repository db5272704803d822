#pragma once

// Reference constructions written independently of the library internals:
// plain boson matrices, the undeformed sl(2) lowest weight modules and
// textual matrices. Only the arithmetic types are borrowed.

#include <string>
#include <vector>

#include "jordan/matrix.hpp"
#include "jordan/parse.hpp"

namespace oracle {

using jordan::Matrix;
using jordan::Rational;
using jordan::Scalar;

inline Matrix from_rows(const std::vector<std::vector<std::string>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(r, c) = rows[r][c] == "." ? Scalar() : jordan::parse_scalar(rows[r][c]);
  return m;
}

inline Scalar root(unsigned long n) { return Scalar::sqrt_of(n); }

// a+|m> = sqrt(m+1)|m+1>, a-|m> = sqrt(m)|m-1> on n states.
inline Matrix a_plus(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k + 1, k) = root(k + 1);
  return m;
}
inline Matrix a_minus(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 1; k < n; ++k) m(k - 1, k) = root(k);
  return m;
}

inline Matrix plain_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1L);
  return m;
}

// exp(t * x) by the truncated series, x nilpotent.
inline Matrix exp_series(const Matrix& x, const Scalar& t) {
  Matrix out = identity(x.rows()), term = identity(x.rows());
  for (long k = 1; k <= static_cast<long>(x.rows()); ++k) {
    term = plain_product(term, x);
    Scalar coeff(1L);
    for (long i = 0; i < k; ++i) coeff = coeff * t;
    Rational fact = 1;
    for (long i = 2; i <= k; ++i) fact *= i;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!term(i, j).is_zero()) out(i, j) += coeff * term(i, j) * Rational(1 / fact);
  }
  return out;
}

inline Matrix top_left(const Matrix& m, std::size_t n) { return m.block(0, 0, n, n); }

// Undeformed lowest weight module on |0>, |1>, ...:
//   J+|m> = sqrt(m+1)|m+1>, J3|m> = (beta + 2m)|m>, J-|m> = -sqrt(m)(m-1+beta)|m-1>.
struct Sl2Module {
  Matrix jp, j3, jm;
};
inline Sl2Module classical_sl2(const Rational& beta, std::size_t n) {
  Sl2Module s{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t m = 0; m < n; ++m) {
    s.j3(m, m) = Scalar(beta + 2 * static_cast<long>(m));
    if (m + 1 < n) s.jp(m + 1, m) = root(m + 1);
    if (m >= 1) s.jm(m - 1, m) = root(m) * Scalar(-(Rational(static_cast<long>(m) - 1) + beta));
  }
  return s;
}

inline Rational binomial(long n, long k) {
  Rational r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Matrices on span{1, x, ..., x^{n-1}}: multiplication by x (dropping x^n),
// d/dx and the step-2z difference ((x+2z)^k - x^k) / (2z).
inline Matrix mult_x(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k + 1, k) = Scalar(1L);
  return m;
}
inline Matrix d_dx(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 1; k < n; ++k) m(k - 1, k) = Scalar(static_cast<long>(k));
  return m;
}
inline Matrix step_difference(std::size_t n) {
  Matrix m(n, n);
  for (long k = 1; k < static_cast<long>(n); ++k)
    for (long i = 0; i < k; ++i) {
      Rational c = binomial(k, i);
      for (long p = 0; p < k - 1 - i; ++p) c *= 2;
      m(i, k) = Scalar(jordan::ZPolynomial::monomial(c, static_cast<int>(k - 1 - i)));
    }
  return m;
}

}  // namespace oracle
