#include "jordan/matrix.hpp"

#include "jordan/errors.hpp"

namespace jordan {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1L);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& s : data_) n += s.is_zero() ? 0 : 1;
  return n;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return std::make_pair(r, c);
  return std::nullopt;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    for (auto& x : data_) x = Scalar();
    return *this;
  }
  for (auto& x : data_)
    if (!x.is_zero()) x = x * s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch in *");
  // Row-wise sparse product: skip zero entries on both sides.
  std::vector<std::vector<std::size_t>> nz(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero() || nz[k].empty()) continue;
      for (std::size_t j : nz[k]) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const std::vector<Scalar>& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_lower_triangular(bool strict) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = strict ? r : r + 1; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

bool Matrix::is_upper_triangular(bool strict) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_ && c < (strict ? r + 1 : r); ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

bool Matrix::entries_polynomial() const {
  for (const auto& s : data_)
    if (!s.is_polynomial()) return false;
  return true;
}

bool Matrix::entries_rational() const {
  for (const auto& s : data_)
    if (!s.is_rational()) return false;
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!bkl.is_zero()) m(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return m;
}

Matrix specialize(const Matrix& m, const Rational& z_value) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = specialize(m(r, c), z_value);
  return out;
}

Matrix reflected(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).reflected();
  return out;
}

std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  std::vector<Scalar> out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out[r] += m(r, c) * v[c];
  }
  return out;
}

Matrix exp_nilpotent(const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "exp of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * m;
    if (term.is_zero()) return result;
    term *= Scalar(Rational(1) / Rational(static_cast<long>(k)));
    result += term;
  }
  throw Error(ErrorKind::NonNilpotentExponent, "matrix is not nilpotent (dimension " + std::to_string(n) + ")");
}

}  // namespace jordan
