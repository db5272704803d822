#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jordan/scalar.hpp"

namespace jordan {

// Dense square-or-rectangular matrix over Scalar. Column c is the image of
// basis vector c.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t nonzeros() const;
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix transposed() const;
  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Scalar>& v);

  bool is_lower_triangular(bool strict) const;
  bool is_upper_triangular(bool strict) const;
  bool entries_polynomial() const;
  bool entries_rational() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix specialize(const Matrix& m, const Rational& z_value);
Matrix reflected(const Matrix& m);
std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v);

// exp(m) as a finite sum; NonNilpotentExponent if m^n != 0 for n = dim.
Matrix exp_nilpotent(const Matrix& m);

}  // namespace jordan
