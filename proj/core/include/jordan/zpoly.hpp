#pragma once

#include <string>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

// Rational polynomial in z. The lowest degree may be negative: intermediate
// boson coefficients such as 1/(2z) live here too. Matrices and emitted
// documents insist on is_polynomial().
class ZPolynomial {
 public:
  ZPolynomial() = default;
  ZPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  ZPolynomial(long c) : ZPolynomial(Rational(c)) {}  // NOLINT

  static ZPolynomial monomial(const Rational& c, int degree);
  static ZPolynomial z(int degree = 1) { return monomial(Rational(1), degree); }
  // coeffs[k] multiplies z^(low + k).
  static ZPolynomial from_coefficients(std::vector<Rational> coeffs, int low = 0);

  bool is_zero() const { return c_.empty(); }
  bool is_polynomial() const { return c_.empty() || low_ >= 0; }
  bool is_constant() const { return c_.empty() || (low_ == 0 && c_.size() == 1); }
  // Undefined on zero; callers test is_zero() first.
  int low_degree() const { return low_; }
  int degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Rational coeff(int d) const;
  Rational constant_term() const { return coeff(0); }

  ZPolynomial operator-() const;
  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial& operator*=(const ZPolynomial& o);
  ZPolynomial& operator*=(const Rational& r);
  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
  friend ZPolynomial operator*(ZPolynomial a, const Rational& r) { return a *= r; }
  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  // Multiply by z^k.
  ZPolynomial shifted(int k) const;
  // p(-z)
  ZPolynomial reflected() const;
  // Terms of degree in [lo, hi].
  ZPolynomial slice(int lo, int hi) const;
  Rational evaluate(const Rational& z) const;

  // a / b when the quotient is a Laurent polynomial; throws otherwise.
  static ZPolynomial divexact(const ZPolynomial& a, const ZPolynomial& b);

  // e.g. "3/4*z^2 - z + 1/2"
  std::string str() const;

 private:
  void normalize();
  int low_ = 0;
  std::vector<Rational> c_;
};

}  // namespace jordan
