#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jordan/zpoly.hpp"

namespace jordan {

using Radicand = std::uint64_t;

// Finite sum of sqrt(n) * p_n(z) over square-free n >= 1.
class Scalar {
 public:
  using Term = std::pair<Radicand, ZPolynomial>;

  Scalar() = default;
  Scalar(const Rational& q) : Scalar(ZPolynomial(q)) {}  // NOLINT
  Scalar(long q) : Scalar(Rational(q)) {}                // NOLINT
  Scalar(const ZPolynomial& p);                          // NOLINT

  // sqrt(n) for any n >= 0, square part pulled out.
  static Scalar sqrt_of(std::uint64_t n);
  // coeff * sqrt(r); r must already be square-free.
  static Scalar radical(Radicand r, const ZPolynomial& coeff);
  static Scalar z(int degree = 1) { return Scalar(ZPolynomial::z(degree)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Only radicand 1.
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  bool is_polynomial() const;
  bool is_constant() const;
  // Nonzero element of Q.
  bool is_unit() const { return !is_zero() && is_rational() && is_constant(); }
  ZPolynomial rational_part() const;
  Rational as_rational() const;  // throws unless is_rational() && is_constant()
  // Lowest / highest z-degree over all radicands; 0 for zero.
  int low_degree() const;
  int degree() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator*=(const Rational& q);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  Scalar shifted(int k) const;  // times z^k
  Scalar reflected() const;     // z -> -z
  Scalar slice(int lo, int hi) const;

  std::string str() const;
  std::string latex() const;

 private:
  void add_term(Radicand r, const ZPolynomial& p);
  std::vector<Term> terms_;  // sorted by radicand, no zero polynomials
};

Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar specialize(const Scalar& a, const Rational& z_value);

}  // namespace jordan
