#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jordan/scalar.hpp"

namespace jordan {

// Laurent polynomial in the contraction parameter eps with Scalar coefficients.
class EpsilonScalar {
 public:
  using Term = std::pair<int, Scalar>;

  EpsilonScalar() = default;
  EpsilonScalar(const Scalar& s);  // NOLINT
  EpsilonScalar(const Rational& q) : EpsilonScalar(Scalar(q)) {}  // NOLINT
  EpsilonScalar(long q) : EpsilonScalar(Scalar(q)) {}             // NOLINT

  static EpsilonScalar eps(int degree, const Scalar& coeff = Scalar(1L));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_plain() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  // Coefficient of eps^0.
  Scalar plain() const;
  Scalar coeff(int degree) const;
  int low_degree() const { return terms_.empty() ? 0 : terms_.front().first; }
  int degree() const { return terms_.empty() ? 0 : terms_.back().first; }
  // c * z^j * eps^k with c a nonzero rational.
  bool is_monomial() const;

  EpsilonScalar operator-() const;
  EpsilonScalar& operator+=(const EpsilonScalar& o);
  EpsilonScalar& operator-=(const EpsilonScalar& o);
  EpsilonScalar& operator*=(const EpsilonScalar& o) { return *this = *this * o; }
  friend EpsilonScalar operator+(EpsilonScalar a, const EpsilonScalar& b) { return a += b; }
  friend EpsilonScalar operator-(EpsilonScalar a, const EpsilonScalar& b) { return a -= b; }
  friend EpsilonScalar operator*(const EpsilonScalar& a, const EpsilonScalar& b);
  friend bool operator==(const EpsilonScalar& a, const EpsilonScalar& b) { return a.terms_ == b.terms_; }

  // Inverse of a monomial (z^-j allowed); throws otherwise.
  EpsilonScalar inverse() const;

  std::string str() const;

 private:
  void add_term(int degree, const Scalar& s);
  std::vector<Term> terms_;  // sorted by degree, nonzero
};

// eps -> 0; NegativeEpsilonDegree when a negative power survives.
Scalar epsilon_limit(const EpsilonScalar& a);
// Substitute z -> eps^k z in every coefficient.
EpsilonScalar rescale_z(const EpsilonScalar& a, int k);

}  // namespace jordan
