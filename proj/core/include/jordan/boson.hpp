#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jordan/epsilon.hpp"

namespace jordan {

// Shape of a normal-ordered monomial
//   e^{2*slope*z*a+} a+^pa a-^qa b+^pb b-^qb.
struct Signature {
  int slope = 0;
  int pa = 0, qa = 0;
  int pb = 0, qb = 0;
  auto operator<=>(const Signature&) const = default;
  bool uses_b() const { return pb != 0 || qb != 0; }
  bool is_identity() const { return *this == Signature{}; }
};

struct BosonTerm {
  EpsilonScalar coeff;
  Signature sig;
};

class BosonExpression {
 public:
  BosonExpression() = default;
  BosonExpression(const EpsilonScalar& c);  // NOLINT  c * 1
  BosonExpression(long c) : BosonExpression(EpsilonScalar(c)) {}  // NOLINT

  static BosonExpression monomial(const EpsilonScalar& c, const Signature& s);
  static BosonExpression a_plus() { return monomial(1L, {0, 1, 0, 0, 0}); }
  static BosonExpression a_minus() { return monomial(1L, {0, 0, 1, 0, 0}); }
  static BosonExpression b_plus() { return monomial(1L, {0, 0, 0, 1, 0}); }
  static BosonExpression b_minus() { return monomial(1L, {0, 0, 0, 0, 1}); }
  // e^{2*slope*z*a+}
  static BosonExpression exp_a(int slope) { return monomial(1L, {slope, 0, 0, 0, 0}); }

  std::vector<BosonTerm> terms() const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;  // zero or a multiple of the identity
  EpsilonScalar scalar_value() const;  // coefficient of the identity
  EpsilonScalar coeff(const Signature& s) const;
  bool uses_b() const;

  BosonExpression operator-() const;
  BosonExpression& operator+=(const BosonExpression& o);
  BosonExpression& operator-=(const BosonExpression& o);
  BosonExpression& operator*=(const BosonExpression& o) { return *this = *this * o; }
  friend BosonExpression operator+(BosonExpression a, const BosonExpression& b) { return a += b; }
  friend BosonExpression operator-(BosonExpression a, const BosonExpression& b) { return a -= b; }
  friend BosonExpression operator*(const BosonExpression& a, const BosonExpression& b);
  friend BosonExpression operator*(const EpsilonScalar& c, const BosonExpression& x);
  friend bool operator==(const BosonExpression& a, const BosonExpression& b) { return a.terms_ == b.terms_; }

  BosonExpression pow(int n) const;

  // Text round-trip form, e.g. "(-1/4*z^2)*E[2z,a+]*a-^2 + a+".
  std::string str() const;

 private:
  void add(const Signature& s, const EpsilonScalar& c);
  std::map<Signature, EpsilonScalar> terms_;
};

BosonExpression normal_order(const std::vector<BosonExpression>& product);
BosonExpression commutator(const BosonExpression& x, const BosonExpression& y);

// Old operators in terms of new ones: a+_old = a_plus * a+_new, and so on,
// together with z_old = eps^z_power * z_new.
struct BosonRescaling {
  EpsilonScalar a_plus = 1L, a_minus = 1L, b_plus = 1L, b_minus = 1L;
  int z_power = 0;
};
// Throws InvalidArgument when an exponential factor is not left invariant.
BosonExpression substitute(const BosonExpression& x, const BosonRescaling& map);

// (abar+, abar-) = ((e^{2z a+} - 1)/(2z), a- + mu z)
std::pair<BosonExpression, BosonExpression> deformed_boson(const Rational& mu);

// Exponentials expanded in z and all contributions of total z-degree <= max_degree kept.
BosonExpression expand_to_z_order(const BosonExpression& x, int max_degree);
// No net negative powers of z once exponentials are expanded.
bool is_z_regular(const BosonExpression& x);
// NegativeZDegree naming the offending contribution.
void require_z_regular(const BosonExpression& x);
// z -> 0 (requires regularity).
BosonExpression specialize_z0(const BosonExpression& x);
// eps -> 0 on every coefficient.
BosonExpression epsilon_limit(const BosonExpression& x);

}  // namespace jordan
