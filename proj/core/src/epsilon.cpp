#include "jordan/epsilon.hpp"

#include <algorithm>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

EpsilonScalar::EpsilonScalar(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace_back(0, s);
}

EpsilonScalar EpsilonScalar::eps(int degree, const Scalar& coeff) {
  EpsilonScalar e;
  e.add_term(degree, coeff);
  return e;
}

Scalar EpsilonScalar::plain() const { return coeff(0); }

Scalar EpsilonScalar::coeff(int degree) const {
  for (const auto& [d, s] : terms_)
    if (d == degree) return s;
  return {};
}

bool EpsilonScalar::is_monomial() const {
  if (terms_.size() != 1 || !terms_[0].second.is_rational()) return false;
  const ZPolynomial p = terms_[0].second.rational_part();
  return p.low_degree() == p.degree();
}

void EpsilonScalar::add_term(int degree, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, int key) { return t.first < key; });
  if (it != terms_.end() && it->first == degree) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(degree, s));
  }
}

EpsilonScalar EpsilonScalar::operator-() const {
  EpsilonScalar e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

EpsilonScalar& EpsilonScalar::operator+=(const EpsilonScalar& o) {
  for (const auto& [d, s] : o.terms_) add_term(d, s);
  return *this;
}

EpsilonScalar& EpsilonScalar::operator-=(const EpsilonScalar& o) {
  for (const auto& [d, s] : o.terms_) add_term(d, -s);
  return *this;
}

EpsilonScalar operator*(const EpsilonScalar& a, const EpsilonScalar& b) {
  EpsilonScalar out;
  for (const auto& [da, sa] : a.terms_)
    for (const auto& [db, sb] : b.terms_) out.add_term(da + db, sa * sb);
  return out;
}

EpsilonScalar EpsilonScalar::inverse() const {
  if (!is_monomial()) throw Error(ErrorKind::InvalidArgument, "not an invertible eps-monomial: " + str());
  const ZPolynomial p = terms_[0].second.rational_part();
  return eps(-terms_[0].first, Scalar(ZPolynomial::monomial(Rational(1) / p.coeff(p.low_degree()), -p.low_degree())));
}

std::string EpsilonScalar::str() const {
  if (terms_.empty()) return "0";
  if (is_plain()) return terms_[0].second.str();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str() << ")*eps^" << it->first;
  }
  return os.str();
}

Scalar epsilon_limit(const EpsilonScalar& a) {
  if (!a.is_zero() && a.low_degree() < 0)
    throw Error(ErrorKind::NegativeEpsilonDegree,
                "eps^" + std::to_string(a.low_degree()) + " term " + a.coeff(a.low_degree()).str() + " diverges");
  return a.plain();
}

EpsilonScalar rescale_z(const EpsilonScalar& a, int k) {
  if (k == 0) return a;
  EpsilonScalar out;
  for (const auto& [d, s] : a.terms()) {
    for (const auto& [r, p] : s.terms()) {
      for (int zd = p.low_degree(); zd <= p.degree(); ++zd) {
        Rational c = p.coeff(zd);
        if (c == 0) continue;
        out += EpsilonScalar::eps(d + k * zd, Scalar::radical(r, ZPolynomial::monomial(c, zd)));
      }
    }
  }
  return out;
}

}  // namespace jordan
