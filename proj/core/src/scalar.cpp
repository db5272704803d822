#include "jordan/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

Radicand checked_product(Radicand a, Radicand b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw Error(ErrorKind::Unsupported, "radicand exceeds 64 bits");
  return static_cast<Radicand>(p);
}

}  // namespace

Scalar::Scalar(const ZPolynomial& p) {
  if (!p.is_zero()) terms_.emplace_back(1, p);
}

Scalar Scalar::sqrt_of(std::uint64_t n) {
  if (n == 0) return {};
  Integer square(1);
  Radicand free = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= static_cast<unsigned long>(p);
    if (e % 2) free *= p;
  }
  free = checked_product(free, n);
  return radical(free, ZPolynomial(Rational(square)));
}

Scalar Scalar::radical(Radicand r, const ZPolynomial& coeff) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "radicand 0");
  Scalar s;
  if (!coeff.is_zero()) s.terms_.emplace_back(r, coeff);
  return s;
}

bool Scalar::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_polynomial(); });
}

bool Scalar::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_constant(); });
}

ZPolynomial Scalar::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return {};
}

Rational Scalar::as_rational() const {
  if (!is_rational() || !is_constant()) throw Error(ErrorKind::InvalidArgument, "not a rational constant: " + str());
  return rational_part().constant_term();
}

int Scalar::low_degree() const {
  if (terms_.empty()) return 0;
  int lo = terms_[0].second.low_degree();
  for (const auto& t : terms_) lo = std::min(lo, t.second.low_degree());
  return lo;
}

int Scalar::degree() const {
  if (terms_.empty()) return 0;
  int hi = terms_[0].second.degree();
  for (const auto& t : terms_) hi = std::max(hi, t.second.degree());
  return hi;
}

void Scalar::add_term(Radicand r, const ZPolynomial& p) {
  if (p.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                             [](const Term& t, Radicand key) { return t.first < key; });
  if (it != terms_.end() && it->first == r) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(r, p));
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.first, t.second);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.first, -t.second);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= q;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_[0].first == 1 && b.terms_[0].first == 1) {
    ZPolynomial p = a.terms_[0].second * b.terms_[0].second;
    if (!p.is_zero()) out.terms_.emplace_back(1, std::move(p));
    return out;
  }
  for (const auto& [m, p] : a.terms_) {
    for (const auto& [n, q] : b.terms_) {
      Radicand g = std::gcd(m, n);
      Radicand r = checked_product(m / g, n / g);
      ZPolynomial c = p * q;
      if (g != 1) c *= Rational(Integer(static_cast<unsigned long>(g)));
      out.add_term(r, c);
    }
  }
  return out;
}

Scalar Scalar::shifted(int k) const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = t.second.shifted(k);
  return s;
}

Scalar Scalar::reflected() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = t.second.reflected();
  return s;
}

Scalar Scalar::slice(int lo, int hi) const {
  Scalar s;
  for (const auto& t : terms_) s.add_term(t.first, t.second.slice(lo, hi));
  return s;
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

Scalar specialize(const Scalar& a, const Rational& z_value) {
  Scalar s;
  for (const auto& [r, p] : a.terms())
    s += Scalar::radical(r, ZPolynomial(p.evaluate(z_value)));
  return s;
}

namespace {

struct Mono {
  Rational c;
  Radicand r;
  int d;
};

std::vector<Mono> monomials(const std::vector<Scalar::Term>& terms) {
  std::vector<Mono> out;
  for (const auto& [r, p] : terms) {
    if (p.is_zero()) continue;
    for (int d = p.degree(); d >= p.low_degree(); --d) {
      Rational c = p.coeff(d);
      if (c != 0) out.push_back({c, r, d});
    }
  }
  // Highest z-degree first, then radicand.
  std::stable_sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    return a.d != b.d ? a.d > b.d : a.r < b.r;
  });
  return out;
}

}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monomials(terms_)) {
    Rational mag = abs(m.c);
    if (first) {
      if (m.c < 0) os << '-';
    } else {
      os << (m.c < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = m.r == 1 && m.d == 0;
    bool need_star = false;
    if (mag != 1 || bare) {
      os << to_string(mag);
      need_star = true;
    }
    if (m.r != 1) {
      if (need_star) os << '*';
      os << "sqrt(" << m.r << ')';
      need_star = true;
    }
    if (m.d != 0) {
      if (need_star) os << '*';
      os << 'z';
      if (m.d != 1) os << '^' << m.d;
    }
  }
  return os.str();
}

std::string Scalar::latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monomials(terms_)) {
    Rational mag = abs(m.c);
    if (first) {
      if (m.c < 0) os << '-';
    } else {
      os << (m.c < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = m.r == 1 && m.d == 0;
    if (mag != 1 || bare) {
      if (mag.get_den() == 1) {
        os << mag.get_num().get_str();
      } else {
        os << "\\frac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << '}';
      }
    }
    if (m.r != 1) os << "\\sqrt{" << m.r << '}';
    if (m.d != 0) {
      if (mag != 1 || m.r != 1) os << ' ';
      os << 'z';
      if (m.d != 1) os << "^{" << m.d << '}';
    }
  }
  return os.str();
}

}  // namespace jordan
