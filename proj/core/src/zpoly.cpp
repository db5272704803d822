#include "jordan/zpoly.hpp"

#include <algorithm>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

ZPolynomial::ZPolynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

ZPolynomial ZPolynomial::monomial(const Rational& c, int degree) {
  ZPolynomial p;
  if (c != 0) {
    p.c_.push_back(c);
    p.low_ = degree;
  }
  return p;
}

ZPolynomial ZPolynomial::from_coefficients(std::vector<Rational> coeffs, int low) {
  ZPolynomial p;
  p.c_ = std::move(coeffs);
  p.low_ = low;
  p.normalize();
  return p;
}

void ZPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

Rational ZPolynomial::coeff(int d) const {
  if (c_.empty() || d < low_ || d > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(d - low_)];
}

ZPolynomial ZPolynomial::operator-() const {
  ZPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - low_ + 1), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[static_cast<std::size_t>(o.low_ - low_) + k] += o.c_[k];
  normalize();
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) { return *this += -o; }

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  ZPolynomial r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

ZPolynomial& ZPolynomial::operator*=(const ZPolynomial& o) { return *this = *this * o; }

ZPolynomial& ZPolynomial::operator*=(const Rational& r) {
  if (r == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= r;
  return *this;
}

ZPolynomial ZPolynomial::shifted(int k) const {
  ZPolynomial r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

ZPolynomial ZPolynomial::reflected() const {
  ZPolynomial r = *this;
  for (std::size_t k = 0; k < r.c_.size(); ++k)
    if ((r.low_ + static_cast<int>(k)) % 2 != 0) r.c_[k] = -r.c_[k];
  return r;
}

ZPolynomial ZPolynomial::slice(int lo, int hi) const {
  std::vector<Rational> out;
  if (c_.empty() || hi < lo) return {};
  int a = std::max(lo, low_), b = std::min(hi, degree());
  if (a > b) return {};
  for (int d = a; d <= b; ++d) out.push_back(c_[static_cast<std::size_t>(d - low_)]);
  return from_coefficients(std::move(out), a);
}

Rational ZPolynomial::evaluate(const Rational& z) const {
  if (c_.empty()) return Rational(0);
  if (low_ < 0 && z == 0) throw Error(ErrorKind::NegativeZDegree, "evaluating z^" + std::to_string(low_) + " at z=0");
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  if (low_ != 0) {
    Rational zp(1);
    Rational base = low_ > 0 ? z : Rational(1) / z;
    for (int i = 0; i < std::abs(low_); ++i) zp *= base;
    acc *= zp;
  }
  return acc;
}

ZPolynomial ZPolynomial::divexact(const ZPolynomial& a, const ZPolynomial& b) {
  if (b.c_.empty()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.c_.empty()) return {};
  // Long division on the coefficient vectors, from the top degree down.
  std::vector<Rational> rem = a.c_;
  const std::size_t nb = b.c_.size();
  if (rem.size() < nb) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  std::vector<Rational> q(rem.size() - nb + 1, Rational(0));
  const Rational& lead = b.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = rem[k + nb - 1] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= f * b.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return from_coefficients(std::move(q), a.low_ - b.low_);
}

std::string ZPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    int d = low_ + static_cast<int>(k);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << 'z';
    if (d != 1) os << '^' << d;
  }
  return os.str();
}

}  // namespace jordan
