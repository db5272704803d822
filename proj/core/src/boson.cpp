#include "jordan/boson.hpp"

#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

Rational binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational falling(int n, int k) {
  Integer r(1);
  for (int i = 0; i < k; ++i) r *= n - i;
  return Rational(r);
}

Rational factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational rpow(const Rational& base, int n) {
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

struct ModePiece {
  int slope, p, q;
  Rational c;
  int zdeg;
};

// (e^{2 s1 z x} x^p1 y^q1)(e^{2 s2 z x} x^p2 y^q2) with [y, x] = 1, normal ordered:
// y^q g(x) = sum_k C(q,k) g^(k)(x) y^(q-k).
std::vector<ModePiece> mode_product(int s1, int p1, int q1, int s2, int p2, int q2) {
  std::vector<ModePiece> out;
  const Rational c2(2 * s2);
  for (int k = 0; k <= q1; ++k) {
    Rational ck = binomial(q1, k);
    for (int i = 0; i <= k && i <= p2; ++i) {
      if (s2 == 0 && i != k) continue;
      Rational coef = ck * binomial(k, i) * falling(p2, i) * rpow(c2, k - i);
      if (coef == 0) continue;
      out.push_back({s1 + s2, p1 + p2 - i, q1 - k + q2, coef, k - i});
    }
  }
  return out;
}

std::string mode_factor(const char* name, int p) {
  std::string s = name;
  if (p != 1) s += "^" + std::to_string(p);
  return s;
}

}  // namespace

BosonExpression::BosonExpression(const EpsilonScalar& c) {
  if (!c.is_zero()) terms_.emplace(Signature{}, c);
}

BosonExpression BosonExpression::monomial(const EpsilonScalar& c, const Signature& s) {
  if (s.pa < 0 || s.qa < 0 || s.pb < 0 || s.qb < 0) throw Error(ErrorKind::InvalidArgument, "negative boson power");
  BosonExpression x;
  x.add(s, c);
  return x;
}

void BosonExpression::add(const Signature& s, const EpsilonScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<BosonTerm> BosonExpression::terms() const {
  std::vector<BosonTerm> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.push_back({c, s});
  return out;
}

bool BosonExpression::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity());
}

EpsilonScalar BosonExpression::scalar_value() const { return coeff(Signature{}); }

EpsilonScalar BosonExpression::coeff(const Signature& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? EpsilonScalar() : it->second;
}

bool BosonExpression::uses_b() const {
  for (const auto& [s, c] : terms_)
    if (s.uses_b()) return true;
  return false;
}

BosonExpression BosonExpression::operator-() const {
  BosonExpression x = *this;
  for (auto& [s, c] : x.terms_) c = -c;
  return x;
}

BosonExpression& BosonExpression::operator+=(const BosonExpression& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

BosonExpression& BosonExpression::operator-=(const BosonExpression& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

BosonExpression operator*(const BosonExpression& x, const BosonExpression& y) {
  BosonExpression out;
  for (const auto& [sx, cx] : x.terms_) {
    for (const auto& [sy, cy] : y.terms_) {
      EpsilonScalar c = cx * cy;
      auto pa = mode_product(sx.slope, sx.pa, sx.qa, sy.slope, sy.pa, sy.qa);
      auto pb = mode_product(0, sx.pb, sx.qb, 0, sy.pb, sy.qb);
      for (const auto& ma : pa)
        for (const auto& mb : pb) {
          Signature s{ma.slope, ma.p, ma.q, mb.p, mb.q};
          Scalar f = Scalar(ZPolynomial::monomial(ma.c * mb.c, ma.zdeg + mb.zdeg));
          out.add(s, c * EpsilonScalar(f));
        }
    }
  }
  return out;
}

BosonExpression operator*(const EpsilonScalar& c, const BosonExpression& x) {
  BosonExpression out;
  if (c.is_zero()) return out;
  for (const auto& [s, cx] : x.terms_) out.add(s, c * cx);
  return out;
}

BosonExpression BosonExpression::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a boson expression");
  BosonExpression r(1L);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string BosonExpression::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    if (s.slope != 0) factors.push_back("E[" + std::to_string(2 * s.slope) + "z,a+]");
    if (s.pa) factors.push_back(mode_factor("a+", s.pa));
    if (s.qa) factors.push_back(mode_factor("a-", s.qa));
    if (s.pb) factors.push_back(mode_factor("b+", s.pb));
    if (s.qb) factors.push_back(mode_factor("b-", s.qb));
    bool unit = c == EpsilonScalar(1L);
    if (!unit || factors.empty()) {
      os << '(' << c.str() << ')';
      if (!factors.empty()) os << '*';
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

BosonExpression normal_order(const std::vector<BosonExpression>& product) {
  BosonExpression r(1L);
  for (const auto& f : product) r = r * f;
  return r;
}

BosonExpression commutator(const BosonExpression& x, const BosonExpression& y) { return x * y - y * x; }

namespace {

EpsilonScalar power_of(const EpsilonScalar& e, int n) {
  EpsilonScalar r(1L);
  for (int i = 0; i < n; ++i) r = r * e;
  return r;
}

}  // namespace

BosonExpression substitute(const BosonExpression& x, const BosonRescaling& map) {
  BosonExpression out;
  for (const auto& t : x.terms()) {
    if (t.sig.slope != 0) {
      EpsilonScalar factor = map.a_plus * EpsilonScalar::eps(map.z_power);
      if (!(factor == EpsilonScalar(1L)))
        throw Error(ErrorKind::InvalidArgument,
                    "rescaling changes the exponent of E[" + std::to_string(2 * t.sig.slope) + "z,a+] by " + factor.str());
    }
    EpsilonScalar c = rescale_z(t.coeff, map.z_power);
    c = c * power_of(map.a_plus, t.sig.pa) * power_of(map.a_minus, t.sig.qa) * power_of(map.b_plus, t.sig.pb) *
        power_of(map.b_minus, t.sig.qb);
    out += BosonExpression::monomial(c, t.sig);
  }
  return out;
}

std::pair<BosonExpression, BosonExpression> deformed_boson(const Rational& mu) {
  EpsilonScalar inv2z(Scalar(ZPolynomial::monomial(Rational(1, 2), -1)));
  BosonExpression plus = inv2z * (BosonExpression::exp_a(1) - BosonExpression(1L));
  BosonExpression minus = BosonExpression::a_minus() + BosonExpression(EpsilonScalar(Scalar(ZPolynomial::monomial(mu, 1))));
  return {plus, minus};
}

BosonExpression expand_to_z_order(const BosonExpression& x, int max_degree) {
  BosonExpression out;
  for (const auto& t : x.terms()) {
    for (const auto& [ed, s] : t.coeff.terms()) {
      int low = s.low_degree();
      if (low > max_degree) continue;
      // e^{2 k z a+} = sum_j (2k)^j z^j a+^j / j!
      int jmax = t.sig.slope == 0 ? 0 : max_degree - low;
      for (int j = 0; j <= jmax; ++j) {
        Rational f = rpow(Rational(2 * t.sig.slope), j) / factorial(j);
        if (t.sig.slope == 0) f = 1;
        if (f == 0) continue;
        Scalar part = s.slice(low, max_degree - j).shifted(j) * f;
        if (part.is_zero()) continue;
        Signature sig = t.sig;
        sig.slope = 0;
        sig.pa += j;
        out += BosonExpression::monomial(EpsilonScalar::eps(ed, part), sig);
      }
    }
  }
  return out;
}

bool is_z_regular(const BosonExpression& x) { return expand_to_z_order(x, -1).is_zero(); }

void require_z_regular(const BosonExpression& x) {
  BosonExpression principal = expand_to_z_order(x, -1);
  if (!principal.is_zero())
    throw Error(ErrorKind::NegativeZDegree, "negative z-degree survives: " + principal.str());
}

BosonExpression specialize_z0(const BosonExpression& x) {
  require_z_regular(x);
  BosonExpression low = expand_to_z_order(x, 0);
  BosonExpression out;
  for (const auto& t : low.terms()) {
    EpsilonScalar c;
    for (const auto& [ed, s] : t.coeff.terms()) c += EpsilonScalar::eps(ed, s.slice(0, 0));
    out += BosonExpression::monomial(c, t.sig);
  }
  return out;
}

BosonExpression epsilon_limit(const BosonExpression& x) {
  BosonExpression out;
  for (const auto& t : x.terms()) {
    try {
      out += BosonExpression::monomial(EpsilonScalar(epsilon_limit(t.coeff)), t.sig);
    } catch (const Error& e) {
      throw Error(ErrorKind::NegativeEpsilonDegree,
                  "divergent term " + BosonExpression::monomial(t.coeff, t.sig).str());
    }
  }
  return out;
}

}  // namespace jordan
