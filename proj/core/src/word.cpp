#include "jordan/word.hpp"

#include <algorithm>
#include <sstream>

#include "expr_parser.hpp"

namespace jordan {

namespace {

// Merge neighbouring exponentials of one generator; drop exp(0).
Monomial merge_exps(Monomial m) {
  Monomial out;
  for (auto& l : m) {
    if (!out.empty() && out.back().is_exp() && l.is_exp() && out.back().gen == l.gen) {
      out.back().slope += l.slope;
      if (out.back().slope == 0) out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return out;
}

std::string coeff_prefix(const EpsilonScalar& c, bool has_letters) {
  if (c == EpsilonScalar(1L) && has_letters) return "";
  std::string s = "(" + c.str() + ")";
  return has_letters ? s + "*" : s;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "*" : "") + m[i].str();
  return s;
}

}  // namespace

std::string Letter::str() const {
  if (!is_exp()) return gen;
  return "exp(" + to_string(slope) + "*z*" + gen + ")";
}

Word::Word(const EpsilonScalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Word Word::generator(const std::string& name) { return monomial(1L, {Letter{name, Rational(0)}}); }

Word Word::exp(const std::string& name, const Rational& slope) {
  return monomial(1L, {Letter{name, slope}});
}

Word Word::monomial(const EpsilonScalar& c, Monomial m) {
  Word w;
  w.add(std::move(m), c);
  return w;
}

void Word::add(Monomial m, const EpsilonScalar& c) {
  if (c.is_zero()) return;
  m = merge_exps(std::move(m));
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Word::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

EpsilonScalar Word::scalar_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? EpsilonScalar() : it->second;
}

std::set<std::string> Word::generators() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& l : m) out.insert(l.gen);
  return out;
}

Word Word::operator-() const {
  Word w = *this;
  for (auto& [m, c] : w.terms_) c = -c;
  return w;
}

Word& Word::operator+=(const Word& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Word& Word::operator-=(const Word& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

Word operator*(const EpsilonScalar& c, const Word& w) {
  Word out;
  for (const auto& [m, cw] : w.terms_) out.add(m, c * cw);
  return out;
}

Word Word::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a word");
  Word r(1L);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string Word::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += coeff_prefix(c, !m.empty()) + monomial_str(m);
  }
  return s;
}

Word commutator(const Word& x, const Word& y) { return x * y - y * x; }

TensorWord TensorWord::tensor(const Word& left, const Word& right) {
  TensorWord t;
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms()) t.add({ml, mr}, cl * cr);
  return t;
}

void TensorWord::add(const Key& k, const EpsilonScalar& c) {
  if (c.is_zero()) return;
  Key key{merge_exps(k.first), merge_exps(k.second)};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorWord TensorWord::operator-() const {
  TensorWord t = *this;
  for (auto& [k, c] : t.terms_) c = -c;
  return t;
}

TensorWord& TensorWord::operator+=(const TensorWord& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorWord& TensorWord::operator-=(const TensorWord& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorWord operator*(const TensorWord& a, const TensorWord& b) {
  TensorWord out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Monomial l = ka.first, r = ka.second;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      r.insert(r.end(), kb.second.begin(), kb.second.end());
      out.add({std::move(l), std::move(r)}, ca * cb);
    }
  return out;
}

TensorWord operator*(const EpsilonScalar& c, const TensorWord& t) {
  TensorWord out;
  for (const auto& [k, ct] : t.terms_) out.add(k, c * ct);
  return out;
}

TensorWord TensorWord::flipped() const {
  TensorWord out;
  for (const auto& [k, c] : terms_) out.add({k.second, k.first}, c);
  return out;
}

std::string TensorWord::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    std::string l = k.first.empty() ? "1" : monomial_str(k.first);
    std::string r = k.second.empty() ? "1" : monomial_str(k.second);
    s += coeff_prefix(c, true) + l + "@" + r;
  }
  return s;
}

namespace {

struct WordValue {
  bool is_tensor = false;
  Word w;
  TensorWord t;
};

struct WordOps {
  using Value = WordValue;
  const std::set<std::string>& generators;

  static Value plain(Word w) { return {false, std::move(w), {}}; }
  static Value tens(TensorWord t) { return {true, {}, std::move(t)}; }
  static TensorWord as_tensor(const Value& v) {
    if (v.is_tensor) return v.t;
    if (!v.w.is_scalar()) throw Error(ErrorKind::Parse, "cannot mix plain words with tensor words: " + v.w.str());
    return TensorWord::tensor(v.w, Word(1L));
  }
  static EpsilonScalar invertible(const Value& v, const char* what) {
    if (v.is_tensor || !v.w.is_scalar() || !v.w.scalar_value().is_monomial())
      throw Error(ErrorKind::Parse, std::string(what) + " needs a monomial scalar");
    return v.w.scalar_value();
  }

  Value number(const Rational& q) { return plain(Word(EpsilonScalar(q))); }
  Value add(const Value& a, const Value& b) {
    if (!a.is_tensor && !b.is_tensor) return plain(a.w + b.w);
    return tens(as_tensor(a) + as_tensor(b));
  }
  Value sub(const Value& a, const Value& b) {
    if (!a.is_tensor && !b.is_tensor) return plain(a.w - b.w);
    return tens(as_tensor(a) - as_tensor(b));
  }
  Value neg(const Value& a) { return a.is_tensor ? tens(-a.t) : plain(-a.w); }
  Value mul(const Value& a, const Value& b) {
    if (!a.is_tensor && !b.is_tensor) return plain(a.w * b.w);
    if (!a.is_tensor && a.w.is_scalar()) return tens(a.w.scalar_value() * b.t);
    if (!b.is_tensor && b.w.is_scalar()) return tens(b.w.scalar_value() * a.t);
    return tens(as_tensor(a) * as_tensor(b));
  }
  Value div(const Value& a, const Value& b) {
    EpsilonScalar inv = invertible(b, "division").inverse();
    return a.is_tensor ? tens(inv * a.t) : plain(inv * a.w);
  }
  Value pow(const Value& a, int n) {
    if (a.is_tensor) throw Error(ErrorKind::Parse, "powers of tensor words are not supported");
    if (n >= 0) return plain(a.w.pow(n));
    return plain(Word(invertible(a, "negative power").inverse()).pow(-n));
  }
  Value commutator(const Value& a, const Value& b) {
    if (a.is_tensor || b.is_tensor) return tens(as_tensor(a) * as_tensor(b) - as_tensor(b) * as_tensor(a));
    return plain(jordan::commutator(a.w, b.w));
  }
  Value tensor(const Value& a, const Value& b) {
    if (a.is_tensor || b.is_tensor) throw Error(ErrorKind::Parse, "nested '@'");
    return tens(TensorWord::tensor(a.w, b.w));
  }
  bool suffixed(const std::string&) const { return false; }

  template <class P>
  Value exp_slope(long, const std::string&, P&) {
    throw Error(ErrorKind::Parse, "E[...] is boson syntax; use exp(c*z*X) in words");
  }

  template <class P>
  Value call(const std::string& fn, const Value& arg, P& p) {
    if (arg.is_tensor) p.fail("function of a tensor word");
    if (fn == "sqrt") {
      if (!arg.w.is_scalar() || !arg.w.scalar_value().is_plain() || !arg.w.scalar_value().plain().is_unit())
        p.fail("sqrt takes a non-negative integer");
      Rational q = arg.w.scalar_value().plain().as_rational();
      if (!is_integer(q) || q < 0) p.fail("sqrt takes a non-negative integer");
      return plain(Word(EpsilonScalar(Scalar::sqrt_of(q.get_num().get_ui()))));
    }
    if (fn == "exp") {
      const auto& ts = arg.w.terms();
      if (ts.size() == 1 && ts.begin()->first.size() == 1 && !ts.begin()->first[0].is_exp() &&
          ts.begin()->second.is_plain()) {
        Scalar c = ts.begin()->second.plain();
        ZPolynomial poly = c.rational_part();
        Rational k = poly.coeff(1);
        if (c.is_rational() && k != 0 && poly == ZPolynomial::monomial(k, 1))
          return plain(Word::exp(ts.begin()->first[0].gen, k));
      }
      p.fail("exp takes c*z*X with rational c and a generator X, got " + arg.w.str());
    }
    p.fail("unknown function '" + fn + "'");
  }

  template <class P>
  Value identifier(const std::string& id, P& p) {
    if (id == "z") return plain(Word(EpsilonScalar(Scalar::z())));
    if (id == "eps") return plain(Word(EpsilonScalar::eps(1)));
    if (!generators.empty() && generators.count(id) == 0) p.fail("unknown generator '" + id + "'");
    return plain(Word::generator(id));
  }
};

}  // namespace

Word parse_word(std::string_view text, const std::set<std::string>& generators) {
  WordOps ops{generators};
  detail::ExprParser<WordOps> parser(text, ops);
  WordValue v = parser.parse_all();
  if (v.is_tensor) throw Error(ErrorKind::Parse, "expected a plain word, got a tensor word: '" + std::string(text) + "'");
  return v.w;
}

TensorWord parse_tensor_word(std::string_view text, const std::set<std::string>& generators) {
  WordOps ops{generators};
  detail::ExprParser<WordOps> parser(text, ops);
  return WordOps::as_tensor(parser.parse_all());
}

namespace {

EpsilonScalar power_of(const EpsilonScalar& e, int n) {
  EpsilonScalar r(1L);
  for (int i = 0; i < n; ++i) r = r * e;
  return r;
}

// Returns the rescaled monomial coefficient factor and the new monomial.
std::pair<EpsilonScalar, Monomial> substitute_monomial(const Monomial& m, const GeneratorSubstitution& sub) {
  EpsilonScalar factor(1L);
  Monomial out;
  for (const auto& l : m) {
    auto it = sub.images.find(l.gen);
    if (it == sub.images.end()) throw Error(ErrorKind::InvalidArgument, "no image for generator " + l.gen);
    const auto& [f, image] = it->second;
    if (l.is_exp()) {
      EpsilonScalar scale = f * EpsilonScalar::eps(sub.z_power);
      if (!(scale == EpsilonScalar(1L)))
        throw Error(ErrorKind::InvalidArgument, "substitution changes the exponent of " + l.str() + " by " + scale.str());
      out.push_back(Letter{image, l.slope});
    } else {
      factor = factor * f;
      out.push_back(Letter{image, Rational(0)});
    }
  }
  return {factor, out};
}

}  // namespace

Word substitute(const Word& w, const GeneratorSubstitution& sub) {
  Word out;
  for (const auto& [m, c] : w.terms()) {
    auto [f, nm] = substitute_monomial(m, sub);
    out += Word::monomial(rescale_z(c, sub.z_power) * f, nm);
  }
  return out;
}

TensorWord substitute(const TensorWord& t, const GeneratorSubstitution& sub) {
  TensorWord out;
  for (const auto& [k, c] : t.terms()) {
    auto [fl, l] = substitute_monomial(k.first, sub);
    auto [fr, r] = substitute_monomial(k.second, sub);
    out += (rescale_z(c, sub.z_power) * fl * fr) * TensorWord::tensor(Word::monomial(1L, l), Word::monomial(1L, r));
  }
  return out;
}

Word epsilon_limit(const Word& w) {
  Word out;
  for (const auto& [m, c] : w.terms()) {
    try {
      out += Word::monomial(EpsilonScalar(epsilon_limit(c)), m);
    } catch (const Error&) {
      throw Error(ErrorKind::NegativeEpsilonDegree, "divergent term " + Word::monomial(c, m).str());
    }
  }
  return out;
}

TensorWord epsilon_limit(const TensorWord& t) {
  TensorWord out;
  for (const auto& [k, c] : t.terms()) {
    TensorWord single = c * TensorWord::tensor(Word::monomial(1L, k.first), Word::monomial(1L, k.second));
    try {
      out += EpsilonScalar(epsilon_limit(c)) *
             TensorWord::tensor(Word::monomial(1L, k.first), Word::monomial(1L, k.second));
    } catch (const Error&) {
      throw Error(ErrorKind::NegativeEpsilonDegree, "divergent term " + single.str());
    }
  }
  return out;
}

Word apply_antihomomorphism(const Word& w, const std::map<std::string, Word>& images) {
  Word out;
  for (const auto& [m, c] : w.terms()) {
    Word acc(c);
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      auto img = images.find(it->gen);
      if (img == images.end()) throw Error(ErrorKind::InvalidArgument, "no antipode image for " + it->gen);
      if (it->is_exp()) {
        if (!(img->second == -Word::generator(it->gen)))
          throw Error(ErrorKind::Unsupported, "antipode of " + it->str() + " needs gamma(" + it->gen + ") = -" + it->gen);
        acc = acc * Word::exp(it->gen, -it->slope);
      } else {
        acc = acc * img->second;
      }
    }
    out += acc;
  }
  return out;
}

namespace {

bool commute(const Letter& a, const Letter& b, const CommutingPairs& pairs) {
  return a.gen == b.gen || pairs.count({a.gen, b.gen}) > 0 || pairs.count({b.gen, a.gen}) > 0;
}

Monomial normal_monomial(Monomial m, const CommutingPairs& pairs) {
  for (;;) {
    Monomial out;
    std::vector<bool> taken(m.size(), false);
    for (std::size_t n = 0; n < m.size(); ++n) {
      // Smallest letter that can travel to the front of what is left.
      std::size_t best = m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (taken[i]) continue;
        bool free = true;
        for (std::size_t j = 0; j < i && free; ++j)
          if (!taken[j] && !commute(m[j], m[i], pairs)) free = false;
        if (free && (best == m.size() || m[i] < m[best])) best = i;
      }
      taken[best] = true;
      out.push_back(m[best]);
    }
    Monomial merged = merge_exps(out);
    if (merged == m) return merged;
    m = std::move(merged);
  }
}

}  // namespace

Word commutation_normal_form(const Word& w, const CommutingPairs& pairs) {
  Word out;
  for (const auto& [m, c] : w.terms()) out += Word::monomial(c, normal_monomial(m, pairs));
  return out;
}

TensorWord commutation_normal_form(const TensorWord& t, const CommutingPairs& pairs) {
  TensorWord out;
  for (const auto& [k, c] : t.terms())
    out += c * TensorWord::tensor(Word::monomial(1L, normal_monomial(k.first, pairs)),
                                  Word::monomial(1L, normal_monomial(k.second, pairs)));
  return out;
}

}  // namespace jordan
