#include "jordan/parse.hpp"

#include "expr_parser.hpp"

namespace jordan {

namespace {

struct BosonOps {
  using Value = BosonExpression;
  const SymbolTable& symbols;

  static EpsilonScalar invertible(const Value& v, const char* what) {
    if (!v.is_scalar() || !v.scalar_value().is_monomial())
      throw Error(ErrorKind::Parse, std::string(what) + " needs a monomial scalar, got " + v.str());
    return v.scalar_value();
  }

  Value number(const Rational& q) { return Value(EpsilonScalar(q)); }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) { return invertible(b, "division").inverse() * a; }
  Value pow(const Value& a, int n) {
    if (n >= 0) return a.pow(n);
    return Value(invertible(a, "negative power").inverse()).pow(-n);
  }
  Value commutator(const Value& a, const Value& b) { return jordan::commutator(a, b); }
  Value tensor(const Value&, const Value&) { throw Error(ErrorKind::Parse, "'@' is not allowed in boson expressions"); }
  bool suffixed(const std::string& id) const {
    return id == "a+" || id == "a-" || id == "b+" || id == "b-" || symbols.count(id) > 0;
  }

  template <class P>
  Value exp_slope(long k, const std::string& mode, P& p) {
    if (mode != "a+") p.fail("exponentials are only defined for a+");
    if (k % 2 != 0) p.fail("exponential slopes are multiples of 2z");
    return Value::exp_a(static_cast<int>(k / 2));
  }

  template <class P>
  Value call(const std::string& fn, const Value& arg, P& p) {
    if (fn == "sqrt") {
      if (!arg.is_scalar() || !arg.scalar_value().is_plain() || !arg.scalar_value().plain().is_unit())
        p.fail("sqrt takes a non-negative integer");
      Rational q = arg.scalar_value().plain().as_rational();
      if (!is_integer(q) || q < 0) p.fail("sqrt takes a non-negative integer");
      return Value(EpsilonScalar(Scalar::sqrt_of(q.get_num().get_ui())));
    }
    if (fn == "exp") {
      auto ts = arg.terms();
      if (ts.size() == 1 && ts[0].sig == Signature{0, 1, 0, 0, 0} && ts[0].coeff.is_plain()) {
        Scalar c = ts[0].coeff.plain();
        if (c.is_rational()) {
          ZPolynomial poly = c.rational_part();
          Rational k = poly.coeff(1);
          if (poly == ZPolynomial::monomial(k, 1) && is_integer(k) && k.get_num() % 2 == 0)
            return Value::exp_a(static_cast<int>(k.get_num().get_si() / 2));
        }
      }
      p.fail("exp takes (2k)*z*a+, got " + arg.str());
    }
    p.fail("unknown function '" + fn + "'");
  }

  template <class P>
  Value identifier(const std::string& id, P& p) {
    if (auto it = symbols.find(id); it != symbols.end()) return it->second;
    if (id == "z") return Value(EpsilonScalar(Scalar::z()));
    if (id == "eps") return Value(EpsilonScalar::eps(1));
    if (id == "a+") return Value::a_plus();
    if (id == "a-") return Value::a_minus();
    if (id == "b+") return Value::b_plus();
    if (id == "b-") return Value::b_minus();
    p.fail("unknown symbol '" + id + "'");
  }
};

}  // namespace

BosonExpression parse_boson(std::string_view text, const SymbolTable& symbols) {
  BosonOps ops{symbols};
  detail::ExprParser<BosonOps> parser(text, ops);
  return parser.parse_all();
}

EpsilonScalar parse_coefficient(std::string_view text) {
  BosonExpression x = parse_boson(text);
  if (!x.is_scalar()) throw Error(ErrorKind::Parse, "not a scalar: '" + std::string(text) + "'");
  return x.scalar_value();
}

Scalar parse_scalar(std::string_view text) {
  EpsilonScalar e = parse_coefficient(text);
  if (!e.is_plain()) throw Error(ErrorKind::Parse, "eps not allowed here: '" + std::string(text) + "'");
  return e.plain();
}

}  // namespace jordan
