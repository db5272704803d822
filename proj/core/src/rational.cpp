#include "jordan/rational.hpp"

#include <cctype>

#include "jordan/errors.hpp"

namespace jordan {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NegativeEpsilonDegree: return "NegativeEpsilonDegree";
    case ErrorKind::NegativeZDegree: return "NegativeZDegree";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::InvalidBeta: return "InvalidBeta";
    case ErrorKind::MarginInsufficient: return "MarginInsufficient";
    case ErrorKind::NonNilpotentExponent: return "NonNilpotentExponent";
    case ErrorKind::SingularR: return "SingularR";
    case ErrorKind::NotCompletelyReducible: return "NotCompletelyReducible";
    case ErrorKind::NonRationalEigenvalue: return "NonRationalEigenvalue";
    case ErrorKind::RelationFailure: return "RelationFailure";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace jordan
