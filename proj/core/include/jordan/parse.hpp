#pragma once

#include <map>
#include <string>
#include <string_view>

#include "jordan/boson.hpp"

namespace jordan {

// Named values available to the boson reader: parameters (beta, delta, ...)
// and derived operators (abar+, abar-). z, eps, a+, a-, b+, b- are built in.
using SymbolTable = std::map<std::string, BosonExpression>;

// Grammar in docs/expression-language.md. Mode names bind their trailing
// sign, so write "a+ + 1" rather than "a++1".
BosonExpression parse_boson(std::string_view text, const SymbolTable& symbols = {});
EpsilonScalar parse_coefficient(std::string_view text);
Scalar parse_scalar(std::string_view text);

}  // namespace jordan
