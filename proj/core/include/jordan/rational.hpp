#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jordan {

// mpq_class keeps itself canonical (lowest terms, positive denominator)
// as long as every constructor path goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace jordan
