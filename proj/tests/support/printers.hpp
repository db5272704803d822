#pragma once

#include <string>

#include "doctest.h"
#include "jordan/boson.hpp"
#include "jordan/matrix.hpp"
#include "jordan/word.hpp"

namespace doctest {

template <>
struct StringMaker<jordan::Scalar> {
  static String convert(const jordan::Scalar& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<jordan::EpsilonScalar> {
  static String convert(const jordan::EpsilonScalar& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<jordan::ZPolynomial> {
  static String convert(const jordan::ZPolynomial& p) { return p.str().c_str(); }
};
template <>
struct StringMaker<jordan::BosonExpression> {
  static String convert(const jordan::BosonExpression& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<jordan::Word> {
  static String convert(const jordan::Word& w) { return w.str().c_str(); }
};
template <>
struct StringMaker<jordan::Matrix> {
  static String convert(const jordan::Matrix& m) {
    std::string out = "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out += (m(r, c).is_zero() ? std::string(".") : m(r, c).str()) + "  ";
      out += "\n";
    }
    return out.c_str();
  }
};

}  // namespace doctest
