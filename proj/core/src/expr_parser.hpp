#pragma once

// Recursive-descent reader shared by the boson and word languages.
//
//   sum     := ['+'|'-'] tensor (('+'|'-') tensor)*
//   tensor  := product ['@' product]
//   product := power (('*'|'/') power)*
//   power   := atom ['^' ['-'] INT]
//   atom    := INT | NAME | NAME '(' sum ')' | 'E[' [-]INT 'z' ',' NAME ']'
//            | '(' sum ')' | '[' sum ',' sum ']'
//
// NAME may carry a trailing '+' or '-' when Ops::suffixed(name) accepts it
// (boson modes a+, b-, ...).

#include <cctype>
#include <string>
#include <string_view>

#include "jordan/errors.hpp"
#include "jordan/rational.hpp"

namespace jordan::detail {

template <class Ops>
class ExprParser {
 public:
  using V = typename Ops::Value;

  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  V parse_all() {
    V v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  V sum() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    V acc = tensor();
    if (neg) acc = ops_.neg(acc);
    for (;;) {
      if (accept('+')) {
        acc = ops_.add(acc, tensor());
      } else if (accept('-')) {
        acc = ops_.sub(acc, tensor());
      } else {
        return acc;
      }
    }
  }

  V tensor() {
    V left = product();
    if (accept('@')) return ops_.tensor(left, product());
    return left;
  }

  V product() {
    V acc = power();
    for (;;) {
      if (accept('*')) {
        acc = ops_.mul(acc, power());
      } else if (accept('/')) {
        acc = ops_.div(acc, power());
      } else {
        return acc;
      }
    }
  }

  V power() {
    V base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      long n = integer();
      return ops_.pow(base, static_cast<int>(neg ? -n : n));
    }
    return base;
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = sum();
      expect(')');
      return v;
    }
    if (c == '[') {
      ++pos_;
      V x = sum();
      expect(',');
      V y = sum();
      expect(']');
      return ops_.commutator(x, y);
    }
    if (c == '-') {
      ++pos_;
      return ops_.neg(power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.number(Rational(integer()));
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("unexpected '" + std::string(1, c) + "'");
    std::string id = name();
    if (id == "E" && peek('[')) {
      expect('[');
      bool neg = accept('-');
      long k = 1;
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) k = integer();
      skip();
      if (name() != "z") fail("expected '<int>z' inside E[...]");
      expect(',');
      std::string mode = name();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) mode += s_[pos_++];
      expect(']');
      return ops_.exp_slope(neg ? -k : k, mode, *this);
    }
    if (peek('(')) {
      expect('(');
      V arg = sum();
      expect(')');
      return ops_.call(id, arg, *this);
    }
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-') && ops_.suffixed(id + s_[pos_])) {
      id += s_[pos_++];
    }
    return ops_.identifier(id, *this);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Ops& ops_;
};

}  // namespace jordan::detail
