// Copyright 2026 The hta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTA_EXACTMATH_EXPR_HPP
#define HTA_EXACTMATH_EXPR_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "hta/exactmath/ratfunc.hpp"

namespace hta {

// A leaf of an arithmetic expression: `name`, `name''`, `name(arg)`.
struct Atom {
  std::string name;
  int primes = 0;
  std::optional<std::string> arg;
  std::size_t line = 1, column = 1;
};

using AtomResolver = std::function<RatFunc(const Atom&)>;

//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('-'|'+') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | ident primes? ('(' raw ')')? | '(' expr ')'
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t nvars, AtomResolver resolve,
             std::size_t line = 1, std::size_t column = 1)
      : s_(text), n_(nvars), resolve_(std::move(resolve)), line0_(line), col0_(column) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (p_ < s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return r;
  }

  [[noreturn]] void fail(const std::string& msg, std::string code = "SyntaxError") const {
    throw ParseError(std::move(code), msg, line0_, col0_ + p_);
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        std::size_t at = p_;
        RatFunc d = unary();
        if (d.is_zero()) {
          p_ = at;
          fail("division by zero", "DivisionByZero");
        }
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc b = atom();
    if (eat('^')) {
      skip();
      std::size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (st == p_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(st, p_ - st)));
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  RatFunc atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return RatFunc::constant(n_, Rational(BigInt(std::string(s_.substr(st, p_ - st)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Atom a;
      a.line = line0_;
      a.column = col0_ + p_;
      std::size_t st = p_;
      while (p_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
        ++p_;
      a.name = std::string(s_.substr(st, p_ - st));
      while (p_ < s_.size() && s_[p_] == '\'') {
        ++a.primes;
        ++p_;
      }
      if (p_ < s_.size() && s_[p_] == '(') {
        int depth = 0;
        std::size_t open = p_;
        for (; p_ < s_.size(); ++p_) {
          if (s_[p_] == '(') ++depth;
          if (s_[p_] == ')' && --depth == 0) break;
        }
        if (p_ >= s_.size()) {
          p_ = open;
          fail("unbalanced '('");
        }
        a.arg = std::string(s_.substr(open + 1, p_ - open - 1));
        ++p_;
      }
      return resolve_(a);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t p_ = 0;
  std::size_t n_;
  AtomResolver resolve_;
  std::size_t line0_, col0_;
};

// Resolver for plain variable names; anything else is UnknownName.
inline AtomResolver named_variables(const std::vector<std::string>& names) {
  return [names](const Atom& a) -> RatFunc {
    if (a.primes == 0 && !a.arg)
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == a.name) return RatFunc::var(names.size(), i);
    std::string shown = a.name + std::string(a.primes, '\'');
    if (a.arg) shown += "(" + *a.arg + ")";
    throw ParseError("UnknownName", "unknown name '" + shown + "'", a.line, a.column);
  };
}

inline RatFunc parse_ratfunc(std::string_view text, const std::vector<std::string>& names,
                             std::size_t line = 1, std::size_t column = 1) {
  return ExprParser(text, names.size(), named_variables(names), line, column).parse();
}

}  // namespace hta

#endif  // HTA_EXACTMATH_EXPR_HPP
