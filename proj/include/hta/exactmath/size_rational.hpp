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

#ifndef HTA_EXACTMATH_SIZE_RATIONAL_HPP
#define HTA_EXACTMATH_SIZE_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hta/exactmath/expr.hpp"
#include "hta/exactmath/multipoly.hpp"
#include "hta/exactmath/ratfunc.hpp"
#include "hta/exactmath/unipoly.hpp"

namespace hta {

// P(x0..xk) / (Q0(x0) * ... * Qk(xk)), Q0 without positive integer roots,
// Qi (i >= 1) without nonnegative integer roots. Denominators stay factored
// per variable; common univariate factors with P are cancelled so that
// structural equality is equality of functions.
class SizeRational {
 public:
  SizeRational() : SizeRational(std::size_t{0}) {}
  explicit SizeRational(std::size_t arity)
      : num_(arity + 1), den_(arity + 1, UniPoly::one()) {}

  SizeRational(MultiPoly num, std::vector<UniPoly> dens)
      : num_(std::move(num)), den_(std::move(dens)) {
    if (den_.size() != num_.nvars())
      throw Error("ShapeMismatch", "one denominator per variable expected");
    for (auto& d : den_)
      if (d.is_zero()) throw Error("DivisionByZero", "zero denominator factor");
    reduce();
    validate();
  }

  static SizeRational constant(std::size_t arity, const Rational& c) {
    return SizeRational(MultiPoly::constant(arity + 1, c), arity, true);
  }

  // num(x0) / den(x0) at the given arity.
  static SizeRational in_x0(std::size_t arity, const UniPoly& num, const UniPoly& den) {
    std::vector<UniPoly> d(arity + 1, UniPoly::one());
    d[0] = den;
    return SizeRational(MultiPoly::from_uni(arity + 1, 0, num), std::move(d));
  }

  // Splits the denominator of f into univariate factors, one per variable.
  static SizeRational from_ratfunc(const RatFunc& f) {
    std::size_t n = f.nvars();
    const MultiPoly& D = f.den();
    std::vector<UniPoly> dens(n, UniPoly::one());
    MultiPoly prod = MultiPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (!D.uses(i)) continue;
      // terms sharing the leading term's other-variable monomial
      Exps ref = D.lead().first;
      ref[i] = 0;
      std::vector<Rational> u(D.degree_in(i) + 1);
      for (const auto& [e, c] : D.terms()) {
        Exps o = e;
        o[i] = 0;
        if (o == ref) u[e[i]] = c;
      }
      dens[i] = UniPoly(u).monic();
      prod = prod * MultiPoly::from_uni(n, i, dens[i]);
    }
    auto q = D.divide_exact(prod);
    if (!q || !q->is_constant())
      throw Error("NotInQu", "denominator is not a product of univariate factors");
    Rational c = q->constant_term();
    return SizeRational((Rational(1) / c) * f.num(), std::move(dens));
  }

  // Text form: <multipoly> [ "/" "(" <unipoly> ")" { "*" "(" <unipoly> ")" } ]
  // The "*" factors after the first top-level "/(" all belong to the
  // denominator, unlike ordinary precedence.
  static SizeRational parse(std::string_view text, std::size_t arity,
                            std::size_t line = 1, std::size_t column = 1) {
    auto names = MultiPoly::default_names(arity + 1);
    std::size_t split = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i < text.size() && split == std::string_view::npos; ++i) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '/' && depth == 0) {
        std::size_t j = i + 1;
        while (j < text.size() && text[j] == ' ') ++j;
        if (j < text.size() && text[j] == '(') split = i;
      }
    }
    RatFunc f;
    if (split == std::string_view::npos) {
      f = parse_ratfunc(text, names, line, column);
    } else {
      f = parse_ratfunc(text.substr(0, split), names, line, column);
      std::size_t p = split + 1;
      bool first = true;
      while (p < text.size()) {
        while (p < text.size() && text[p] == ' ') ++p;
        if (p >= text.size()) break;
        if (!first) {
          if (text[p] != '*')
            throw ParseError("SyntaxError", "expected '*' between denominator factors", line,
                             column + p);
          ++p;
          while (p < text.size() && text[p] == ' ') ++p;
        }
        if (p >= text.size() || text[p] != '(')
          throw ParseError("SyntaxError", "expected '(' to open a denominator factor", line,
                           column + p);
        std::size_t q = p;
        int d = 0;
        for (; q < text.size(); ++q) {
          if (text[q] == '(') ++d;
          if (text[q] == ')' && --d == 0) break;
        }
        if (q >= text.size())
          throw ParseError("SyntaxError", "unbalanced '('", line, column + p);
        RatFunc fac = parse_ratfunc(text.substr(p + 1, q - p - 1), names, line, column + p + 1);
        if (fac.is_zero())
          throw ParseError("DivisionByZero", "zero denominator factor", line, column + p);
        f = f / fac;
        p = q + 1;
        first = false;
      }
    }
    try {
      return from_ratfunc(f);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), e.detail() + " in '" + std::string(text) + "'", line, column);
    }
  }

  std::size_t arity() const { return num_.nvars() - 1; }
  const MultiPoly& numerator() const { return num_; }
  const std::vector<UniPoly>& denominators() const { return den_; }
  const UniPoly& denominator(std::size_t i) const { return den_[i]; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const {
    if (!num_.is_constant()) return false;
    for (const auto& d : den_)
      if (!d.is_one()) return false;
    return true;
  }

  Rational eval(const std::vector<Rational>& pt) const {
    if (pt.size() != num_.nvars())
      throw Error("ShapeMismatch", "evaluation point has wrong length");
    Rational d = 1;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (den_[i].is_one()) continue;
      Rational v = den_[i].eval(pt[i]);
      if (v.is_zero())
        throw Error("DenominatorZero", "denominator of x" + std::to_string(i) + " vanishes");
      d *= v;
    }
    if (num_.is_zero()) return 0;
    return num_.eval(pt) / d;
  }
  Rational eval(const std::vector<long>& pt) const {
    return eval(std::vector<Rational>(pt.begin(), pt.end()));
  }

  SizeRational operator-() const { return SizeRational(-num_, den_, true); }
  friend SizeRational operator+(const SizeRational& a, const SizeRational& b) {
    a.check_same(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t n = a.num_.nvars();
    std::vector<UniPoly> L(n);
    MultiPoly fa = MultiPoly::constant(n, 1), fb = MultiPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.den_[i] == b.den_[i]) {
        L[i] = a.den_[i];
        continue;
      }
      L[i] = UniPoly::lcm(a.den_[i], b.den_[i]);
      fa = fa * MultiPoly::from_uni(n, i, UniPoly::divmod(L[i], a.den_[i]).first);
      fb = fb * MultiPoly::from_uni(n, i, UniPoly::divmod(L[i], b.den_[i]).first);
    }
    return SizeRational(a.num_ * fa + b.num_ * fb, std::move(L), false);
  }
  friend SizeRational operator-(const SizeRational& a, const SizeRational& b) {
    return a + (-b);
  }
  friend SizeRational operator*(const SizeRational& a, const SizeRational& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return SizeRational(a.arity());
    std::vector<UniPoly> d(a.den_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.den_[i] * b.den_[i];
    return SizeRational(a.num_ * b.num_, std::move(d), false);
  }
  friend SizeRational operator*(const Rational& s, const SizeRational& a) {
    if (s.is_zero()) return SizeRational(a.arity());
    return SizeRational(s * a.num_, a.den_, true);
  }
  friend bool operator==(const SizeRational& a, const SizeRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Multiply by num(x0)/den(x0).
  SizeRational times_x0(const UniPoly& num, const UniPoly& den) const {
    return *this * in_x0(arity(), num, den);
  }

  // x_i -> x_i + c
  SizeRational shift_var(std::size_t i, const Rational& c) const {
    std::vector<UniPoly> d = den_;
    d[i] = d[i].shift(c);
    return SizeRational(num_.shift(i, c), std::move(d));
  }

  // x_i -> 0
  SizeRational set_zero(std::size_t i) const {
    Rational v = den_[i].eval(0);
    if (v.is_zero())
      throw Error("DenominatorZero", "denominator of x" + std::to_string(i) + " vanishes at 0");
    std::vector<UniPoly> d = den_;
    d[i] = UniPoly::one();
    return SizeRational((Rational(1) / v) * num_.set_value(i, 0), std::move(d));
  }

  // Same function over x0..xk; dropped variables must not occur.
  SizeRational with_arity(std::size_t k) const {
    std::size_t n = num_.nvars();
    std::vector<int> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = i <= k ? static_cast<int>(i) : -1;
    std::vector<UniPoly> d(k + 1, UniPoly::one());
    for (std::size_t i = 0; i < n; ++i) {
      if (i <= k)
        d[i] = den_[i];
      else if (!den_[i].is_one())
        throw Error("ShapeMismatch", "dropping a variable with a denominator");
    }
    return SizeRational(num_.remap(k + 1, map), std::move(d), true);
  }

  std::string str() const {
    auto names = MultiPoly::default_names(num_.nvars());
    std::string out;
    bool any = false;
    for (const auto& d : den_) any = any || !d.is_one();
    if (!any) return num_.str(names);
    out = num_.terms().size() > 1 ? "(" + num_.str(names) + ")" : num_.str(names);
    bool first = true;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (den_[i].is_one()) continue;
      out += first ? "/(" : "*(";
      out += den_[i].str(names[i]) + ")";
      first = false;
    }
    return out;
  }

 private:
  SizeRational(MultiPoly num, std::size_t arity, bool)
      : num_(std::move(num)), den_(arity + 1, UniPoly::one()) {}
  SizeRational(MultiPoly num, std::vector<UniPoly> dens, bool trusted)
      : num_(std::move(num)), den_(std::move(dens)) {
    if (!trusted) reduce();
  }

  void check_same(const SizeRational& o) const {
    if (num_.nvars() != o.num_.nvars())
      throw Error("ShapeMismatch", "size rationals of different arity");
  }

  void reduce() {
    std::size_t n = num_.nvars();
    if (num_.is_zero()) {
      for (auto& d : den_) d = UniPoly::one();
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (den_[i].is_constant()) {
        if (!den_[i].is_one()) {
          num_ = (Rational(1) / den_[i].lead()) * num_;
          den_[i] = UniPoly::one();
        }
        continue;
      }
      // a common factor must divide every x_i-coefficient polynomial
      std::map<Exps, std::vector<Rational>> groups;
      for (const auto& [e, c] : num_.terms()) {
        Exps o = e;
        o[i] = 0;
        auto& v = groups[o];
        if (v.size() <= e[i]) v.resize(e[i] + 1);
        v[e[i]] = c;
      }
      UniPoly g = den_[i];
      for (auto& [o, v] : groups) {
        g = UniPoly::gcd(g, UniPoly(v));
        if (g.degree() == 0) break;
      }
      if (g.degree() > 0) {
        num_ = *num_.divide_exact(MultiPoly::from_uni(n, i, g));
        den_[i] = UniPoly::divmod(den_[i], g).first;
      }
      Rational l = den_[i].lead();
      if (!l.is_one()) {
        num_ = (Rational(1) / l) * num_;
        den_[i] = den_[i].monic();
      }
    }
  }

  void validate() const {
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (den_[i].is_constant()) continue;
      long lo = i == 0 ? 1 : 0;
      if (has_root_at_least(den_[i], lo))
        throw Error("NotInQu", "denominator " + den_[i].str("x" + std::to_string(i)) +
                                   (i == 0 ? " has a positive integer root"
                                           : " has a nonnegative integer root"));
    }
  }

  MultiPoly num_;
  std::vector<UniPoly> den_;
};

}  // namespace hta

#endif  // HTA_EXACTMATH_SIZE_RATIONAL_HPP
