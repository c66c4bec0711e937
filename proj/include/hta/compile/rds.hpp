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

#ifndef HTA_COMPILE_RDS_HPP
#define HTA_COMPILE_RDS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "hta/exactmath/expr.hpp"
#include "hta/series/prefix.hpp"

namespace hta {

// y_i' = P_i / Q_i over y_1..y_k, with y_i(0) given. Variable 0 is the target.
struct RDS {
  std::vector<std::string> vars;
  std::vector<RatFunc> rhs;
  std::vector<Rational> init;

  std::size_t size() const { return vars.size(); }

  // Every denominator is nonzero at the initial point.
  bool is_rda() const {
    for (const auto& f : rhs)
      if (f.den().eval(init).is_zero()) return false;
    return true;
  }

  bool is_polynomial() const {
    for (const auto& f : rhs)
      if (!f.is_polynomial()) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i)
      out += vars[i] + "' = " + rhs[i].str(vars) + " ; " + vars[i] + "(0) = " + init[i].str() + "\n";
    return out;
  }

  friend bool operator==(const RDS&, const RDS&) = default;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Lines with comments ('#') stripped, keeping 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t line = 1, st = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string l(text.substr(st, i - st));
      if (auto h = l.find('#'); h != std::string::npos) l.resize(h);
      if (!trim(l).empty()) out.emplace_back(line, l);
      ++line;
      st = i + 1;
    }
  }
  return out;
}

inline Rational parse_constant(std::string_view text, std::size_t line, std::size_t col) {
  RatFunc f = ExprParser(text, 0, named_variables({}), line, col).parse();
  return f.num().constant_term() / f.den().constant_term();
}

}  // namespace detail

// One equation per line:  name' = expr ; name(0) = value
// A variable `x` used without an equation of its own gets x' = 1, x(0) = 0.
inline RDS parse_rds(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("SyntaxError", "empty system", 1, 1);
  struct Raw {
    std::size_t line, rhs_col, init_col;
    std::string rhs, init;
  };
  RDS s;
  std::vector<Raw> raw;
  for (const auto& [ln, l] : lines) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError("SyntaxError", "expected `name' = expression`", ln, 1);
    std::string lhs = detail::trim(std::string_view(l).substr(0, eq));
    if (lhs.empty() || lhs.back() != '\'' || !detail::is_ident(lhs.substr(0, lhs.size() - 1)))
      throw ParseError("SyntaxError", "left-hand side must be `name'`", ln, 1);
    std::string name = lhs.substr(0, lhs.size() - 1);
    for (const auto& v : s.vars)
      if (v == name) throw ParseError("SyntaxError", "second equation for '" + name + "'", ln, 1);
    auto semi = l.find(';', eq);
    if (semi == std::string::npos)
      throw ParseError("SyntaxError", "missing initial value `; " + name + "(0) = value`", ln, l.size() + 1);
    std::string clause = l.substr(semi + 1);
    auto ieq = clause.find('=');
    std::string ilhs = detail::trim(clause.substr(0, ieq == std::string::npos ? clause.size() : ieq));
    std::string compact;
    for (char c : ilhs)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (ieq == std::string::npos || compact != name + "(0)")
      throw ParseError("SyntaxError", "initial clause must read `" + name + "(0) = value`", ln, semi + 2);
    s.vars.push_back(name);
    raw.push_back({ln, eq + 2, semi + 2 + ieq + 1, l.substr(eq + 1, semi - eq - 1), clause.substr(ieq + 1)});
  }
  bool has_x = false;
  for (const auto& v : s.vars) has_x |= v == "x";
  std::vector<std::string> names = s.vars;
  if (!has_x) names.push_back("x");
  for (const auto& r : raw) {
    s.rhs.push_back(parse_ratfunc(r.rhs, names, r.line, r.rhs_col));
    s.init.push_back(detail::parse_constant(r.init, r.line, r.init_col));
  }
  if (!has_x) {
    bool used = false;
    for (const auto& f : s.rhs) used |= f.uses(names.size() - 1);
    if (used) {
      s.vars.push_back("x");
      s.rhs.push_back(RatFunc::constant(names.size(), 1));
      s.init.push_back(0);
    } else {
      std::vector<int> map(names.size());
      for (std::size_t i = 0; i + 1 < names.size(); ++i) map[i] = static_cast<int>(i);
      map.back() = -1;
      for (auto& f : s.rhs) f = RatFunc(f.num().remap(s.vars.size(), map), f.den().remap(s.vars.size(), map));
    }
  }
  return s;
}

// Coefficients 0..n of p(y_1(x), .., y_k(x)) from the first n+1 coefficients
// of each y_i.
inline SeriesPrefix compose_prefix(const MultiPoly& p, const std::vector<SeriesPrefix>& ys, std::size_t n) {
  SeriesPrefix out(n + 1);
  std::vector<std::vector<SeriesPrefix>> powers(ys.size());
  auto power = [&](std::size_t i, unsigned e) -> const SeriesPrefix& {
    auto& pw = powers[i];
    if (pw.empty()) {
      SeriesPrefix one(n + 1);
      one[0] = 1;
      pw.push_back(one);
    }
    while (pw.size() <= e) {
      SeriesPrefix next(n + 1);
      const SeriesPrefix& last = pw.back();
      for (std::size_t a = 0; a <= n; ++a) {
        if (last[a].is_zero()) continue;
        for (std::size_t b = 0; a + b <= n; ++b) next[a + b] += last[a] * ys[i][b];
      }
      pw.push_back(std::move(next));
    }
    return pw[e];
  };
  for (const auto& [e, c] : p.terms()) {
    SeriesPrefix term(n + 1);
    term[0] = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term = series_cauchy(term, power(i, e[i]));
    }
    for (std::size_t m = 0; m <= n; ++m) out[m] += term[m];
  }
  return out;
}

// Power-series solution, coefficient by coefficient: the coefficient of x^m
// in Q_i(y) y_i' = P_i(y) fixes y_(m+1,i).
inline std::vector<SeriesPrefix> taylor_oracle(const RDS& s, std::size_t n_max) {
  if (!s.is_rda()) throw Error("NotRDA", "a denominator vanishes at the initial point");
  const std::size_t k = s.size();
  std::vector<SeriesPrefix> ys(k, SeriesPrefix(n_max + 1));
  for (std::size_t i = 0; i < k; ++i) ys[i][0] = s.init[i];
  for (std::size_t m = 0; m < n_max; ++m) {
    std::vector<SeriesPrefix> next = ys;
    for (std::size_t i = 0; i < k; ++i) {
      SeriesPrefix p = compose_prefix(s.rhs[i].num(), ys, m);
      SeriesPrefix q = compose_prefix(s.rhs[i].den(), ys, m);
      Rational acc = p[m];
      for (std::size_t l = 1; l <= m; ++l) acc -= q[l] * Rational(m + 1 - l) * ys[i][m + 1 - l];
      next[i][m + 1] = acc / (q[0] * Rational(m + 1));
    }
    ys = std::move(next);
  }
  return ys;
}

}  // namespace hta

#endif  // HTA_COMPILE_RDS_HPP
