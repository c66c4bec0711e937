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

#ifndef HTA_COMPILE_DFINITE_HPP
#define HTA_COMPILE_DFINITE_HPP

#include <string>
#include <vector>

#include "hta/compile/rds.hpp"
#include "hta/core/automaton.hpp"

namespace hta {

// Q_0(n) a_n + Q_1(n) a_(n-1) + .. + Q_k(n) a_(n-k) = 0 for n >= k.
struct DFiniteRecurrence {
  std::vector<UniPoly> q;
  std::vector<Rational> init;  // a_0 .. a_(k-1)

  std::size_t order() const { return q.empty() ? 0 : q.size() - 1; }

  void check() const {
    if (q.size() < 2) throw Error("InvalidRecurrence", "order must be at least 1");
    if (init.size() != order())
      throw Error("InvalidRecurrence", "need " + std::to_string(order()) + " initial values");
    if (q[0].is_zero()) throw Error("LeadingRoot", "leading coefficient is zero");
    for (const auto& r : integer_roots(q[0]))
      if (r >= static_cast<unsigned long>(order()))
        throw Error("LeadingRoot", "leading coefficient vanishes at n = " + r.get_str());
  }
};

// `Q0(n)*a(n) + Q1(n)*a(n-1) + ... = 0 ; a(0) = .., a(1) = ..`
inline DFiniteRecurrence parse_dfinite(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("SyntaxError", "empty recurrence", 1, 1);
  std::string all;
  std::size_t line = lines[0].first;
  for (const auto& [ln, l] : lines) all += l + " ";
  auto semi = all.find(';');
  std::string rec = all.substr(0, semi), inits = semi == std::string::npos ? "" : all.substr(semi + 1);
  auto eq = rec.find('=');
  std::string lhs = rec.substr(0, eq), rhs = eq == std::string::npos ? "0" : rec.substr(eq + 1);

  // variables: n, then a(n-0), a(n-1), .. allocated on demand up to 16
  constexpr std::size_t kMaxOrder = 16;
  const std::size_t nv = kMaxOrder + 2;
  AtomResolver res = [&](const Atom& a) -> RatFunc {
    if (a.name == "n" && !a.arg && a.primes == 0) return RatFunc::var(nv, 0);
    if (a.name == "a" && a.arg && a.primes == 0) {
      std::string arg;
      for (char c : *a.arg)
        if (!std::isspace(static_cast<unsigned char>(c))) arg += c;
      std::size_t shift = 0;
      if (arg == "n") {
        shift = 0;
      } else if (arg.rfind("n-", 0) == 0 && arg.size() > 2 &&
                 arg.find_first_not_of("0123456789", 2) == std::string::npos) {
        shift = std::stoul(arg.substr(2));
      } else {
        throw ParseError("SyntaxError", "terms must be a(n) or a(n-i)", a.line, a.column);
      }
      if (shift > kMaxOrder) throw ParseError("SyntaxError", "order above 16", a.line, a.column);
      return RatFunc::var(nv, shift + 1);
    }
    throw ParseError("UnknownName", "unknown name '" + a.name + "'", a.line, a.column);
  };
  RatFunc f = ExprParser(lhs, nv, res, line, 1).parse() - ExprParser(rhs, nv, res, line, eq + 2).parse();
  if (!f.is_polynomial()) throw ParseError("SyntaxError", "recurrence must be polynomial", line, 1);
  MultiPoly p = (Rational(1) / f.den().constant_term()) * f.num();
  DFiniteRecurrence r;
  std::size_t k = 0;
  for (std::size_t i = 1; i < nv; ++i)
    if (p.uses(i)) k = i - 1;
  for (std::size_t i = 0; i <= k; ++i) {
    MultiPoly c = p.partial(i + 1);
    if (c.uses(i + 1) || p.coefficients_in(i + 1).count(2))
      throw ParseError("SyntaxError", "recurrence must be linear in the a terms", line, 1);
    for (std::size_t j = 1; j < nv; ++j)
      if (c.uses(j)) throw ParseError("SyntaxError", "recurrence must be linear in the a terms", line, 1);
    r.q.push_back(c.to_uni(0));
  }
  MultiPoly rest = p;
  for (std::size_t i = 1; i < nv; ++i) rest = rest.set_value(i, 0);
  if (!rest.is_zero()) throw ParseError("SyntaxError", "recurrence must be homogeneous", line, 1);

  // initial values a(i) = v
  std::size_t col = semi == std::string::npos ? 1 : semi + 2;
  std::stringstream ss(inits);
  std::string item;
  std::map<std::size_t, Rational> vals;
  while (std::getline(ss, item, ',')) {
    if (detail::trim(item).empty()) continue;
    auto e = item.find('=');
    std::string name, compact;
    for (char c : item.substr(0, e == std::string::npos ? 0 : e))
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (e == std::string::npos || compact.size() < 4 || compact.rfind("a(", 0) != 0 || compact.back() != ')' ||
        compact.find_first_not_of("0123456789", 2) != compact.size() - 1)
      throw ParseError("SyntaxError", "initial values must read a(i) = value", line, col);
    std::size_t idx = std::stoul(compact.substr(2, compact.size() - 3));
    vals[idx] = detail::parse_constant(item.substr(e + 1), line, col);
    col += item.size() + 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!vals.count(i)) throw ParseError("SyntaxError", "missing a(" + std::to_string(i) + ")", line, 1);
    r.init.push_back(vals[i]);
  }
  return r;
}

// State after size n: [a_n, .., a_(n+k-1)]. The last column solves the
// recurrence at m = n + k - 1 = x1 + k.
inline Automaton compile_dfinite(const DFiniteRecurrence& r) {
  r.check();
  const std::size_t k = r.order();
  RankedAlphabet alpha({{"sigma0", 0}, {"sigma1", 1}});
  std::map<std::string, SizeMatrix> w;
  w.emplace("sigma0", nullary_matrix(r.init));
  SizeMatrix m(k, k, 1);
  for (std::size_t j = 0; j + 1 < k; ++j) m.set(j + 1, j, SizeRational::constant(1, 1));
  UniPoly den = r.q[0].shift(Rational(k));
  for (std::size_t i = 0; i < k; ++i) {
    UniPoly num = -r.q[k - i].shift(Rational(k));
    if (num.is_zero()) continue;
    m.set(i, k - 1, SizeRational(MultiPoly::from_uni(2, 1, num), {UniPoly::one(), den}));
  }
  w.emplace("sigma1", std::move(m));
  return Automaton(k, std::move(alpha), std::move(w));
}

}  // namespace hta

#endif  // HTA_COMPILE_DFINITE_HPP
