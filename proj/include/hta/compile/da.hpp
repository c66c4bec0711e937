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

#ifndef HTA_COMPILE_DA_HPP
#define HTA_COMPILE_DA_HPP

#include "hta/compile/rds.hpp"

namespace hta {

// P(y, y', .., y^(n)) = 0 with the jet y(0), y'(0), ...
struct DAEquation {
  MultiPoly p;  // variable i is y^(i)
  std::vector<Rational> jet;

  std::size_t order() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (p.uses(i)) n = i;
    return n;
  }
};

// `expression [= expression] ; y(0) = .., y'(0) = ..`
inline DAEquation parse_da(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("SyntaxError", "empty equation", 1, 1);
  std::string all;
  std::size_t line = lines[0].first;
  for (const auto& [ln, l] : lines) all += l + " ";
  auto semi = all.find(';');
  std::string eq = all.substr(0, semi), jets = semi == std::string::npos ? "" : all.substr(semi + 1);
  constexpr std::size_t kMaxOrder = 16;
  const std::size_t nv = kMaxOrder + 1;
  AtomResolver res = [&](const Atom& a) -> RatFunc {
    if (a.name == "y" && !a.arg && static_cast<std::size_t>(a.primes) <= kMaxOrder)
      return RatFunc::var(nv, static_cast<std::size_t>(a.primes));
    throw ParseError("UnknownName", "unknown name '" + a.name + std::string(a.primes, '\'') + "'", a.line,
                     a.column);
  };
  auto e = eq.find('=');
  RatFunc f = ExprParser(eq.substr(0, e), nv, res, line, 1).parse();
  if (e != std::string::npos) f = f - ExprParser(eq.substr(e + 1), nv, res, line, e + 2).parse();
  if (!f.is_polynomial()) throw ParseError("SyntaxError", "equation must be polynomial", line, 1);
  DAEquation da;
  MultiPoly p = (Rational(1) / f.den().constant_term()) * f.num();
  std::size_t n = 0;
  for (std::size_t i = 0; i < nv; ++i)
    if (p.uses(i)) n = i;
  std::vector<int> map(nv, -1);
  for (std::size_t i = 0; i <= n + 1 && i < nv; ++i) map[i] = static_cast<int>(i);
  da.p = p.remap(std::min(n + 2, nv), map);

  std::map<std::size_t, Rational> vals;
  std::stringstream ss(jets);
  std::string item;
  std::size_t col = semi == std::string::npos ? 1 : semi + 2;
  while (std::getline(ss, item, ',')) {
    if (detail::trim(item).empty()) continue;
    auto q = item.find('=');
    std::string compact;
    for (char c : item.substr(0, q == std::string::npos ? 0 : q))
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    std::size_t primes = 1;
    while (primes < compact.size() && compact[primes] == '\'') ++primes;
    if (q == std::string::npos || compact.empty() || compact[0] != 'y' || compact.substr(primes) != "(0)")
      throw ParseError("SyntaxError", "jet entries must read y(0) = v, y'(0) = v, ..", line, col);
    vals[primes - 1] = detail::parse_constant(item.substr(q + 1), line, col);
    col += item.size() + 1;
  }
  for (std::size_t i = 0; vals.count(i); ++i) da.jet.push_back(vals[i]);
  if (da.jet.size() != vals.size()) throw ParseError("SyntaxError", "jet has gaps", line, col);
  return da;
}

namespace detail {

inline void check_jet(const MultiPoly& p, const std::vector<Rational>& pt) {
  if (!p.eval(pt).is_zero()) throw Error("InvalidJet", "equation does not vanish at the initial jet");
}

}  // namespace detail

// Variables y, y', .., y^(m-1); the last one solved for. When P is linear in
// y^(n), m = n and y^(n) = -R0/S. Otherwise P is differentiated once
// (P' = S y^(n+1) + R), m = n+1 and y^(n+1) = -R/S with S the separant.
inline RDS da_to_rds(const DAEquation& e) {
  const std::size_t n = e.order();
  if (n == 0) throw Error("InvalidOrder", "equation has no derivative");
  const MultiPoly& p = e.p;
  const std::size_t nv = p.nvars();
  auto pad = [&](const MultiPoly& q, std::size_t to) {
    std::vector<int> map(q.nvars());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i < to ? static_cast<int>(i) : -1;
    return q.remap(to, map);
  };
  auto coeffs = p.coefficients_in(n);
  std::size_t m;
  MultiPoly num(nv), den(nv);
  if (coeffs.rbegin()->first == 1) {
    m = n;
    den = coeffs.count(1) ? coeffs.at(1) : MultiPoly(nv);
    num = -(coeffs.count(0) ? coeffs.at(0) : MultiPoly(nv));
  } else {
    m = n + 1;
    MultiPoly s = p.partial(n), r(nv);
    for (std::size_t i = 0; i < n; ++i) r += p.partial(i) * MultiPoly::var(nv, i + 1);
    den = s;
    num = -r;
  }
  if (e.jet.size() < m) throw Error("InvalidJet", "need " + std::to_string(m) + " initial values");
  std::vector<Rational> pt(nv);
  for (std::size_t i = 0; i < std::min(e.jet.size(), nv); ++i) pt[i] = e.jet[i];
  if (m == n + 1 || e.jet.size() > n) detail::check_jet(pad(p, nv), pt);
  if (den.eval(pt).is_zero()) throw Error("SeparantVanishes", "separant vanishes at the initial jet");

  RDS out;
  for (std::size_t i = 0; i < m; ++i) {
    out.vars.push_back(i == 0 ? "y" : "y" + std::to_string(i));
    out.init.push_back(e.jet[i]);
  }
  for (std::size_t i = 0; i + 1 < m; ++i) out.rhs.push_back(RatFunc::var(m, i + 1));
  out.rhs.push_back(RatFunc(pad(num, m), pad(den, m)));
  return out;
}

}  // namespace hta

#endif  // HTA_COMPILE_DA_HPP
