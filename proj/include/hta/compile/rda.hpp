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

#ifndef HTA_COMPILE_RDA_HPP
#define HTA_COMPILE_RDA_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "hta/compile/rds.hpp"
#include "hta/core/automaton.hpp"

namespace hta {

namespace rda {

// c + sum lin[v] v + sum quad[(u, v)] u v over numbered variables.
struct Quad {
  Rational c;
  std::map<std::size_t, Rational> lin;
  std::map<std::pair<std::size_t, std::size_t>, Rational> quad;

  std::optional<std::size_t> alias() const {
    if (c.is_zero() && quad.empty() && lin.size() == 1 && lin.begin()->second.is_one())
      return lin.begin()->first;
    return std::nullopt;
  }
};

// Coefficient n >= 1 of a shifted variable, in terms of the previous state:
//   A(n) + sum_h B_h(n, n-1) h_(n-1) + sum_(h,g) sum_l C_hg(n, l, n-1-l) h_l g_(n-1-l)
// Keys are variable numbers; coordinates are assigned later.
struct NormalForm {
  std::optional<SizeRational> a;
  std::map<std::size_t, SizeRational> b;
  std::map<std::pair<std::size_t, std::size_t>, SizeRational> c;

  void add(const NormalForm& o, const Rational& s) {
    if (s.is_zero()) return;
    if (o.a) a = a ? *a + s * *o.a : s * *o.a;
    for (const auto& [h, f] : o.b) {
      auto [it, fresh] = b.try_emplace(h, s * f);
      if (!fresh) it->second = it->second + s * f;
    }
    for (const auto& [hg, f] : o.c) {
      auto [it, fresh] = c.try_emplace(hg, s * f);
      if (!fresh) it->second = it->second + s * f;
    }
  }
};

}  // namespace rda

// Variables after the degree-2 reduction: y_1..y_k first, then every
// auxiliary (z_j = Q_j, w_j = P_j, chain variables t) with its definition.
struct ReducedSystem {
  std::size_t k = 0;
  std::vector<std::string> names;
  std::vector<std::optional<rda::Quad>> defs;  // empty for the y's
  std::vector<std::size_t> z, w;               // per equation
  std::vector<std::size_t> chain;              // t variables in creation order
  std::map<Exps, std::size_t> chain_of;        // monomial -> t variable
};

namespace detail {

inline std::size_t new_var(ReducedSystem& r, std::string name, rda::Quad q) {
  r.names.push_back(std::move(name));
  r.defs.emplace_back(std::move(q));
  return r.names.size() - 1;
}

inline std::size_t first_var(const Exps& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) return i;
  throw Error("Internal", "empty monomial");
}

// Variable equal to the monomial e (degree >= 2): t = y_i * t(e / y_i), down
// to a product of two y's.
inline std::size_t chain_var(ReducedSystem& r, const Exps& e) {
  if (auto it = r.chain_of.find(e); it != r.chain_of.end()) return it->second;
  std::size_t i = first_var(e);
  Exps rest = e;
  --rest[i];
  rda::Quad q;
  unsigned deg = 0;
  for (auto v : rest) deg += v;
  if (deg == 1) {
    std::size_t j = first_var(rest);
    q.quad[{std::min(i, j), std::max(i, j)}] = 1;
  } else {
    q.quad[{i, chain_var(r, rest)}] = 1;
  }
  std::size_t t = new_var(r, "t" + std::to_string(r.chain.size() + 1), std::move(q));
  r.chain.push_back(t);
  r.chain_of[e] = t;
  return t;
}

inline rda::Quad reduce_poly(ReducedSystem& r, const MultiPoly& p) {
  rda::Quad q;
  for (const auto& [e, c] : p.terms()) {
    unsigned deg = 0;
    for (auto v : e) deg += v;
    if (deg == 0) {
      q.c += c;
    } else if (deg == 1) {
      q.lin[first_var(e)] += c;
    } else if (deg == 2) {
      std::size_t i = first_var(e);
      Exps rest = e;
      --rest[i];
      q.quad[{i, first_var(rest)}] += c;
    } else {
      std::size_t i = first_var(e);
      Exps rest = e;
      --rest[i];
      q.quad[{i, chain_var(r, rest)}] += c;
    }
  }
  return q;
}

// Re-expands a definition into a polynomial in y_1..y_k.
inline MultiPoly expand(const ReducedSystem& r, const rda::Quad& q) {
  std::function<MultiPoly(std::size_t)> var = [&](std::size_t v) -> MultiPoly {
    if (v < r.k) return MultiPoly::var(r.k, v);
    return expand(r, *r.defs[v]);
  };
  MultiPoly out = MultiPoly::constant(r.k, q.c);
  for (const auto& [v, c] : q.lin) out += c * var(v);
  for (const auto& [uv, c] : q.quad) out += c * (var(uv.first) * var(uv.second));
  return out;
}

}  // namespace detail

// z_j = Q_j, w_j = P_j, monomials of degree > 2 split along t-chains.
// Graded-lex order of monomials fixes the creation order of the t's.
inline ReducedSystem reduce_degree(const RDS& s) {
  ReducedSystem r;
  r.k = s.size();
  r.names = s.vars;
  r.defs.assign(r.k, std::nullopt);
  for (std::size_t j = 0; j < r.k; ++j) {
    rda::Quad qz = detail::reduce_poly(r, s.rhs[j].den());
    r.z.push_back(detail::new_var(r, "z" + std::to_string(j + 1), std::move(qz)));
    rda::Quad qw = detail::reduce_poly(r, s.rhs[j].num());
    r.w.push_back(detail::new_var(r, "w" + std::to_string(j + 1), std::move(qw)));
  }
  // structural check: the chains reproduce every original monomial
  for (std::size_t j = 0; j < r.k; ++j) {
    if (detail::expand(r, *r.defs[r.z[j]]) != s.rhs[j].den() ||
        detail::expand(r, *r.defs[r.w[j]]) != s.rhs[j].num())
      throw Error("Internal", "degree reduction does not reproduce equation " + std::to_string(j + 1));
  }
  for (const auto& [e, t] : r.chain_of) {
    Rational one = 1;
    if (detail::expand(r, *r.defs[t]) != MultiPoly::monomial(e, one))
      throw Error("Internal", "chain variable " + r.names[t] + " does not expand to its monomial");
  }
  return r;
}

// Alphabet {eps, sigma1, sigma2}. Coordinate 0 holds y_(n,1); every other kept
// coordinate holds the coefficient n+1 of one variable (y's, z's, w's, t's,
// in that order), and a trailing constant 1 is kept only when used. Aliases
// (a variable defined as another one) share its coordinate; coordinates that
// vanish identically or never feed coordinate 0 are dropped.
inline Automaton compile_rda(const RDS& s) {
  if (!s.is_rda()) throw Error("NotRDA", "a denominator vanishes at the initial point");
  ReducedSystem r = reduce_degree(s);
  const std::size_t nv = r.names.size(), k = r.k;

  // resolve aliases
  std::vector<std::size_t> rep(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t u = v;
    while (r.defs[u] && r.defs[u]->alias()) u = *r.defs[u]->alias();
    rep[v] = u;
  }

  // values and first coefficients, in creation order
  std::vector<Rational> v0(nv), v1(nv);
  for (std::size_t j = 0; j < k; ++j) v0[j] = s.init[j];
  for (std::size_t j = 0; j < k; ++j) v1[j] = s.rhs[j].eval(s.init);
  for (std::size_t v = k; v < nv; ++v) {
    const auto& q = *r.defs[v];
    v0[v] = q.c;
    for (const auto& [u, c] : q.lin) {
      v0[v] += c * v0[u];
      v1[v] += c * v1[u];
    }
    for (const auto& [uv, c] : q.quad) {
      v0[v] += c * v0[uv.first] * v0[uv.second];
      v1[v] += c * (v0[uv.first] * v1[uv.second] + v1[uv.first] * v0[uv.second]);
    }
  }

  // normal forms, keyed by representative variables
  std::vector<std::optional<rda::NormalForm>> nf(nv);
  std::function<const rda::NormalForm&(std::size_t)> form = [&](std::size_t v) -> const rda::NormalForm& {
    v = rep[v];
    if (nf[v]) return *nf[v];
    rda::NormalForm f;
    if (v < k) {
      // y_(n+1) = (w_n - sum_l z_(l+1) (n-l) y_(n-l)) / (z_0 (n+1))
      const Rational z0 = v0[r.z[v]];
      f.b.emplace(rep[r.w[v]], SizeRational::in_x0(1, UniPoly::constant(Rational(1) / z0), UniPoly::linear(1)));
      MultiPoly num = MultiPoly::constant(3, Rational(-1) / z0) * (MultiPoly::var(3, 2) + MultiPoly::constant(3, 1));
      f.c.emplace(std::make_pair(rep[r.z[v]], v), SizeRational(num, {UniPoly::linear(1), UniPoly::one(), UniPoly::one()}));
    } else {
      const auto& q = *r.defs[v];
      // constants only reach coefficient 0
      for (const auto& [u, c] : q.lin) f.add(form(u), c);
      for (const auto& [uv, c] : q.quad) {
        // (u v)_(n+1) = u_0 v~_n + v_0 u~_n + sum_l u~_l v~_(n-1-l)
        f.add(form(uv.second), c * v0[uv.first]);
        f.add(form(uv.first), c * v0[uv.second]);
        auto key = std::make_pair(rep[uv.first], rep[uv.second]);
        SizeRational cc = SizeRational::constant(2, c);
        auto [it, fresh] = f.c.try_emplace(key, cc);
        if (!fresh) it->second = it->second + cc;
      }
    }
    for (auto it = f.b.begin(); it != f.b.end();) it = it->second.is_zero() ? f.b.erase(it) : std::next(it);
    for (auto it = f.c.begin(); it != f.c.end();) it = it->second.is_zero() ? f.c.erase(it) : std::next(it);
    if (f.a && f.a->is_zero()) f.a.reset();
    nf[v] = std::move(f);
    return *nf[v];
  };
  std::vector<std::size_t> reps;
  for (std::size_t v = 0; v < nv; ++v)
    if (rep[v] == v) {
      form(v);
      reps.push_back(v);
    }

  // variables that vanish beyond coefficient 0 (greatest fixpoint)
  std::set<std::size_t> zero;
  for (auto v : reps)
    if (v1[v].is_zero() && !nf[v]->a) zero.insert(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = zero.begin(); it != zero.end();) {
      const auto& f = *nf[*it];
      bool live = false;
      for (const auto& [h, g] : f.b) live |= !zero.count(h);
      for (const auto& [hg, g] : f.c) live |= !zero.count(hg.first) && !zero.count(hg.second);
      if (live) {
        it = zero.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  constexpr std::size_t kConst = static_cast<std::size_t>(-1);

  // coordinates reachable from y_1
  std::set<std::size_t> used;
  bool const_used = false;
  std::vector<std::size_t> todo{rep[0]};
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    if (zero.count(v) || !used.insert(v).second) continue;
    const auto& f = *nf[v];
    if (f.a) const_used = true;
    for (const auto& [h, g] : f.b) todo.push_back(h);
    for (const auto& [hg, g] : f.c)
      if (!zero.count(hg.first) && !zero.count(hg.second)) {
        todo.push_back(hg.first);
        todo.push_back(hg.second);
      }
  }

  std::map<std::size_t, std::size_t> coord;
  std::size_t d = 1;
  auto order = [&](auto&& pred) {
    for (auto v : reps)
      if (used.count(v) && pred(v) && !coord.count(v)) coord[v] = d++;
  };
  order([&](std::size_t v) { return v < k; });
  order([&](std::size_t v) { return std::find(r.z.begin(), r.z.end(), v) != r.z.end(); });
  order([&](std::size_t v) { return std::find(r.w.begin(), r.w.end(), v) != r.w.end(); });
  order([&](std::size_t) { return true; });
  std::size_t cst = kConst;
  if (const_used) cst = d++;

  RowVector init(d);
  init[0] = s.init[0];
  for (const auto& [v, i] : coord) init[i] = v1[v];
  if (cst != kConst) init[cst] = 1;

  SizeMatrix s1(d, d, 1), s2(d * d, d, 2);
  if (coord.count(rep[0])) s1.set(coord.at(rep[0]), 0, SizeRational::constant(1, 1));
  if (cst != kConst) s1.set(cst, cst, SizeRational::constant(1, 1));
  for (const auto& [v, j] : coord) {
    const auto& f = *nf[v];
    if (f.a) s1.add(cst, j, *f.a);
    for (const auto& [h, g] : f.b)
      if (!zero.count(h)) s1.add(coord.at(h), j, g);
    for (const auto& [hg, g] : f.c)
      if (!zero.count(hg.first) && !zero.count(hg.second))
        s2.add(flatten({coord.at(hg.first), coord.at(hg.second)}, d), j, g);
  }
  std::map<std::string, SizeMatrix> w;
  w.emplace("eps", nullary_matrix(init));
  w.emplace("sigma1", std::move(s1));
  w.emplace("sigma2", std::move(s2));
  return Automaton(d, RankedAlphabet({{"eps", 0}, {"sigma1", 1}, {"sigma2", 2}}), std::move(w));
}

}  // namespace hta

#endif  // HTA_COMPILE_RDA_HPP
