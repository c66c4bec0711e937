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

#ifndef HTA_CLOSURE_CLOSURE_HPP
#define HTA_CLOSURE_CLOSURE_HPP

#include <map>
#include <string>

#include "hta/core/normalize.hpp"
#include "hta/series/coefficients.hpp"

namespace hta {

namespace detail {

// Copies the entries of m (arity k, dimension d) into a matrix of dimension
// d_new, every row index and the column moved by `off`.
inline void place_block(SizeMatrix& out, const SizeMatrix& m, std::size_t k, std::size_t d,
                        std::size_t d_new, std::size_t off) {
  for (const auto& [key, f] : m.entries()) {
    auto idx = unflatten(key.first, k, d);
    for (auto& i : idx) i += off;
    out.add(k == 0 ? 0 : flatten(idx, d_new), key.second + off, f);
  }
}

inline SizeMatrix zero_weight(std::size_t k, std::size_t d) { return SizeMatrix(ipow(d, k), d, k); }

inline std::string reserved_name(const RankedAlphabet& a, const std::string& base) {
  return a.fresh_name("__" + base);
}

inline RankedAlphabet with_symbol(const RankedAlphabet& a, Symbol s) {
  auto syms = a.symbols();
  syms.push_back(std::move(s));
  return RankedAlphabet(std::move(syms));
}

// Block-diagonal union: a1 in 0..d1-1 of the new blocks, a2 after it, each
// shifted by `lead` fresh leading coordinates. Symbols of a2 whose name is
// taken with another arity get primes.
inline Automaton block_union(const Automaton& a1, const Automaton& a2, std::size_t lead) {
  const std::size_t d1 = a1.dimension(), d2 = a2.dimension(), d = lead + d1 + d2;
  std::vector<Symbol> syms = a1.alphabet().symbols();
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : syms) {
    SizeMatrix m = zero_weight(s.arity, d);
    place_block(m, a1.weight(s.name), s.arity, d1, d, lead);
    w.emplace(s.name, std::move(m));
  }
  for (const auto& s : a2.alphabet().symbols()) {
    std::string name = s.name;
    auto taken = [&](const std::string& n) {
      for (const auto& t : syms)
        if (t.name == n) return t.arity != s.arity;
      return false;
    };
    while (taken(name)) name += "'";
    if (!w.count(name)) {
      syms.push_back({name, s.arity});
      w.emplace(name, zero_weight(s.arity, d));
    }
    place_block(w.at(name), a2.weight(s.name), s.arity, d2, d, lead + d1);
  }
  return Automaton(d, RankedAlphabet(std::move(syms)), std::move(w));
}

inline Rational constant_term(const Automaton& a) {
  CoefficientStream s(a);
  return s.at(0)[0];
}

}  // namespace detail

// Tree-series sum; both automata must share the alphabet.
inline Automaton ts_add(const Automaton& a1, const Automaton& a2) {
  if (!a1.alphabet().same_symbols(a2.alphabet()))
    throw Error("AlphabetMismatch", "tree-series sum needs identical alphabets");
  const std::size_t d1 = a1.dimension(), d2 = a2.dimension();
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : a1.alphabet().symbols()) {
    SizeMatrix m = detail::zero_weight(s.arity, d1 + d2);
    detail::place_block(m, a1.weight(s.name), s.arity, d1, d1 + d2, 0);
    detail::place_block(m, a2.weight(s.name), s.arity, d2, d1 + d2, d1);
    w.emplace(s.name, std::move(m));
  }
  Automaton sum(d1 + d2, a1.alphabet(), std::move(w));
  FinalVector beta(d1 + d2, UniRational::constant(0));
  beta[0] = beta[d1] = UniRational::constant(1);
  return absorb_final_vector(sum, beta);
}

// Change of basis T = diag(c, 1, .., 1): mu'(g) = (T^-1 x .. x T^-1) mu(g) T
// gives mu~'(t) = mu~(t) T, so only coordinate 0 is scaled and the dimension
// is kept. c = 0 zeroes the nullary weights instead.
inline Automaton ts_scale(const Automaton& a, const Rational& c) {
  const std::size_t d = a.dimension();
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : a.alphabet().symbols()) {
    const SizeMatrix& m = a.weight(s.name);
    SizeMatrix out(m.rows(), m.cols(), m.arity());
    if (!c.is_zero() || s.arity > 0)
      for (const auto& [key, f] : m.entries()) {
        Rational k = 1;
        if (!c.is_zero()) {
          if (key.second == 0) k = c;
          for (auto i : unflatten(key.first, s.arity, d))
            if (i == 0) k /= c;
        }
        out.set(key.first, key.second, k * f);
      }
    w.emplace(s.name, std::move(out));
  }
  return Automaton(d, a.alphabet(), std::move(w));
}

// Paired indices: coordinate (i, j) is i * d2 + j.
inline Automaton ts_hadamard(const Automaton& a1, const Automaton& a2) {
  if (!a1.alphabet().same_symbols(a2.alphabet()))
    throw Error("AlphabetMismatch", "tree-series product needs identical alphabets");
  const std::size_t d1 = a1.dimension(), d2 = a2.dimension(), d = d1 * d2;
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : a1.alphabet().symbols()) {
    const std::size_t k = s.arity;
    SizeMatrix m = detail::zero_weight(k, d);
    for (const auto& [k1, f1] : a1.weight(s.name).entries()) {
      auto i1 = unflatten(k1.first, k, d1);
      for (const auto& [k2, f2] : a2.weight(s.name).entries()) {
        auto i2 = unflatten(k2.first, k, d2);
        std::vector<std::size_t> idx(k);
        for (std::size_t l = 0; l < k; ++l) idx[l] = i1[l] * d2 + i2[l];
        m.add(k == 0 ? 0 : flatten(idx, d), k1.second * d2 + k2.second, f1 * f2);
      }
    }
    w.emplace(s.name, std::move(m));
  }
  return Automaton(d, a1.alphabet(), std::move(w));
}

inline Automaton gf_add(const Automaton& a1, const Automaton& a2) {
  auto [u1, u2] = unify_alphabets(a1, a2);
  return ts_add(u1, u2);
}

inline Automaton gf_scale(const Automaton& a, const Rational& c) { return ts_scale(a, c); }

// f -> x f: a fresh unary symbol reads coordinate 0 of the shifted copy.
inline Automaton gf_shift_forward(const Automaton& a) {
  const std::size_t d = a.dimension() + 1;
  std::string u = detail::reserved_name(a.alphabet(), "u");
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : a.alphabet().symbols()) {
    SizeMatrix m = detail::zero_weight(s.arity, d);
    detail::place_block(m, a.weight(s.name), s.arity, a.dimension(), d, 1);
    w.emplace(s.name, std::move(m));
  }
  SizeMatrix mu = detail::zero_weight(1, d);
  mu.set(1, 0, SizeRational::constant(1, 1));
  w.emplace(u, std::move(mu));
  return Automaton(d, detail::with_symbol(a.alphabet(), {u, 1}), std::move(w));
}

// f, g -> x f g.
inline Automaton gf_mul_shifted(const Automaton& a1, const Automaton& a2) {
  Automaton b = detail::block_union(a1, a2, 1);
  const std::size_t d = b.dimension();
  std::string u = detail::reserved_name(b.alphabet(), "u");
  std::map<std::string, SizeMatrix> w = b.weights();
  SizeMatrix mu = detail::zero_weight(2, d);
  mu.set(flatten({1, 1 + a1.dimension()}, d), 0, SizeRational::constant(2, 1));
  w.emplace(u, std::move(mu));
  return Automaton(d, detail::with_symbol(b.alphabet(), {u, 2}), std::move(w));
}

// f -> (f - a0)/x. Coordinates d..2d-1 carry ordinary trees; coordinates
// 0..d-1 carry the image of a tree of size n+1 re-encoded with size n, where
// __h_<k>_<i>(t1, .., t(i-1), s) stands for g_k(t1, .., t(i-1), t_i, g0, .., g0)
// and s encodes t_i.
inline Automaton gf_shift_backward(const Automaton& input) {
  Automaton a = input.alphabet().arity_distinct() ? input : make_arity_distinct(input);
  const std::size_t d = a.dimension(), d2 = 2 * d;
  const auto& syms = a.alphabet().symbols();
  std::string g0;
  for (const auto& s : syms)
    if (s.arity == 0) g0 = s.name;
  const RowVector mu0 = a.nullary_weight(g0);

  std::vector<Symbol> out_syms = syms;
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : syms) {
    SizeMatrix m = detail::zero_weight(s.arity, d2);
    detail::place_block(m, a.weight(s.name), s.arity, d, d2, d);
    w.emplace(s.name, std::move(m));
  }
  auto add_symbol = [&](const std::string& base, std::size_t arity) {
    RankedAlphabet cur(out_syms);
    std::string name = detail::reserved_name(cur, base);
    out_syms.push_back({name, arity});
    return name;
  };

  for (const auto& s : syms) {
    const std::size_t k = s.arity;
    if (k == 0) continue;
    const SizeMatrix& mk = a.weight(s.name);

    // g_k(g0, .., g0) has size 1.
    RowVector leaf(d);
    std::vector<Rational> pt(k + 1, Rational(0));
    pt[0] = 1;
    for (const auto& [key, f] : mk.entries()) {
      auto idx = unflatten(key.first, k, d);
      Rational prod = 1;
      for (auto i : idx) prod *= mu0[i];
      if (!prod.is_zero()) leaf[key.second] += prod * f.eval(pt);
    }
    RowVector lead(d2);
    for (std::size_t j = 0; j < d; ++j) lead[j] = leaf[j];
    w.emplace(add_symbol("h_" + std::to_string(k) + "_0", 0), nullary_matrix(lead));

    for (std::size_t l = 1; l <= k; ++l) {
      // (I (x) mu(g0)^(k-l)) . mu(g_k)(x0+1, x1, .., x(l-1), x_l+1, 0, .., 0)
      SizeMatrix m = detail::zero_weight(l, d2);
      for (const auto& [key, f] : mk.entries()) {
        auto idx = unflatten(key.first, k, d);
        Rational tail = 1;
        for (std::size_t j = l; j < k && !tail.is_zero(); ++j) tail *= mu0[idx[j]];
        if (tail.is_zero()) continue;
        SizeRational g = f.shift_var(0, 1).shift_var(l, 1);
        for (std::size_t j = l + 1; j <= k; ++j) g = g.set_zero(j);
        g = tail * g.with_arity(l);
        std::vector<std::size_t> row(idx.begin(), idx.begin() + static_cast<long>(l));
        for (std::size_t j = 0; j + 1 < l; ++j) row[j] += d;
        m.add(flatten(row, d2), key.second, g);
      }
      w.emplace(add_symbol("h_" + std::to_string(k) + "_" + std::to_string(l), l), std::move(m));
    }
  }
  return Automaton(d2, RankedAlphabet(std::move(out_syms)), std::move(w));
}

inline Automaton gf_derive(const Automaton& a) {
  FinalVector beta(a.dimension(), UniRational::constant(0));
  beta[0] = {UniPoly::x(), UniPoly::one()};
  return gf_shift_backward(absorb_final_vector(a, beta));
}

inline Automaton gf_integrate(const Automaton& a) {
  FinalVector beta(a.dimension(), UniRational::constant(0));
  beta[0] = {UniPoly::one(), UniPoly::linear(1)};
  return gf_shift_forward(absorb_final_vector(a, beta));
}

inline Automaton gf_cauchy(const Automaton& a1, const Automaton& a2) {
  return gf_shift_backward(gf_mul_shifted(a1, a2));
}

// 1/f from b0 = 1/a0, b_n = -(1/a0) sum_{j=1..n} a_j b_(n-j): coordinate 0
// carries b, the rest the shifted series a_1, a_2, ...
inline Automaton gf_inverse(const Automaton& a) {
  const Rational a0 = detail::constant_term(a);
  if (a0.is_zero()) throw Error("ZeroConstantTerm", "series has no multiplicative inverse");
  Automaton s = gf_shift_backward(a);
  if (!s.alphabet().arity_distinct()) s = make_arity_distinct(s);
  const std::size_t d = s.dimension() + 1;
  std::map<std::string, SizeMatrix> w;
  for (const auto& sym : s.alphabet().symbols()) {
    SizeMatrix m = detail::zero_weight(sym.arity, d);
    detail::place_block(m, s.weight(sym.name), sym.arity, s.dimension(), d, 1);
    if (sym.arity == 0) m.set(0, 0, SizeRational::constant(0, Rational(1) / a0));
    w.emplace(sym.name, std::move(m));
  }
  std::string u = detail::reserved_name(s.alphabet(), "u");
  SizeMatrix mu = detail::zero_weight(2, d);
  mu.set(flatten({0, 1}, d), 0, SizeRational::constant(2, Rational(-1) / a0));
  w.emplace(u, std::move(mu));
  return Automaton(d, detail::with_symbol(s.alphabet(), {u, 2}), std::move(w));
}

}  // namespace hta

#endif  // HTA_CLOSURE_CLOSURE_HPP
