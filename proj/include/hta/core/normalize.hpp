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

#ifndef HTA_CORE_NORMALIZE_HPP
#define HTA_CORE_NORMALIZE_HPP

#include <utility>

#include "hta/core/automaton.hpp"

namespace hta {

// num(x)/den(x), defined at every nonnegative integer.
struct UniRational {
  UniPoly num;
  UniPoly den = UniPoly::one();

  static UniRational constant(const Rational& c) { return {UniPoly::constant(c), UniPoly::one()}; }
  Rational eval(const Rational& x) const { return num.eval(x) / den.eval(x); }
};

using FinalVector = std::vector<UniRational>;

inline FinalVector unit_final_vector(std::size_t d, const Rational& scale = 1) {
  FinalVector b(d, UniRational::constant(0));
  b[0] = UniRational::constant(scale);
  return b;
}

// New coordinate 0 carries mu~(t) . beta(|t|); the old coordinates move to
// 1..d unchanged.
inline Automaton absorb_final_vector(const Automaton& a, const FinalVector& beta) {
  const std::size_t d = a.dimension();
  if (beta.size() != d) throw Error("ShapeMismatch", "final vector must have d entries");
  for (const auto& b : beta) {
    if (b.den.is_zero()) throw Error("InvalidBeta", "zero denominator in final vector");
    if (!b.den.is_constant() && has_root_at_least(b.den, 0))
      throw Error("InvalidBeta", "final vector entry undefined at a nonnegative integer");
  }
  const std::size_t d1 = d + 1;
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : a.alphabet().symbols()) {
    const SizeMatrix& m = a.weight(s.name);
    if (s.arity == 0) {
      RowVector v = a.nullary_weight(s.name), out(d1);
      for (std::size_t j = 0; j < d; ++j) {
        out[0] += v[j] * beta[j].eval(0);
        out[j + 1] = v[j];
      }
      w.emplace(s.name, nullary_matrix(out));
      continue;
    }
    SizeMatrix out(ipow(d1, s.arity), d1, s.arity);
    for (const auto& [key, f] : m.entries()) {
      auto idx = unflatten(key.first, s.arity, d);
      for (auto& i : idx) ++i;
      std::size_t row = flatten(idx, d1);
      out.add(row, key.second + 1, f);
      if (!beta[key.second].num.is_zero())
        out.add(row, 0, f.times_x0(beta[key.second].num, beta[key.second].den));
    }
    w.emplace(s.name, std::move(out));
  }
  return Automaton(d1, a.alphabet(), std::move(w));
}

inline std::string arity_symbol_name(std::size_t k) { return "h" + std::to_string(k); }

// One symbol h<k> per arity k, weighted by the sum over that arity.
inline Automaton make_arity_distinct(const Automaton& a) {
  std::vector<Symbol> syms;
  std::map<std::string, SizeMatrix> w;
  for (auto k : a.alphabet().arities()) {
    std::string name = arity_symbol_name(k);
    syms.push_back({name, k});
    SizeMatrix sum(ipow(a.dimension(), k), a.dimension(), k);
    for (const auto& s : a.alphabet().symbols())
      if (s.arity == k)
        for (const auto& [key, f] : a.weight(s.name).entries()) sum.add(key.first, key.second, f);
    w.emplace(name, std::move(sum));
  }
  return Automaton(a.dimension(), RankedAlphabet(std::move(syms)), std::move(w));
}

inline Automaton pad_alphabet(const Automaton& a, const RankedAlphabet& target) {
  std::map<std::string, SizeMatrix> w = a.weights();
  for (const auto& s : target.symbols())
    if (!w.count(s.name)) w.emplace(s.name, SizeMatrix(ipow(a.dimension(), s.arity), a.dimension(), s.arity));
  return Automaton(a.dimension(), target, std::move(w));
}

// Shared alphabet preserving both generating functions (not tree values).
inline std::pair<Automaton, Automaton> unify_alphabets(const Automaton& a1, const Automaton& a2) {
  if (a1.alphabet().same_symbols(a2.alphabet())) {
    if (a1.alphabet() == a2.alphabet()) return {a1, a2};
    return {a1, pad_alphabet(a2, a1.alphabet())};
  }
  Automaton b1 = make_arity_distinct(a1), b2 = make_arity_distinct(a2);
  std::set<std::size_t> ar = b1.alphabet().arities();
  for (auto k : b2.alphabet().arities()) ar.insert(k);
  std::vector<Symbol> syms;
  for (auto k : ar) syms.push_back({arity_symbol_name(k), k});
  RankedAlphabet shared(std::move(syms));
  return {pad_alphabet(b1, shared), pad_alphabet(b2, shared)};
}

}  // namespace hta

#endif  // HTA_CORE_NORMALIZE_HPP
