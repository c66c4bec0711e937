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

#ifndef HTA_EXACTMATH_COMMON_DENOMINATOR_HPP
#define HTA_EXACTMATH_COMMON_DENOMINATOR_HPP

#include <map>
#include <vector>

#include "hta/exactmath/size_matrix.hpp"

namespace hta {

// mu(g) = 1/Q(x0) * sum_i x1^i1..xk^ik / (Q_g1(x1)..Q_gk(xk)) * parts[i]
struct SymbolDecomposition {
  std::size_t arity = 0;
  std::vector<UniPoly> q;  // Q_{g,1} .. Q_{g,k}
  std::map<Exps, std::map<SizeMatrix::Key, Rational>> parts;  // keyed by (i1..ik)
};

struct CommonDenominator {
  UniPoly Q = UniPoly::one();
  std::vector<SymbolDecomposition> symbols;
  unsigned r = 0;
};

// Weight functions are only ever evaluated on tuples with x0 = 1 + x1 + .. +
// xk, so any x0 left in a numerator is replaced by that sum.
inline CommonDenominator normalize_common_denominator(const std::vector<SizeMatrix>& weights) {
  CommonDenominator out;
  for (const auto& m : weights)
    for (const auto& [key, f] : m.entries()) out.Q = UniPoly::lcm(out.Q, f.denominator(0));
  for (const auto& m : weights) {
    SymbolDecomposition sd;
    sd.arity = m.arity();
    std::size_t n = m.arity() + 1;
    sd.q.assign(m.arity(), UniPoly::one());
    for (const auto& [key, f] : m.entries())
      for (std::size_t i = 1; i < n; ++i) sd.q[i - 1] = UniPoly::lcm(sd.q[i - 1], f.denominator(i));
    MultiPoly sum = MultiPoly::constant(n, 1);
    for (std::size_t i = 1; i < n; ++i) sum += MultiPoly::var(n, i);
    for (const auto& [key, f] : m.entries()) {
      MultiPoly N = f.numerator() *
                    MultiPoly::from_uni(n, 0, UniPoly::divmod(out.Q, f.denominator(0)).first);
      for (std::size_t i = 1; i < n; ++i)
        N = N * MultiPoly::from_uni(n, i, UniPoly::divmod(sd.q[i - 1], f.denominator(i)).first);
      if (N.uses(0)) N = N.substitute(0, sum);
      for (const auto& [e, c] : N.terms()) {
        Exps idx(e.begin() + 1, e.end());
        for (auto v : idx) out.r = std::max(out.r, v);
        auto& slot = sd.parts[idx][key];
        slot += c;
      }
    }
    for (auto it = sd.parts.begin(); it != sd.parts.end();) {
      auto& mat = it->second;
      for (auto jt = mat.begin(); jt != mat.end();)
        jt = jt->second.is_zero() ? mat.erase(jt) : std::next(jt);
      it = mat.empty() ? sd.parts.erase(it) : std::next(it);
    }
    out.symbols.push_back(std::move(sd));
  }
  return out;
}

// Reassembles mu(g) from a decomposition (rows/cols taken from the caller).
inline SizeMatrix reassemble(const CommonDenominator& cd, std::size_t g, std::size_t rows,
                             std::size_t cols) {
  const auto& sd = cd.symbols[g];
  std::size_t n = sd.arity + 1;
  std::vector<UniPoly> dens(n);
  dens[0] = cd.Q;
  for (std::size_t i = 1; i < n; ++i) dens[i] = sd.q[i - 1];
  std::map<SizeMatrix::Key, MultiPoly> nums;
  for (const auto& [idx, mat] : sd.parts) {
    Exps e(n, 0);
    for (std::size_t i = 1; i < n; ++i) e[i] = idx[i - 1];
    for (const auto& [key, c] : mat) {
      auto [it, fresh] = nums.try_emplace(key, MultiPoly(n));
      it->second.add_term(e, c);
    }
  }
  SizeMatrix m(rows, cols, sd.arity);
  for (auto& [key, p] : nums) m.set(key.first, key.second, SizeRational(p, dens));
  return m;
}

}  // namespace hta

#endif  // HTA_EXACTMATH_COMMON_DENOMINATOR_HPP
