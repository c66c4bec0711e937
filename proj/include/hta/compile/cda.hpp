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

#ifndef HTA_COMPILE_CDA_HPP
#define HTA_COMPILE_CDA_HPP

#include <algorithm>

#include "hta/compile/rds.hpp"
#include "hta/core/automaton.hpp"

namespace hta {

// Polynomial system. State after size n: [a_(n,1), .., a_(n,k), [n = 0]]; a
// symbol g_l of arity l carries the degree-l monomials, sigma the constants.
// The last coordinate has no self-loop: a constant term of P_j only feeds
// n a_(n,j) at n = 1.
inline Automaton compile_cda(const RDS& s) {
  if (!s.is_polynomial()) throw Error("NotPolynomial", "every right-hand side must be a polynomial");
  const std::size_t k = s.size(), d = k + 1;
  std::map<std::size_t, SizeMatrix> g;
  SizeMatrix sigma(d, d, 1);
  for (std::size_t j = 0; j < k; ++j) {
    MultiPoly p = (Rational(1) / s.rhs[j].den().constant_term()) * s.rhs[j].num();
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned m = 0; m < e[i]; ++m) idx.push_back(i);
      SizeRational f = SizeRational::in_x0(idx.empty() ? 1 : idx.size(), UniPoly::constant(c), UniPoly::x());
      if (idx.empty()) {
        sigma.add(k, j, f);
        continue;
      }
      auto it = g.try_emplace(idx.size(), ipow(d, idx.size()), d, idx.size()).first;
      it->second.add(flatten(idx, d), j, f);
    }
  }
  std::vector<Symbol> syms{{"eps", 0}, {"sigma", 1}};
  std::map<std::string, SizeMatrix> w;
  RowVector e0(s.init);
  e0.push_back(1);
  w.emplace("eps", nullary_matrix(e0));
  w.emplace("sigma", std::move(sigma));
  for (auto& [l, m] : g) {
    std::string name = "g" + std::to_string(l);
    syms.push_back({name, l});
    w.emplace(name, std::move(m));
  }
  return Automaton(d, RankedAlphabet(std::move(syms)), std::move(w));
}

}  // namespace hta

#endif  // HTA_COMPILE_CDA_HPP
