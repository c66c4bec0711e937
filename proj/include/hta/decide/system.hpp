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


#ifndef HTA_DECIDE_SYSTEM_HPP
#define HTA_DECIDE_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "hta/core/enumerate.hpp"
#include "hta/exactmath/common_denominator.hpp"
#include "hta/series/coefficients.hpp"

namespace hta {

// With Q(x) = sum c_i x^i, Q_{g,i}(x) = sum_j b_{g,i,j} x^j and S f = x f':
//   sum_i c_i S^i f - c_0 a_0 = x sum_{g,(i_1..i_k)} (S^i1 p_{g,1} x .. x S^ik p_{g,k}) mu_{g,(i_1..i_k)}
//   f = sum_j b_{g,i,j} S^j p_{g,i}                      for every g of arity k > 0, 1 <= i <= k
// and, for the zeroness reduction, V_i = f_i - (a_0)_i - x h_i.
struct DifferentialSystem {
  struct Block {
    std::string symbol;
    std::size_t arity = 0;
    std::vector<std::vector<Rational>> b;                        // b[i-1] = coefficients of Q_{g,i}
    std::map<Exps, std::map<SizeMatrix::Key, Rational>> mu;      // (i_1..i_k) -> sparse d^k x d matrix
  };

  std::size_t d = 0;
  std::vector<Rational> c;
  RowVector a0;
  std::vector<Block> blocks;

  std::size_t order() const { return c.size() - 1; }

  std::size_t scalar_equations() const {
    std::size_t n = 1;
    for (const auto& bl : blocks) n += bl.arity;
    return d * n;
  }

  std::string str() const {
    auto poly = [](const std::vector<Rational>& co, const std::string& var) {
      std::string out;
      for (std::size_t i = 0; i < co.size(); ++i) {
        if (co[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + co[i].str() + ")*S^" + std::to_string(i) + " " + var;
      }
      return out.empty() ? std::string("0") : out;
    };
    auto p = [](const Block& bl, std::size_t i) { return "p[" + bl.symbol + "," + std::to_string(i) + "]"; };
    std::string out = "# d = " + std::to_string(d) + ", order " + std::to_string(order()) + ", " +
                      std::to_string(scalar_equations()) + " scalar equations\n";
    out += "a0 = [";
    for (std::size_t j = 0; j < a0.size(); ++j) out += (j ? ", " : "") + a0[j].str();
    out += "]\n";
    std::string rhs;
    for (const auto& bl : blocks)
      for (const auto& [idx, m] : bl.mu) {
        std::string term = "(";
        for (std::size_t j = 0; j < bl.arity; ++j)
          term += (j ? " (x) " : "") + std::string("S^") + std::to_string(idx[j]) + " " + p(bl, j + 1);
        term += ") . M[" + bl.symbol + ";";
        for (std::size_t j = 0; j < bl.arity; ++j) term += (j ? "," : "") + std::to_string(idx[j]);
        rhs += (rhs.empty() ? "" : " + ") + term + "]";
      }
    out += poly(c, "f") + " - (" + (c.empty() ? std::string("0") : c[0].str()) + ")*a0 = x*(" +
           (rhs.empty() ? "0" : rhs) + ")\n";
    for (const auto& bl : blocks)
      for (std::size_t i = 1; i <= bl.arity; ++i) out += "f = " + poly(bl.b[i - 1], p(bl, i)) + "\n";
    for (const auto& bl : blocks)
      for (const auto& [idx, m] : bl.mu) {
        out += "M[" + bl.symbol + ";";
        for (std::size_t j = 0; j < bl.arity; ++j) out += (j ? "," : "") + std::to_string(idx[j]);
        out += "] = {";
        bool first = true;
        for (const auto& [key, v] : m) {
          out += (first ? "" : ", ") + std::string("(") + std::to_string(key.first) + "," +
                 std::to_string(key.second) + "): " + v.str();
          first = false;
        }
        out += "}\n";
      }
    out += "V_i = f_i - (a0)_i - x*h_i, i = 1.." + std::to_string(d) + "\n";
    return out;
  }

  // Coefficient-by-coefficient solution from f(0) = a0bar: the second family
  // gives p_{g,i,n} = a_n / Q_{g,i}(n); the first gives Q(n) a_n from
  // coefficients below n.
  VectorSeriesPrefix forward_solve(const RowVector& a0bar, std::size_t n_max) const {
    auto ev = [](const std::vector<Rational>& co, const Rational& x) {
      Rational r = 0;
      for (std::size_t i = co.size(); i-- > 0;) r = r * x + co[i];
      return r;
    };
    VectorSeriesPrefix a{a0bar};
    // p[block][i][n]
    std::vector<std::vector<std::vector<RowVector>>> p(blocks.size());
    auto push_p = [&](std::size_t n) {
      for (std::size_t g = 0; g < blocks.size(); ++g) {
        p[g].resize(blocks[g].arity);
        for (std::size_t i = 0; i < blocks[g].arity; ++i) {
          Rational q = ev(blocks[g].b[i], Rational(n));
          if (q.is_zero()) throw Error("Internal", "Q_{g,i} vanishes at a size");
          RowVector v = a[n];
          for (auto& x : v) x /= q;
          p[g][i].push_back(std::move(v));
        }
      }
    };
    push_p(0);
    for (std::size_t n = 1; n <= n_max; ++n) {
      RowVector rhs(d);
      for (std::size_t g = 0; g < blocks.size(); ++g) {
        const Block& bl = blocks[g];
        for (const auto& [idx, m] : bl.mu)
          for_each_composition(n - 1, bl.arity, [&](const std::vector<std::size_t>& parts) {
            for (const auto& [key, v] : m) {
              auto rows = unflatten(key.first, bl.arity, d);
              Rational t = v;
              for (std::size_t j = 0; j < bl.arity && !t.is_zero(); ++j)
                t *= pow(Rational(parts[j]), idx[j]) * p[g][j][parts[j]][rows[j]];
              rhs[key.second] += t;
            }
          });
      }
      Rational q = ev(c, Rational(n));
      if (q.is_zero()) throw Error("Internal", "Q vanishes at a positive size");
      for (auto& x : rhs) x /= q;
      a.push_back(std::move(rhs));
      push_p(n);
    }
    return a;
  }
};

inline DifferentialSystem emit_differential_system(const Automaton& a) {
  std::vector<SizeMatrix> ws;
  std::vector<const Symbol*> syms;
  for (const auto& s : a.alphabet().symbols())
    if (s.arity > 0) {
      ws.push_back(a.weight(s.name));
      syms.push_back(&s);
    }
  CommonDenominator cd = normalize_common_denominator(ws);
  DifferentialSystem sys;
  sys.d = a.dimension();
  sys.c = cd.Q.coeffs();
  if (sys.c.empty()) sys.c = {Rational(0)};
  sys.a0 = RowVector(sys.d);
  for (const auto& s : a.alphabet().symbols())
    if (s.arity == 0) {
      RowVector v = a.nullary_weight(s.name);
      for (std::size_t j = 0; j < sys.d; ++j) sys.a0[j] += v[j];
    }
  for (std::size_t g = 0; g < syms.size(); ++g) {
    DifferentialSystem::Block bl;
    bl.symbol = syms[g]->name;
    bl.arity = syms[g]->arity;
    for (const auto& q : cd.symbols[g].q) bl.b.push_back(q.coeffs());
    bl.mu = cd.symbols[g].parts;
    sys.blocks.push_back(std::move(bl));
  }
  return sys;
}

}  // namespace hta

#endif  // HTA_DECIDE_SYSTEM_HPP
