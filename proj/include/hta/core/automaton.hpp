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

#ifndef HTA_CORE_AUTOMATON_HPP
#define HTA_CORE_AUTOMATON_HPP

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hta/core/alphabet.hpp"
#include "hta/core/tree.hpp"
#include "hta/exactmath/size_matrix.hpp"

namespace hta {

using RowVector = std::vector<Rational>;

inline std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (d != 0 && r > std::numeric_limits<std::size_t>::max() / d)
      throw Error("ShapeMismatch", "Kronecker row space too large");
    r *= d;
  }
  return r;
}

// Row-major pairing: (i1, .., ik) -> i1*d^(k-1) + .. + ik.
inline std::size_t flatten(const std::vector<std::size_t>& idx, std::size_t d) {
  std::size_t r = 0;
  for (auto i : idx) r = r * d + i;
  return r;
}
inline std::vector<std::size_t> unflatten(std::size_t row, std::size_t k, std::size_t d) {
  std::vector<std::size_t> idx(k);
  for (std::size_t j = k; j-- > 0;) {
    idx[j] = row % d;
    row /= d;
  }
  return idx;
}

inline RowVector kron(const RowVector& u, const RowVector& v) {
  RowVector r;
  r.reserve(u.size() * v.size());
  for (const auto& a : u)
    for (const auto& b : v) r.push_back(a * b);
  return r;
}

// Nullary weights are stored as 1 x d matrices of constants.
class Automaton {
 public:
  Automaton() = default;
  Automaton(std::size_t d, RankedAlphabet alphabet, std::map<std::string, SizeMatrix> weights)
      : d_(d), a_(std::move(alphabet)), w_(std::move(weights)) {
    if (d_ == 0) throw Error("ShapeMismatch", "dimension must be positive");
    for (const auto& [name, m] : w_)
      if (!a_.contains(name)) throw Error("SymbolMismatch", "weight for unknown symbol '" + name + "'");
    for (const auto& s : a_.symbols()) {
      auto it = w_.find(s.name);
      std::size_t rows = ipow(d_, s.arity);
      if (it == w_.end()) {
        w_.emplace(s.name, SizeMatrix(rows, d_, s.arity));
        continue;
      }
      const SizeMatrix& m = it->second;
      if (m.rows() != rows || m.cols() != d_ || m.arity() != s.arity)
        throw Error("ShapeMismatch", "weight of '" + s.name + "' must be " + std::to_string(rows) +
                                         " x " + std::to_string(d_) + " over arity " +
                                         std::to_string(s.arity));
      if (s.arity == 0)
        for (const auto& [key, f] : m.entries())
          if (!f.is_constant()) throw Error("ShapeMismatch", "nullary weights must be constants");
    }
  }

  std::size_t dimension() const { return d_; }
  const RankedAlphabet& alphabet() const { return a_; }
  const std::map<std::string, SizeMatrix>& weights() const { return w_; }
  const SizeMatrix& weight(const std::string& name) const {
    auto it = w_.find(name);
    if (it == w_.end()) throw Error("SymbolMismatch", "symbol '" + name + "' not in alphabet");
    return it->second;
  }

  RowVector nullary_weight(const std::string& name) const {
    const SizeMatrix& m = weight(name);
    RowVector v(d_);
    for (const auto& [key, f] : m.entries()) v[key.second] = f.numerator().constant_term();
    return v;
  }

  friend bool operator==(const Automaton& a, const Automaton& b) {
    return a.d_ == b.d_ && a.a_ == b.a_ && a.w_ == b.w_;
  }

 private:
  std::size_t d_ = 0;
  RankedAlphabet a_;
  std::map<std::string, SizeMatrix> w_;
};

// Helper for building nullary weights.
inline SizeMatrix nullary_matrix(const RowVector& v) {
  SizeMatrix m(1, v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, SizeRational::constant(0, v[j]));
  return m;
}

struct Evaluation {
  RowVector mu;
  Rational value;
  std::size_t size = 0;
};

// mu~(s(t1..tk)) = (mu~(t1) x .. x mu~(tk)) . mu(s)(|t|, |t1|, .., |tk|)
inline Evaluation evaluate(const Automaton& a, const Tree& t) {
  t.check(a.alphabet());
  std::function<Evaluation(const Tree&)> go = [&](const Tree& n) -> Evaluation {
    Evaluation out;
    const std::size_t d = a.dimension();
    if (n.children.empty()) {
      out.mu = a.nullary_weight(n.symbol);
      out.value = out.mu[0];
      return out;
    }
    std::vector<Evaluation> kids;
    std::vector<Rational> sizes{Rational(0)};
    out.size = 1;
    for (const auto& c : n.children) {
      kids.push_back(go(c));
      out.size += kids.back().size;
      sizes.push_back(Rational(kids.back().size));
    }
    sizes[0] = Rational(out.size);
    out.mu.assign(d, Rational(0));
    const SizeMatrix& m = a.weight(n.symbol);
    std::size_t k = n.children.size();
    for (const auto& [key, f] : m.entries()) {
      auto idx = unflatten(key.first, k, d);
      Rational prod = 1;
      for (std::size_t j = 0; j < k && !prod.is_zero(); ++j) prod *= kids[j].mu[idx[j]];
      if (prod.is_zero()) continue;
      out.mu[key.second] += prod * f.eval(sizes);
    }
    out.value = out.mu[0];
    return out;
  };
  return go(t);
}

}  // namespace hta

#endif  // HTA_CORE_AUTOMATON_HPP
