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

#ifndef HTA_SERIES_COEFFICIENTS_HPP
#define HTA_SERIES_COEFFICIENTS_HPP

#include <vector>

#include "hta/core/automaton.hpp"
#include "hta/core/enumerate.hpp"
#include "hta/series/prefix.hpp"

namespace hta {

using VectorSeriesPrefix = std::vector<RowVector>;

// Resumable a_0, a_1, ... with
//   a_n = sum_g sum_{n1+..+nk = n-1} (a_n1 x .. x a_nk) . mu(g)(n, n1, .., nk).
// Single owner; not for sharing across threads.
class CoefficientStream {
 public:
  explicit CoefficientStream(Automaton a) : a_(std::move(a)) {
    const std::size_t d = a_.dimension();
    for (const auto& s : a_.alphabet().symbols()) {
      if (s.arity == 0) continue;
      for (const auto& [key, f] : a_.weight(s.name).entries())
        entries_.push_back({s.arity, unflatten(key.first, s.arity, d), key.second, &f});
    }
    RowVector a0(d);
    for (const auto& s : a_.alphabet().symbols())
      if (s.arity == 0) {
        RowVector v = a_.nullary_weight(s.name);
        for (std::size_t j = 0; j < d; ++j) a0[j] += v[j];
      }
    cache_.push_back(std::move(a0));
  }

  CoefficientStream(const CoefficientStream&) = delete;
  CoefficientStream& operator=(const CoefficientStream&) = delete;

  const Automaton& automaton() const { return a_; }
  std::size_t computed() const { return cache_.size(); }

  const RowVector& at(std::size_t n) {
    while (cache_.size() <= n) extend();
    return cache_[n];
  }

  VectorSeriesPrefix prefix(std::size_t n_max) {
    at(n_max);
    return VectorSeriesPrefix(cache_.begin(), cache_.begin() + static_cast<long>(n_max) + 1);
  }

 private:
  struct Entry {
    std::size_t arity;
    std::vector<std::size_t> idx;
    std::size_t col;
    const SizeRational* f;
  };

  void extend() {
    const std::size_t n = cache_.size();
    RowVector an(a_.dimension());
    std::vector<Rational> pt;
    for (const auto& e : entries_) {
      for_each_composition(n - 1, e.arity, [&](const std::vector<std::size_t>& p) {
        Rational prod = 1;
        for (std::size_t j = 0; j < e.arity; ++j) {
          const Rational& c = cache_[p[j]][e.idx[j]];
          if (c.is_zero()) return;
          prod *= c;
        }
        pt.assign(1, Rational(n));
        for (auto v : p) pt.emplace_back(v);
        an[e.col] += prod * e.f->eval(pt);
      });
    }
    cache_.push_back(std::move(an));
  }

  Automaton a_;
  std::vector<Entry> entries_;
  VectorSeriesPrefix cache_;
};

inline VectorSeriesPrefix coefficients(const Automaton& a, std::size_t n_max) {
  CoefficientStream s(a);
  return s.prefix(n_max);
}

inline SeriesPrefix generating_prefix(const Automaton& a, std::size_t n_max) {
  SeriesPrefix out;
  for (const auto& v : coefficients(a, n_max)) out.push_back(v[0]);
  return out;
}

// Sum of mu~(t) over every tree of size n, one tree at a time. Trees with a
// subtree whose vector vanishes are skipped (their vector vanishes too);
// `guard` bounds the number of surviving trees per size.
inline RowVector brute_force_coefficient(const Automaton& a, std::size_t n,
                                         std::size_t guard = 4 * kTreeGuard) {
  const std::size_t d = a.dimension();
  auto nonzero = [](const RowVector& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return true;
    return false;
  };
  std::vector<std::vector<RowVector>> by(n + 1);
  for (const auto& s : a.alphabet().symbols())
    if (s.arity == 0) {
      RowVector v = a.nullary_weight(s.name);
      if (nonzero(v)) by[0].push_back(std::move(v));
    }
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> pt;
    for (const auto& s : a.alphabet().symbols()) {
      if (s.arity == 0) continue;
      const auto& w = a.weight(s.name);
      for_each_composition(m - 1, s.arity, [&](const std::vector<std::size_t>& p) {
        pt.assign(1, Rational(m));
        for (auto v : p) pt.emplace_back(v);
        std::vector<const RowVector*> kids(s.arity);
        std::function<void(std::size_t)> pick = [&](std::size_t j) {
          if (j == s.arity) {
            RowVector out(d);
            for (const auto& [key, f] : w.entries()) {
              auto idx = unflatten(key.first, s.arity, d);
              Rational prod = 1;
              for (std::size_t l = 0; l < s.arity && !prod.is_zero(); ++l) prod *= (*kids[l])[idx[l]];
              if (!prod.is_zero()) out[key.second] += prod * f.eval(pt);
            }
            if (nonzero(out)) {
              if (by[m].size() >= guard)
                throw Error("TooMany", "more than " + std::to_string(guard) +
                                           " trees with nonzero weight of size " + std::to_string(m));
              by[m].push_back(std::move(out));
            }
            return;
          }
          for (const auto& v : by[p[j]]) {
            kids[j] = &v;
            pick(j + 1);
          }
        };
        pick(0);
      });
    }
  }
  RowVector sum(d);
  for (const auto& v : by[n])
    for (std::size_t j = 0; j < d; ++j) sum[j] += v[j];
  return sum;
}

}  // namespace hta

#endif  // HTA_SERIES_COEFFICIENTS_HPP
