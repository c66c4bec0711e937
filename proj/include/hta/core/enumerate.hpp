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

#ifndef HTA_CORE_ENUMERATE_HPP
#define HTA_CORE_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "hta/core/alphabet.hpp"
#include "hta/core/tree.hpp"
#include "hta/exactmath/rational.hpp"

namespace hta {

inline constexpr unsigned long kTreeGuard = 1000000;

// Calls f(parts) for every composition of `total` into k nonnegative parts,
// lexicographically.
inline void for_each_composition(std::size_t total, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> parts(k, 0);
  if (k == 0) {
    if (total == 0) f(parts);
    return;
  }
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t left) {
    if (j + 1 == k) {
      parts[j] = left;
      f(parts);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      parts[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, total);
}

// Number of trees of each size 0..n.
inline std::vector<BigInt> count_trees(const RankedAlphabet& a, std::size_t n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = static_cast<unsigned long>(a.count_of_arity(0));
  for (std::size_t m = 1; m <= n; ++m)
    for (const auto& s : a.symbols()) {
      if (s.arity == 0) continue;
      for_each_composition(m - 1, s.arity, [&](const std::vector<std::size_t>& p) {
        BigInt prod = 1;
        for (auto v : p) prod *= c[v];
        c[m] += prod;
      });
    }
  return c;
}

// All trees of size n, each once, in a fixed order (alphabet order, then
// compositions, then children lexicographically).
inline std::vector<Tree> enumerate_trees(const RankedAlphabet& a, std::size_t n) {
  auto counts = count_trees(a, n);
  for (std::size_t m = 0; m <= n; ++m)
    if (counts[m] > kTreeGuard)
      throw Error("TooMany", "more than " + std::to_string(kTreeGuard) + " trees of size " +
                                 std::to_string(m));
  std::vector<std::vector<Tree>> by(n + 1);
  for (std::size_t m = 0; m <= n; ++m)
    for (const auto& s : a.symbols()) {
      if (s.arity == 0) {
        if (m == 0) by[0].emplace_back(s.name);
        continue;
      }
      if (m == 0) continue;
      for_each_composition(m - 1, s.arity, [&](const std::vector<std::size_t>& p) {
        std::vector<Tree> kids(s.arity);
        std::function<void(std::size_t)> pick = [&](std::size_t j) {
          if (j == s.arity) {
            by[m].emplace_back(s.name, kids);
            return;
          }
          for (const auto& t : by[p[j]]) {
            kids[j] = t;
            pick(j + 1);
          }
        };
        pick(0);
      });
    }
  return by[n];
}

}  // namespace hta

#endif  // HTA_CORE_ENUMERATE_HPP
