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

#ifndef HTA_TESTS_SUPPORT_HPP
#define HTA_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include "hta/core/io.hpp"

namespace hta::testing {

inline Automaton shipped(const std::string& name) {
  return load_automaton(std::string(HTA_DATA_DIR) + "/" + name + ".json");
}

inline std::vector<Rational> ratvec(std::initializer_list<Rational> l) { return {l}; }

inline Rational r(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Small random automaton over the given alphabet; weights mix constants and
// a few legal size denominators.
inline Automaton random_automaton(std::mt19937& rng, std::size_t d, const RankedAlphabet& alpha,
                                  int density = 3) {
  std::uniform_int_distribution<int> num(-3, 3), pick(0, 3);
  std::map<std::string, SizeMatrix> w;
  for (const auto& s : alpha.symbols()) {
    std::size_t rows = ipow(d, s.arity);
    std::uniform_int_distribution<std::size_t> rr(0, rows - 1), cc(0, d - 1);
    SizeMatrix m(rows, d, s.arity);
    for (int t = 0; t < density; ++t) {
      Rational c = Rational(num(rng));
      SizeRational f = SizeRational::constant(s.arity, c);
      if (s.arity > 0) {
        switch (pick(rng)) {
          case 0: f = SizeRational::parse(c.str() + "/(x0)", s.arity); break;
          case 1: f = SizeRational::parse("(" + c.str() + "*x1 + 1)/(x0 + 1)", s.arity); break;
          default: break;
        }
      }
      m.set(s.arity == 0 ? 0 : rr(rng), cc(rng), f);
    }
    w.emplace(s.name, std::move(m));
  }
  return Automaton(d, alpha, std::move(w));
}

}  // namespace hta::testing

#endif  // HTA_TESTS_SUPPORT_HPP
