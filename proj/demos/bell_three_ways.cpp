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


// Bell numbers three ways: a hand-written automaton, a compiled rational
// system, and the species of set partitions.

#include <iomanip>
#include <iostream>

#include "hta/hta.hpp"

int main(int argc, char** argv) {
  using namespace hta;
  std::string data = argc > 1 ? argv[1] : HTA_DATA_DIR;
  const std::size_t n = 10;

  Automaton hand = load_automaton(data + "/bell.json");
  Automaton compiled = compile_rda(parse_rds("f' = f*g ; f(0) = 1\ng' = g ; g(0) = 1\n"));
  SpeciesSpec partitions = parse_species("F = set(set(X, card>=1))");

  auto a = egf_counts(generating_prefix(hand, n));
  auto b = egf_counts(generating_prefix(compiled, n));
  auto c = count_species(partitions, "", n);

  std::cout << " n   automaton    compiled     species\n";
  for (std::size_t i = 0; i <= n; ++i)
    std::cout << std::setw(2) << i << std::setw(12) << a[i].str() << std::setw(12) << b[i].str() << std::setw(12)
              << c[i].get_str() << "\n";
  std::cout << "compiled automaton has " << compiled.dimension() << " states\n";
  Verdict v = check_equiv_genfun(hand, compiled, 30);
  std::cout << "equivalence check: " << v.to_json().dump() << "\n";
}
