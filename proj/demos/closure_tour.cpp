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


// Closure operations on generating functions and tree series, applied to the
// Bell and labelled-tree automata.

#include <iostream>

#include "hta/hta.hpp"

namespace {

void show(const std::string& name, const hta::Automaton& a) {
  std::cout << name << "  [d = " << a.dimension() << "]\n   ";
  for (const auto& c : hta::generating_prefix(a, 7)) std::cout << " " << c.str();
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hta;
  std::string data = argc > 1 ? argv[1] : HTA_DATA_DIR;
  Automaton bell = load_automaton(data + "/bell.json");
  Automaton trees = load_automaton(data + "/labelled_trees.json");

  show("B (Bell egf)", bell);
  show("T (labelled trees egf)", trees);
  show("B + T", gf_add(bell, trees));
  show("3/2 B", gf_scale(bell, Rational::parse("3/2")));
  show("x B", gf_shift_forward(bell));
  show("(B - 1)/x", gf_shift_backward(bell));
  show("B'", gf_derive(bell));
  show("integral of T", gf_integrate(trees));
  show("B T", gf_cauchy(bell, trees));
  show("1/B", gf_inverse(bell));
  show("B (1/B)", gf_cauchy(bell, gf_inverse(bell)));

  std::cout << "\ntree series on (sigma2 (sigma1 (sigma0)) (sigma2 (sigma0) (sigma0))):\n";
  Tree t = parse_tree("(sigma2 (sigma1 (sigma0)) (sigma2 (sigma0) (sigma0)))");
  Automaton sq = ts_hadamard(bell, bell), twice = ts_add(bell, bell);
  std::cout << "  bell " << evaluate(bell, t).value.str() << ", squared " << evaluate(sq, t).value.str()
            << ", doubled " << evaluate(twice, t).value.str() << "\n";

  std::map<std::string, SizeMatrix> w;
  w.emplace("one", nullary_matrix({Rational(-1)}));
  Automaton minus_one(1, RankedAlphabet({{"one", 0}}), std::move(w));
  std::cout << "\nzeroness of B (1/B) - 1:\n  "
            << check_zero_genfun(gf_add(gf_cauchy(bell, gf_inverse(bell)), minus_one), 30).str() << "\n";
}
