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


#ifndef HTA_SPECIES_COUNT_HPP
#define HTA_SPECIES_COUNT_HPP

#include <string>
#include <vector>

#include "hta/compile/rda.hpp"
#include "hta/series/coefficients.hpp"
#include "hta/species/diffsys.hpp"

namespace hta {

// Normalized system for one species (default: the first definition), with its
// EGF as the first variable.
inline RDS species_rds(const SpeciesSpec& s, const std::string& target = "") {
  std::string name = target.empty() ? s.defs.at(0).first : target;
  if (!s.find(name)) throw Error("UnknownName", "species '" + name + "' is not defined");
  return restrict_rds(diffsys_to_rds(species_to_diffsys(s)), "y_" + name);
}

inline Automaton compile_species(const SpeciesSpec& s, const std::string& target = "") {
  return compile_rda(species_rds(s, target));
}

// Numbers of structures on {1..n} for n = 0..n_max.
inline std::vector<BigInt> count_species(const SpeciesSpec& s, const std::string& target, std::size_t n_max) {
  std::vector<BigInt> out;
  for (const auto& c : egf_counts(generating_prefix(compile_species(s, target), n_max))) {
    if (!c.is_integer() || c.sign() < 0)
      throw Error("NonIntegerCount", "count " + c.str() + " at n = " + std::to_string(out.size()) +
                                         " is not a nonnegative integer");
    out.push_back(c.num());
  }
  return out;
}

}  // namespace hta

#endif  // HTA_SPECIES_COUNT_HPP
