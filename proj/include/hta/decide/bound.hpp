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


#ifndef HTA_DECIDE_BOUND_HPP
#define HTA_DECIDE_BOUND_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "hta/core/automaton.hpp"
#include "hta/exactmath/common_denominator.hpp"

namespace hta {

// Coefficients 0..B suffice to decide zeroness of the generating function.
// For D >= 2, B = D^(M 2^M) is kept as (base, exponent) and never expanded.
struct ZeroBound {
  std::size_t D = 0;
  unsigned s = 0;
  BigInt M = 0;
  std::optional<BigInt> exponent;  // M * 2^M, unless M itself is too large to expand
  std::optional<BigInt> value;     // B itself, when D <= 1

  // cap >= B, decided exactly
  bool covered_by(const BigInt& cap) const { return value && cap >= *value; }

  std::string str() const {
    if (value) return value->get_str();
    return std::to_string(D) + "^" + (exponent ? exponent->get_str() : "(" + M.get_str() + "*2^" + M.get_str() + ")");
  }

  nlohmann::json to_json() const {
    if (value) return {{"value", value->get_str()}};
    nlohmann::json j = {{"base", D}};
    if (exponent)
      j["exponent"] = exponent->get_str();
    else
      j["exponent_formula"] = "M*2^M";
    return j;
  }

  friend bool operator==(const ZeroBound&, const ZeroBound&) = default;
};

inline ZeroBound compute_bound(const Automaton& a) {
  std::vector<SizeMatrix> ws;
  ZeroBound b;
  unsigned long weighted = 1;  // 1 + sum_k |Sigma_k| k
  for (const auto& sym : a.alphabet().symbols()) {
    ws.push_back(a.weight(sym.name));
    b.D = std::max(b.D, sym.arity);
    weighted += sym.arity;
  }
  CommonDenominator cd = normalize_common_denominator(ws);
  b.s = cd.r;
  b.s = std::max<unsigned>(b.s, static_cast<unsigned>(std::max(0, cd.Q.degree())));
  for (const auto& sd : cd.symbols)
    for (const auto& q : sd.q) b.s = std::max<unsigned>(b.s, static_cast<unsigned>(std::max(0, q.degree())));
  b.M = BigInt(static_cast<unsigned long>(a.dimension())) * (b.s + 2) * weighted + 1;
  if (b.D == 0) {
    b.value = 0;  // no positive arity: f is the constant a_0
  } else if (b.D == 1) {
    // D^(M 2^M) = 1 here, which is too small; the general bound's m + 1 term
    // with m <= M applies instead.
    b.value = b.M + 1;
  }
  if (b.M <= (1u << 20)) {
    BigInt two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, b.M.get_ui());
    b.exponent = b.M * two_m;
  }
  return b;
}

}  // namespace hta

#endif  // HTA_DECIDE_BOUND_HPP
