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


#ifndef HTA_DECIDE_DECIDE_HPP
#define HTA_DECIDE_DECIDE_HPP

#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hta/closure/closure.hpp"
#include "hta/decide/bound.hpp"
#include "hta/decide/system.hpp"

namespace hta {

struct Verdict {
  enum Kind { ProvenZero, ZeroUpTo, NonzeroAt, DifferAt } kind = ZeroUpTo;
  ZeroBound bound;
  std::size_t n = 0;             // ZeroUpTo: last index checked; NonzeroAt: index; DifferAt: tree size
  Rational witness;              // NonzeroAt: the nonzero coefficient
  std::optional<Tree> tree;      // DifferAt
  std::vector<Rational> values;  // DifferAt: the two values on `tree`

  bool decided() const { return kind != ZeroUpTo; }
  bool zero() const { return kind == ProvenZero || kind == ZeroUpTo; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    switch (kind) {
      case ProvenZero:
        j = {{"verdict", "proven_zero"}, {"bound", bound.to_json()}};
        break;
      case ZeroUpTo:
        j = {{"verdict", "zero_up_to"}, {"n", n}, {"bound", bound.to_json()}};
        break;
      case NonzeroAt:
        j = {{"verdict", "nonzero_at"}, {"n", n}, {"witness", witness.str()}};
        break;
      case DifferAt: {
        std::vector<std::string> vs;
        for (const auto& v : values) vs.push_back(v.str());
        j = {{"verdict", "differ_at"}, {"size", n}, {"tree", tree->str()}, {"values", vs}};
        break;
      }
    }
    return j;
  }

  std::string str() const {
    switch (kind) {
      case ProvenZero: return "proven zero (bound " + bound.str() + ")";
      case ZeroUpTo: return "zero up to " + std::to_string(n) + " (bound " + bound.str() + ")";
      case NonzeroAt: return "nonzero at " + std::to_string(n) + ": " + witness.str();
      case DifferAt: {
        std::string vs;
        for (const auto& v : values) vs += (vs.empty() ? "" : " vs ") + v.str();
        return "differ at " + tree->str() + ": " + vs;
      }
    }
    return "";
  }
};

// Called with the number of coefficients checked so far, every 100
// coefficients; returning false stops the scan with a partial verdict.
using Progress = std::function<bool(std::size_t)>;

inline Verdict check_zero_genfun(const Automaton& a, std::size_t cap, const Progress& progress = {}) {
  Verdict v;
  v.bound = compute_bound(a);
  std::size_t limit = cap;
  if (v.bound.value && *v.bound.value < cap) limit = v.bound.value->get_ui();
  CoefficientStream s(a);
  for (std::size_t n = 0; n <= limit; ++n) {
    const Rational& c = s.at(n)[0];
    if (!c.is_zero()) {
      v.kind = Verdict::NonzeroAt;
      v.n = n;
      v.witness = c;
      return v;
    }
    if (progress && (n + 1) % 100 == 0 && n < limit && !progress(n + 1)) {
      v.kind = Verdict::ZeroUpTo;
      v.n = n;
      return v;
    }
  }
  v.kind = v.bound.covered_by(BigInt(static_cast<unsigned long>(cap))) ? Verdict::ProvenZero : Verdict::ZeroUpTo;
  v.n = cap;
  return v;
}

// Zeroness of the tree series via its square, whose generating function has
// nonnegative contributions. A nonzero coefficient at n is turned into a tree
// of size n; no smaller tree can be nonzero.
inline Verdict check_zero_tree_series(const Automaton& a, std::size_t cap, const Progress& progress = {}) {
  Verdict v = check_zero_genfun(ts_hadamard(a, a), cap, progress);
  if (v.kind != Verdict::NonzeroAt) return v;
  std::vector<Tree> trees;
  try {
    trees = enumerate_trees(a.alphabet(), v.n);
  } catch (const Error& e) {
    if (e.code() != "TooMany") throw;
    throw Error("TooMany", "a nonzero tree of size " + std::to_string(v.n) + " exists but " + e.detail());
  }
  for (auto& t : trees) {
    Rational val = evaluate(a, t).value;
    if (val.is_zero()) continue;
    Verdict out;
    out.kind = Verdict::DifferAt;
    out.bound = v.bound;
    out.n = v.n;
    out.tree = std::move(t);
    out.values = {val, Rational(0)};
    return out;
  }
  throw Error("Internal", "squared series nonzero at " + std::to_string(v.n) + " but no tree is");
}

inline Verdict check_equiv_genfun(const Automaton& a1, const Automaton& a2, std::size_t cap,
                                  const Progress& progress = {}) {
  return check_zero_genfun(gf_add(a1, gf_scale(a2, -1)), cap, progress);
}

inline Verdict check_equiv_tree_series(const Automaton& a1, const Automaton& a2, std::size_t cap,
                                       const Progress& progress = {}) {
  Verdict v = check_zero_tree_series(ts_add(a1, ts_scale(a2, -1)), cap, progress);
  if (v.kind == Verdict::DifferAt) v.values = {evaluate(a1, *v.tree).value, evaluate(a2, *v.tree).value};
  return v;
}

}  // namespace hta

#endif  // HTA_DECIDE_DECIDE_HPP
