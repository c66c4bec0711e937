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

#ifndef HTA_CORE_ALPHABET_HPP
#define HTA_CORE_ALPHABET_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hta/error.hpp"

namespace hta {

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class RankedAlphabet {
 public:
  RankedAlphabet() = default;
  explicit RankedAlphabet(std::vector<Symbol> symbols) : s_(std::move(symbols)) {
    std::set<std::string> seen;
    bool nullary = false;
    for (const auto& s : s_) {
      if (s.name.empty()) throw Error("InvalidAlphabet", "empty symbol name");
      if (!seen.insert(s.name).second)
        throw Error("InvalidAlphabet", "duplicate symbol '" + s.name + "'");
      nullary = nullary || s.arity == 0;
    }
    if (!nullary) throw Error("InvalidAlphabet", "alphabet has no nullary symbol");
  }

  const std::vector<Symbol>& symbols() const { return s_; }
  std::size_t size() const { return s_.size(); }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < s_.size(); ++i)
      if (s_[i].name == name) return i;
    return std::nullopt;
  }
  bool contains(const std::string& name) const { return find(name).has_value(); }
  const Symbol& at(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error("SymbolMismatch", "symbol '" + name + "' not in alphabet");
    return s_[*i];
  }

  std::size_t max_arity() const {
    std::size_t m = 0;
    for (const auto& s : s_) m = std::max(m, s.arity);
    return m;
  }
  std::size_t count_of_arity(std::size_t k) const {
    return static_cast<std::size_t>(
        std::count_if(s_.begin(), s_.end(), [k](const Symbol& s) { return s.arity == k; }));
  }
  std::set<std::size_t> arities() const {
    std::set<std::size_t> a;
    for (const auto& s : s_) a.insert(s.arity);
    return a;
  }
  bool arity_distinct() const { return arities().size() == s_.size(); }

  // base, then base', base'', ... until unused
  std::string fresh_name(std::string base) const {
    while (contains(base)) base += "'";
    return base;
  }

  // Same symbols regardless of listing order.
  bool same_symbols(const RankedAlphabet& o) const {
    if (s_.size() != o.s_.size()) return false;
    for (const auto& s : s_) {
      auto i = o.find(s.name);
      if (!i || o.s_[*i].arity != s.arity) return false;
    }
    return true;
  }

  friend bool operator==(const RankedAlphabet& a, const RankedAlphabet& b) { return a.s_ == b.s_; }

 private:
  std::vector<Symbol> s_;
};

}  // namespace hta

#endif  // HTA_CORE_ALPHABET_HPP
