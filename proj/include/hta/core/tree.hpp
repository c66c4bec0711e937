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

#ifndef HTA_CORE_TREE_HPP
#define HTA_CORE_TREE_HPP

#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hta/core/alphabet.hpp"

namespace hta {

struct Tree {
  std::string symbol;
  std::vector<Tree> children;

  Tree() = default;
  explicit Tree(std::string s, std::vector<Tree> c = {})
      : symbol(std::move(s)), children(std::move(c)) {}

  friend bool operator==(const Tree&, const Tree&) = default;

  // Number of internal nodes; leaves count 0.
  std::size_t size() const {
    if (children.empty()) return 0;
    std::size_t s = 1;
    for (const auto& c : children) s += c.size();
    return s;
  }

  std::string str() const {
    std::string out = "(" + symbol;
    for (const auto& c : children) out += " " + c.str();
    return out + ")";
  }

  // Throws SymbolMismatch / ArityMismatch on a tree not over `a`.
  void check(const RankedAlphabet& a) const {
    auto i = a.find(symbol);
    if (!i) throw Error("SymbolMismatch", "symbol '" + symbol + "' not in alphabet");
    if (a.symbols()[*i].arity != children.size())
      throw Error("ArityMismatch", "symbol '" + symbol + "' has arity " +
                                       std::to_string(a.symbols()[*i].arity) + ", got " +
                                       std::to_string(children.size()) + " children");
    for (const auto& c : children) c.check(a);
  }
};

inline std::size_t tree_size(const Tree& t) { return t.size(); }

// s-expressions: `(f (a) (g (a)))`; a bare name is a leaf.
inline Tree parse_tree(std::string_view s) {
  std::size_t p = 0;
  auto fail = [&](const std::string& m) -> Tree {
    throw ParseError("SyntaxError", m, 1, p + 1);
  };
  auto skip = [&] {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  };
  auto name = [&]() -> std::string {
    skip();
    std::size_t st = p;
    while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p])) && s[p] != '(' &&
           s[p] != ')')
      ++p;
    if (st == p) fail("expected a symbol name");
    return std::string(s.substr(st, p - st));
  };
  std::function<Tree()> node = [&]() -> Tree {
    skip();
    if (p >= s.size()) return fail("unexpected end of tree");
    if (s[p] != '(') return Tree(name());
    ++p;
    Tree t(name());
    while (true) {
      skip();
      if (p >= s.size()) return fail("missing ')'");
      if (s[p] == ')') {
        ++p;
        return t;
      }
      t.children.push_back(node());
    }
  };
  Tree t = node();
  skip();
  if (p != s.size()) fail("trailing characters after tree");
  return t;
}

}  // namespace hta

#endif  // HTA_CORE_TREE_HPP
