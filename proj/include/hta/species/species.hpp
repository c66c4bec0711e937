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


#ifndef HTA_SPECIES_SPECIES_HPP
#define HTA_SPECIES_SPECIES_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hta/compile/rds.hpp"

namespace hta {

struct Cardinality {
  enum Kind { Any, Exactly, AtLeast } kind = Any;
  unsigned k = 0;
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

struct SpeciesExpr {
  enum Kind { One, X, Ref, Sum, Product, Sequence, Set, Cycle } kind = One;
  std::string name;  // Ref only
  std::vector<SpeciesExpr> args;
  Cardinality card;
  std::size_t line = 1, column = 1;

  std::string str() const {
    auto card_str = [&] {
      if (card.kind == Cardinality::Exactly) return ", card=" + std::to_string(card.k);
      if (card.kind == Cardinality::AtLeast) return ", card>=" + std::to_string(card.k);
      return std::string();
    };
    switch (kind) {
      case One: return "1";
      case X: return "X";
      case Ref: return name;
      case Sum: return args[0].str() + " + " + args[1].str();
      case Product: {
        auto f = [](const SpeciesExpr& e) { return e.kind == Sum ? "(" + e.str() + ")" : e.str(); };
        return f(args[0]) + "*" + f(args[1]);
      }
      case Sequence: return "sequence(" + args[0].str() + card_str() + ")";
      case Set: return "set(" + args[0].str() + card_str() + ")";
      case Cycle: return "cycle(" + args[0].str() + ")";
    }
    return "";
  }

  // Structural equality; source positions are ignored.
  friend bool operator==(const SpeciesExpr& a, const SpeciesExpr& b) {
    return a.kind == b.kind && a.name == b.name && a.args == b.args && a.card == b.card;
  }
};

struct SpeciesSpec {
  std::vector<std::pair<std::string, SpeciesExpr>> defs;

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < defs.size(); ++i)
      if (defs[i].first == name) return i;
    return std::nullopt;
  }

  std::string str() const {
    std::string out;
    for (const auto& [n, e] : defs) out += n + " = " + e.str() + "\n";
    return out;
  }
};

namespace detail {

class SpeciesParser {
 public:
  SpeciesParser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  SpeciesExpr parse() {
    SpeciesExpr e = sum();
    skip();
    if (p_ < s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& m, std::string code = "SyntaxError") const {
    throw ParseError(std::move(code), m, line_, p_ + 1);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(p_, tok.size()) == tok) {
      p_ += tok.size();
      return true;
    }
    return false;
  }
  SpeciesExpr node(SpeciesExpr::Kind k, std::size_t at) const {
    SpeciesExpr e;
    e.kind = k;
    e.line = line_;
    e.column = at + 1;
    return e;
  }

  SpeciesExpr sum() {
    SpeciesExpr l = product();
    while (true) {
      skip();
      std::size_t at = p_;
      if (!eat("+")) return l;
      SpeciesExpr e = node(SpeciesExpr::Sum, at);
      e.args = {std::move(l), product()};
      l = std::move(e);
    }
  }

  SpeciesExpr product() {
    SpeciesExpr l = factor();
    while (true) {
      skip();
      std::size_t at = p_;
      if (!eat("*") && !eat("\xC2\xB7")) return l;  // '*' or U+00B7
      SpeciesExpr e = node(SpeciesExpr::Product, at);
      e.args = {std::move(l), factor()};
      l = std::move(e);
    }
  }

  SpeciesExpr factor() {
    skip();
    std::size_t at = p_;
    if (p_ >= s_.size()) fail("unexpected end of expression");
    if (eat("(")) {
      SpeciesExpr e = sum();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      if (s_[p_] != '1' || (p_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_ + 1]))))
        fail("the only numeric literal is 1");
      ++p_;
      return node(SpeciesExpr::One, at);
    }
    std::string id = ident();
    if (id == "X") return node(SpeciesExpr::X, at);
    SpeciesExpr::Kind k;
    if (id == "set")
      k = SpeciesExpr::Set;
    else if (id == "sequence")
      k = SpeciesExpr::Sequence;
    else if (id == "cycle")
      k = SpeciesExpr::Cycle;
    else {
      SpeciesExpr e = node(SpeciesExpr::Ref, at);
      e.name = id;
      return e;
    }
    SpeciesExpr e = node(k, at);
    if (!eat("(")) fail("expected '(' after '" + id + "'");
    e.args.push_back(sum());
    if (eat(",")) {
      skip();
      std::size_t card_at = p_;
      if (ident() != "card") {
        p_ = card_at;
        fail("expected 'card'");
      }
      if (eat(">="))
        e.card.kind = Cardinality::AtLeast;
      else if (eat("="))
        e.card.kind = Cardinality::Exactly;
      else
        fail("expected '=' or '>=' after 'card'");
      skip();
      std::size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (st == p_) fail("expected a nonnegative integer cardinality");
      e.card.k = static_cast<unsigned>(std::stoul(std::string(s_.substr(st, p_ - st))));
      if (k == SpeciesExpr::Cycle) {
        p_ = card_at;
        fail("cardinality constraints are not supported on cycle", "BadCardinality");
      }
    }
    if (!eat(")")) fail("expected ')'");
    return e;
  }

  std::string ident() {
    skip();
    std::size_t st = p_;
    if (p_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
      while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    if (st == p_) fail("expected a name");
    return std::string(s_.substr(st, p_ - st));
  }

  std::string_view s_;
  std::size_t p_ = 0;
  std::size_t line_;
};

inline void check_refs(const SpeciesSpec& s, const SpeciesExpr& e) {
  if (e.kind == SpeciesExpr::Ref && !s.find(e.name))
    throw ParseError("UnknownName", "species '" + e.name + "' is not defined", e.line, e.column);
  for (const auto& a : e.args) check_refs(s, a);
}

}  // namespace detail

// One `Name = expr` per line; '#' starts a comment.
inline SpeciesSpec parse_species(std::string_view text) {
  SpeciesSpec s;
  for (const auto& [ln, l] : detail::content_lines(text)) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError("SyntaxError", "expected `Name = expression`", ln, 1);
    std::string name = detail::trim(std::string_view(l).substr(0, eq));
    if (!detail::is_ident(name)) throw ParseError("SyntaxError", "bad species name '" + name + "'", ln, 1);
    if (name == "X" || name == "set" || name == "sequence" || name == "cycle" || name == "card")
      throw ParseError("SyntaxError", "'" + name + "' is reserved", ln, 1);
    if (s.find(name)) throw ParseError("SyntaxError", "second definition of '" + name + "'", ln, 1);
    // pad so columns refer to the whole line
    std::string body = std::string(eq + 1, ' ') + l.substr(eq + 1);
    s.defs.emplace_back(name, detail::SpeciesParser(body, ln).parse());
  }
  if (s.defs.empty()) throw ParseError("SyntaxError", "empty specification", 1, 1);
  for (const auto& [n, e] : s.defs) detail::check_refs(s, e);
  return s;
}

}  // namespace hta

#endif  // HTA_SPECIES_SPECIES_HPP
