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

#ifndef HTA_CORE_IO_HPP
#define HTA_CORE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hta/core/automaton.hpp"

namespace hta {

inline nlohmann::json automaton_to_json(const Automaton& a) {
  nlohmann::json j;
  j["dimension"] = a.dimension();
  j["alphabet"] = nlohmann::json::array();
  for (const auto& s : a.alphabet().symbols())
    j["alphabet"].push_back({{"name", s.name}, {"arity", s.arity}});
  nlohmann::json w = nlohmann::json::object();
  for (const auto& s : a.alphabet().symbols()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, f] : a.weight(s.name).entries())
      entries.push_back({{"row", unflatten(key.first, s.arity, a.dimension())},
                         {"col", key.second},
                         {"value", f.str()}});
    w[s.name] = {{"entries", entries}};
  }
  j["weights"] = w;
  return j;
}

inline std::string automaton_to_string(const Automaton& a) { return automaton_to_json(a).dump(2) + "\n"; }

namespace detail {

[[noreturn]] inline void format_error(const std::string& msg) {
  throw ParseError("FormatError", msg, 1, 1);
}

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline Automaton automaton_from_json(const nlohmann::json& j) {
  using detail::format_error;
  if (!j.is_object()) format_error("automaton must be a JSON object");
  for (const char* f : {"dimension", "alphabet", "weights"})
    if (!j.contains(f)) format_error(std::string("missing field '") + f + "'");
  if (!j["dimension"].is_number_unsigned()) format_error("'dimension' must be a positive integer");
  std::size_t d = j["dimension"].get<std::size_t>();
  if (!j["alphabet"].is_array()) format_error("'alphabet' must be an array");
  std::vector<Symbol> syms;
  for (const auto& s : j["alphabet"]) {
    if (!s.is_object() || !s.contains("name") || !s.contains("arity") || !s["name"].is_string() ||
        !s["arity"].is_number_unsigned())
      format_error("alphabet entries need a string 'name' and a nonnegative 'arity'");
    syms.push_back({s["name"].get<std::string>(), s["arity"].get<std::size_t>()});
  }
  RankedAlphabet alpha(std::move(syms));
  if (!j["weights"].is_object()) format_error("'weights' must be an object");
  std::map<std::string, SizeMatrix> w;
  for (const auto& [name, body] : j["weights"].items()) {
    auto idx = alpha.find(name);
    if (!idx) throw Error("SymbolMismatch", "weight for unknown symbol '" + name + "'");
    std::size_t k = alpha.symbols()[*idx].arity;
    SizeMatrix m(ipow(d, k), d, k);
    if (!body.is_object() || !body.contains("entries") || !body["entries"].is_array())
      format_error("weights of '" + name + "' need an 'entries' array");
    for (const auto& e : body["entries"]) {
      if (!e.is_object() || !e.contains("row") || !e.contains("col") || !e.contains("value") ||
          !e["row"].is_array() || !e["col"].is_number_unsigned() || !e["value"].is_string())
        format_error("entry of '" + name + "' needs 'row' array, 'col' and string 'value'");
      std::vector<std::size_t> row;
      for (const auto& r : e["row"]) {
        if (!r.is_number_unsigned()) format_error("row indices must be nonnegative integers");
        row.push_back(r.get<std::size_t>());
      }
      if (row.size() != k)
        throw Error("ShapeMismatch", "entry of '" + name + "' has a row of length " +
                                         std::to_string(row.size()) + ", arity is " +
                                         std::to_string(k));
      for (auto r : row)
        if (r >= d) throw Error("ShapeMismatch", "row index out of range in '" + name + "'");
      std::size_t col = e["col"].get<std::size_t>();
      if (col >= d) throw Error("ShapeMismatch", "column index out of range in '" + name + "'");
      SizeRational v = SizeRational::parse(e["value"].get<std::string>(), k);
      m.add(flatten(row, d), col, v);
    }
    w.emplace(name, std::move(m));
  }
  return Automaton(d, std::move(alpha), std::move(w));
}

inline Automaton automaton_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("FormatError", "invalid JSON", line, col);
  }
  return automaton_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IOError", "cannot read '" + path + "'", ErrorKind::Parse);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Automaton load_automaton(const std::string& path) { return automaton_from_string(read_file(path)); }

}  // namespace hta

#endif  // HTA_CORE_IO_HPP
