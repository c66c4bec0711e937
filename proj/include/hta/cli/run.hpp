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


#ifndef HTA_CLI_RUN_HPP
#define HTA_CLI_RUN_HPP

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hta/closure/closure.hpp"
#include "hta/compile/cda.hpp"
#include "hta/compile/da.hpp"
#include "hta/compile/dfinite.hpp"
#include "hta/compile/rda.hpp"
#include "hta/core/io.hpp"
#include "hta/decide/decide.hpp"
#include "hta/species/count.hpp"

namespace hta::cli {

enum Exit { kOk = 0, kParse = 2, kInvariant = 3, kUndecided = 4 };

using Table = std::vector<std::vector<std::string>>;

// First row is the header.
inline void print_table(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "csv") {
    for (const auto& row : t) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
      out << "\n";
    }
    return;
  }
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 1; i < t.size(); ++i) {
      nlohmann::json r;
      for (std::size_t j = 0; j < t[0].size(); ++j) r[t[0][j]] = t[i][j];
      rows.push_back(r);
    }
    out << rows.dump() << "\n";
    return;
  }
  std::vector<std::size_t> w(t.empty() ? 0 : t[0].size(), 0);
  for (const auto& row : t)
    for (std::size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
  for (const auto& row : t) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += "  ";
      std::string pad(w[j] - row[j].size(), ' ');
      // a tree column reads better flush left
      line += (j == 0 && t[0][0] == "tree") ? row[j] + (j + 1 < row.size() ? pad : "") : pad + row[j];
    }
    out << line << "\n";
  }
}

struct Options {
  std::string a, b, tree, file, output, format = "table", target, op;
  std::size_t n = 10, cap = 50;
  std::string scalar = "1";
  bool require_decided = false, tree_series = false;
};

inline void emit_automaton(std::ostream& out, const Options& o, const Automaton& a) {
  std::string text = automaton_to_string(a);
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw Error("IOError", "cannot write '" + o.output + "'", ErrorKind::Parse);
  f << text;
}

inline int emit_verdict(std::ostream& out, const Options& o, const Verdict& v) {
  if (o.format == "table")
    out << v.to_json().dump() << "\n";
  else if (o.format == "json")
    out << v.to_json().dump(2) << "\n";
  else
    print_table(out, {{"verdict", "n", "detail"},
                      {v.to_json()["verdict"].get<std::string>(), std::to_string(v.n), v.str()}},
                "csv");
  return o.require_decided && !v.decided() ? kUndecided : kOk;
}

inline Automaton apply_op(const Options& o) {
  static const std::map<std::string, std::function<Automaton(const Automaton&)>> unary = {
      {"gf-shift-forward", gf_shift_forward}, {"gf-shift-backward", gf_shift_backward},
      {"gf-derive", gf_derive},               {"gf-integrate", gf_integrate},
      {"gf-inverse", gf_inverse},             {"arity-distinct", make_arity_distinct},
  };
  static const std::map<std::string, std::function<Automaton(const Automaton&, const Automaton&)>> binary = {
      {"ts-add", ts_add},   {"ts-hadamard", ts_hadamard},       {"gf-add", gf_add},
      {"gf-cauchy", gf_cauchy}, {"gf-mul-shifted", gf_mul_shifted},
  };
  Automaton a = load_automaton(o.a);
  if (auto it = unary.find(o.op); it != unary.end()) return it->second(a);
  if (auto it = binary.find(o.op); it != binary.end()) {
    if (o.b.empty()) throw Error("UsageError", "'" + o.op + "' needs -b", ErrorKind::Parse);
    return it->second(a, load_automaton(o.b));
  }
  if (o.op == "ts-scale" || o.op == "gf-scale") {
    Rational c = Rational::parse(o.scalar);
    return o.op == "ts-scale" ? ts_scale(a, c) : gf_scale(a, c);
  }
  std::string known;
  for (const auto& [k, f] : unary) known += " " + k;
  for (const auto& [k, f] : binary) known += " " + k;
  throw Error("UsageError", "unknown operation '" + o.op + "'; known:" + known + " ts-scale gf-scale",
              ErrorKind::Parse);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holonomic tree automata: evaluation, series, closure, compilers and decisions", "hta"};
  app.require_subcommand(1);
  Options o;
  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  };
  auto need_a = [&](CLI::App* c) { c->add_option("-a", o.a, "automaton JSON")->required(); };
  auto out_opt = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "write the automaton here"); };

  auto* eval = app.add_subcommand("eval", "value and state vector of a tree");
  need_a(eval);
  eval->add_option("-t", o.tree, "tree as an s-expression")->required();
  fmt(eval);

  auto* series = app.add_subcommand("series", "coefficients of the generating function");
  need_a(series);
  series->add_option("-n", o.n, "last index (default 10)");
  fmt(series);

  auto* bound = app.add_subcommand("bound", "zeroness bound");
  need_a(bound);
  fmt(bound);

  auto* zero = app.add_subcommand("zero", "zeroness of the generating function or tree series");
  need_a(zero);
  zero->add_option("--cap", o.cap, "coefficients to check (default 50)");
  zero->add_flag("--tree-series", o.tree_series, "decide the tree series instead");
  zero->add_flag("--require-decided", o.require_decided, "exit 4 unless the verdict is decided");
  fmt(zero);

  auto* equiv = app.add_subcommand("equiv", "equivalence of two automata");
  need_a(equiv);
  equiv->add_option("-b", o.b, "second automaton JSON")->required();
  equiv->add_option("--cap", o.cap, "coefficients to check (default 50)");
  equiv->add_flag("--tree-series", o.tree_series, "compare tree series instead");
  equiv->add_flag("--require-decided", o.require_decided, "exit 4 unless the verdict is decided");
  fmt(equiv);

  auto* op = app.add_subcommand("op", "closure operation");
  op->add_option("operation", o.op, "ts-add, ts-scale, ts-hadamard, gf-add, gf-scale, gf-shift-forward, "
                                    "gf-mul-shifted, gf-shift-backward, gf-derive, gf-integrate, gf-cauchy, "
                                    "gf-inverse, arity-distinct")
      ->required();
  need_a(op);
  op->add_option("-b", o.b, "second automaton JSON");
  op->add_option("-c", o.scalar, "scalar for ts-scale / gf-scale");
  out_opt(op);

  auto* compile = app.add_subcommand("compile", "compile a recurrence or differential system");
  compile->require_subcommand(1);
  std::map<std::string, CLI::App*> comp;
  for (const char* k : {"dfinite", "cda", "rda", "da"}) {
    comp[k] = compile->add_subcommand(k, std::string("compile a ") + k + " source");
    comp[k]->add_option("-f", o.file, "source file")->required();
    out_opt(comp[k]);
  }

  auto* species = app.add_subcommand("species", "combinatorial species");
  species->require_subcommand(1);
  auto* sp_count = species->add_subcommand("count", "numbers of labelled structures");
  auto* sp_compile = species->add_subcommand("compile", "automaton for a species");
  auto* sp_system = species->add_subcommand("system", "differential and rational systems of a species");
  for (auto* c : {sp_count, sp_compile, sp_system}) {
    c->add_option("-f", o.file, "species file")->required();
    c->add_option("--target", o.target, "species to count (default: first definition)");
  }
  sp_count->add_option("-n", o.n, "last size (default 10)");
  fmt(sp_count);
  out_opt(sp_compile);

  auto* emit = app.add_subcommand("emit-system", "the differential system defining the generating function");
  need_a(emit);

  auto* enum_trees = app.add_subcommand("enum-trees", "trees of one size and their values");
  need_a(enum_trees);
  enum_trees->add_option("-n", o.n, "size (default 10)");
  fmt(enum_trees);

  std::vector<const char*> argv{"hta"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: UsageError: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (eval->parsed()) {
      Automaton a = load_automaton(o.a);
      Tree t = parse_tree(o.tree);
      Evaluation e = evaluate(a, t);
      std::vector<std::string> vec;
      for (const auto& x : e.mu) vec.push_back(x.str());
      if (o.format == "json") {
        out << nlohmann::json{{"tree", t.str()}, {"size", e.size}, {"value", e.value.str()}, {"vector", vec}}.dump()
            << "\n";
      } else {
        Table tab{{"tree", "size", "value", "vector"}};
        std::string v;
        for (const auto& x : vec) v += (v.empty() ? "" : " ") + x;
        tab.push_back({t.str(), std::to_string(e.size), e.value.str(), o.format == "csv" ? v : "[" + v + "]"});
        print_table(out, tab, o.format);
      }
    } else if (series->parsed()) {
      SeriesPrefix p = generating_prefix(load_automaton(o.a), o.n);
      Table tab{{"n", "a_n"}};
      for (std::size_t i = 0; i < p.size(); ++i) tab.push_back({std::to_string(i), p[i].str()});
      print_table(out, tab, o.format);
    } else if (bound->parsed()) {
      ZeroBound b = compute_bound(load_automaton(o.a));
      if (o.format == "json") {
        out << nlohmann::json{{"D", b.D}, {"s", b.s}, {"M", b.M.get_str()}, {"bound", b.to_json()}}.dump() << "\n";
      } else {
        print_table(out, {{"D", "s", "M", "B"}, {std::to_string(b.D), std::to_string(b.s), b.M.get_str(), b.str()}},
                    o.format);
      }
    } else if (zero->parsed()) {
      Automaton a = load_automaton(o.a);
      return emit_verdict(out, o, o.tree_series ? check_zero_tree_series(a, o.cap) : check_zero_genfun(a, o.cap));
    } else if (equiv->parsed()) {
      Automaton a = load_automaton(o.a), b = load_automaton(o.b);
      return emit_verdict(out, o, o.tree_series ? check_equiv_tree_series(a, b, o.cap)
                                                : check_equiv_genfun(a, b, o.cap));
    } else if (op->parsed()) {
      emit_automaton(out, o, apply_op(o));
    } else if (compile->parsed()) {
      std::string text = read_file(o.file);
      Automaton a;
      if (comp["dfinite"]->parsed())
        a = compile_dfinite(parse_dfinite(text));
      else if (comp["cda"]->parsed())
        a = compile_cda(parse_rds(text));
      else if (comp["rda"]->parsed())
        a = compile_rda(parse_rds(text));
      else
        a = compile_rda(da_to_rds(parse_da(text)));
      emit_automaton(out, o, a);
    } else if (species->parsed()) {
      SpeciesSpec s = parse_species(read_file(o.file));
      if (sp_count->parsed()) {
        std::vector<BigInt> c = count_species(s, o.target, o.n);
        if (o.format == "table") {
          for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i].get_str();
          out << "\n";
        } else {
          Table tab{{"n", "count"}};
          for (std::size_t i = 0; i < c.size(); ++i) tab.push_back({std::to_string(i), c[i].get_str()});
          print_table(out, tab, o.format);
        }
      } else if (sp_compile->parsed()) {
        emit_automaton(out, o, compile_species(s, o.target));
      } else {
        out << "# differential system\n" << species_to_diffsys(s).str();
        out << "# rational system\n" << species_rds(s, o.target).str();
      }
    } else if (emit->parsed()) {
      out << emit_differential_system(load_automaton(o.a)).str();
    } else if (enum_trees->parsed()) {
      Automaton a = load_automaton(o.a);
      Table tab{{"tree", "value"}};
      for (const auto& t : enumerate_trees(a.alphabet(), o.n)) tab.push_back({t.str(), evaluate(a, t).value.str()});
      print_table(out, tab, o.format);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kParse : kInvariant;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}

}  // namespace hta::cli

#endif  // HTA_CLI_RUN_HPP
