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


#ifndef HTA_SPECIES_DIFFSYS_HPP
#define HTA_SPECIES_DIFFSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hta/compile/rds.hpp"
#include "hta/species/species.hpp"

namespace hta {

// Equations over the EGF unknowns. Right-hand sides live in the variable
// layout [x, v_1..v_m, v_1'..v_m'].
struct DiffEqSystem {
  struct Equation {
    bool differential = false;  // v' = rhs, otherwise v = rhs
    RatFunc rhs;
    friend bool operator==(const Equation&, const Equation&) = default;
  };

  std::vector<std::string> vars;
  std::vector<Equation> eqs;
  std::vector<std::optional<Rational>> init;

  std::size_t size() const { return vars.size(); }

  std::vector<std::string> names() const {
    std::vector<std::string> n{"x"};
    for (const auto& v : vars) n.push_back(v);
    for (const auto& v : vars) n.push_back(v + "'");
    return n;
  }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }

  std::string str() const {
    std::string out;
    auto n = names();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      out += vars[i] + (eqs[i].differential ? "' = " : " = ") + eqs[i].rhs.str(n);
      if (init[i]) out += " ; " + vars[i] + "(0) = " + init[i]->str();
      out += "\n";
    }
    return out;
  }

  friend bool operator==(const DiffEqSystem&, const DiffEqSystem&) = default;
};

// d/dx of f, where f only involves x and the base unknowns.
inline RatFunc total_derivative(const RatFunc& f, std::size_t m) {
  RatFunc r = f.partial(0);
  for (std::size_t i = 1; i <= m; ++i)
    if (f.uses(i)) r = r + f.partial(i) * RatFunc::var(f.nvars(), m + i);
  return r;
}

// Lines `v = expr` or `v' = expr`, optionally followed by `; v(0) = value`.
inline DiffEqSystem parse_diffsys(std::string_view text) {
  struct Raw {
    std::size_t line, rhs_col;
    std::string rhs;
  };
  DiffEqSystem d;
  std::vector<Raw> raw;
  for (const auto& [ln, l] : detail::content_lines(text)) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError("SyntaxError", "expected `name = expression`", ln, 1);
    std::string lhs = detail::trim(std::string_view(l).substr(0, eq));
    bool diff = !lhs.empty() && lhs.back() == '\'';
    std::string name = diff ? lhs.substr(0, lhs.size() - 1) : lhs;
    if (!detail::is_ident(name)) throw ParseError("SyntaxError", "bad left-hand side '" + lhs + "'", ln, 1);
    if (name == "x") throw ParseError("SyntaxError", "'x' is the independent variable", ln, 1);
    if (d.find(name)) throw ParseError("SyntaxError", "second equation for '" + name + "'", ln, 1);
    auto semi = l.find(';', eq);
    std::optional<Rational> v0;
    if (semi != std::string::npos) {
      std::string clause = l.substr(semi + 1);
      auto ieq = clause.find('=');
      std::string compact;
      for (char c : clause.substr(0, ieq == std::string::npos ? clause.size() : ieq))
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      if (ieq == std::string::npos || compact != name + "(0)")
        throw ParseError("SyntaxError", "initial clause must read `" + name + "(0) = value`", ln, semi + 2);
      v0 = detail::parse_constant(clause.substr(ieq + 1), ln, semi + ieq + 3);
    }
    d.vars.push_back(name);
    d.eqs.push_back({diff, RatFunc()});
    d.init.push_back(v0);
    raw.push_back({ln, eq + 2, l.substr(eq + 1, semi == std::string::npos ? std::string::npos : semi - eq - 1)});
  }
  if (d.vars.empty()) throw ParseError("SyntaxError", "empty system", 1, 1);
  const std::size_t m = d.size(), nv = 1 + 2 * m;
  AtomResolver resolve = [&](const Atom& a) -> RatFunc {
    if (!a.arg) {
      if (a.name == "x" && a.primes == 0) return RatFunc::var(nv, 0);
      if (a.name == "x" && a.primes == 1) return RatFunc::constant(nv, 1);
      if (auto i = d.find(a.name); i && a.primes <= 1) return RatFunc::var(nv, 1 + *i + a.primes * m);
    }
    std::string shown = a.name + std::string(a.primes, '\'');
    if (a.arg) shown += "(" + *a.arg + ")";
    throw ParseError("UnknownName", "unknown name '" + shown + "'", a.line, a.column);
  };
  for (std::size_t i = 0; i < m; ++i)
    d.eqs[i].rhs = ExprParser(raw[i].rhs, nv, resolve, raw[i].line, raw[i].rhs_col).parse();
  return d;
}

namespace detail {

inline Rational species_constant(const SpeciesExpr& e, const SpeciesSpec& s, const std::vector<Rational>& c) {
  auto need_zero = [&](const Rational& a, const char* what) {
    if (!a.is_zero())
      throw Error("UnsupportedConstruct", std::string(what) + " of a species with structures of size 0, at line " +
                                              std::to_string(e.line) + ", column " + std::to_string(e.column));
  };
  auto arg = [&] { return species_constant(e.args[0], s, c); };
  switch (e.kind) {
    case SpeciesExpr::One: return 1;
    case SpeciesExpr::X: return 0;
    case SpeciesExpr::Ref: return c[*s.find(e.name)];
    case SpeciesExpr::Sum: return species_constant(e.args[0], s, c) + species_constant(e.args[1], s, c);
    case SpeciesExpr::Product: return species_constant(e.args[0], s, c) * species_constant(e.args[1], s, c);
    case SpeciesExpr::Sequence: {
      Rational a = arg();
      if (e.card.kind == Cardinality::Exactly) return pow(a, e.card.k);
      need_zero(a, "sequence");
      return e.card.k == 0 ? 1 : 0;
    }
    case SpeciesExpr::Set: {
      Rational a = arg();
      need_zero(a, "set");
      return e.card.k == 0 ? 1 : 0;
    }
    case SpeciesExpr::Cycle:
      need_zero(arg(), "cycle");
      return 0;
  }
  return 0;
}

// Number of size-0 structures per definition: least fixpoint by iteration.
inline std::vector<Rational> species_constants(const SpeciesSpec& s) {
  std::vector<Rational> c(s.defs.size());
  for (std::size_t round = 0; round <= 2 * s.defs.size() + 1; ++round) {
    std::vector<Rational> next;
    for (const auto& [n, e] : s.defs) next.push_back(species_constant(e, s, c));
    if (next == c) return c;
    c = std::move(next);
  }
  throw Error("UnsupportedConstruct", "the specification has infinitely many structures of size 0");
}

inline std::size_t aux_bound(const SpeciesExpr& e) {
  std::size_t n = 0;
  if (e.kind == SpeciesExpr::Set) n = e.card.kind == Cardinality::AtLeast ? e.card.k + 1 : 1;
  if (e.kind == SpeciesExpr::Cycle) n = 1;
  for (const auto& a : e.args) n += aux_bound(a);
  return n;
}

class SpeciesTranslator {
 public:
  SpeciesTranslator(const SpeciesSpec& s) : s_(s), consts_(species_constants(s)) {
    cap_ = s.defs.size();
    for (const auto& [n, e] : s.defs) cap_ += aux_bound(e);
    nv_ = 1 + 2 * cap_;
    for (std::size_t i = 0; i < s.defs.size(); ++i) add("y_" + s.defs[i].first, consts_[i]);
  }

  DiffEqSystem run() {
    for (std::size_t i = 0; i < s_.defs.size(); ++i) {
      RatFunc t = translate(s_.defs[i].second, i);
      if (!eqs_[i]) eqs_[i] = DiffEqSystem::Equation{false, t};
    }
    const std::size_t m = names_.size();
    std::vector<int> map(nv_, -1);
    for (std::size_t i = 0; i <= m; ++i) map[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < m; ++i) map[1 + cap_ + i] = static_cast<int>(1 + m + i);
    DiffEqSystem d;
    d.vars = names_;
    for (std::size_t i = 0; i < m; ++i) {
      d.eqs.push_back({eqs_[i]->differential, eqs_[i]->rhs.remap(1 + 2 * m, map)});
      d.init.push_back(init_[i]);
    }
    return d;
  }

 private:
  std::size_t add(std::string name, Rational v0) {
    names_.push_back(std::move(name));
    init_.push_back(v0);
    eqs_.emplace_back();
    return names_.size() - 1;
  }
  std::size_t fresh(Rational v0) { return add("z" + std::to_string(++aux_), v0); }
  RatFunc var(std::size_t i) const { return RatFunc::var(nv_, 1 + i); }
  RatFunc dvar(std::size_t i) const { return RatFunc::var(nv_, 1 + cap_ + i); }
  RatFunc one() const { return RatFunc::constant(nv_, 1); }
  RatFunc deriv(const RatFunc& f) const {
    RatFunc r = f.partial(0);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (f.uses(1 + i)) r = r + f.partial(1 + i) * dvar(i);
    return r;
  }
  void define(std::size_t v, RatFunc rhs) { eqs_[v] = DiffEqSystem::Equation{true, std::move(rhs)}; }

  // `into` names the variable of the definition being translated; a set or
  // cycle at the top is then defined directly on it.
  RatFunc translate(const SpeciesExpr& e, std::optional<std::size_t> into = std::nullopt) {
    switch (e.kind) {
      case SpeciesExpr::One: return one();
      case SpeciesExpr::X: return RatFunc::var(nv_, 0);
      case SpeciesExpr::Ref: return var(*s_.find(e.name));
      case SpeciesExpr::Sum: return translate(e.args[0]) + translate(e.args[1]);
      case SpeciesExpr::Product: return translate(e.args[0]) * translate(e.args[1]);
      case SpeciesExpr::Sequence: {
        RatFunc a = translate(e.args[0]);
        if (e.card.kind == Cardinality::Exactly) return a.pow(e.card.k);
        return a.pow(e.card.k) / (one() - a);
      }
      case SpeciesExpr::Set: {
        RatFunc a = translate(e.args[0]);
        if (e.card.kind == Cardinality::Exactly)
          return a.pow(e.card.k) * RatFunc::constant(nv_, Rational(1) / Rational(factorial(e.card.k)));
        // z_0 = exp(a), z_j = z_0 - (1 + a + .. + a^(j-1)/(j-1)!), z_j' = z_(j-1) a'
        RatFunc da = deriv(a);
        const unsigned k = e.card.k;
        std::size_t prev = 0;
        for (unsigned j = 0; j <= k; ++j) {
          Rational v0 = j == 0 ? 1 : 0;
          std::size_t z = (j == k && into) ? *into : fresh(v0);
          define(z, (j == 0 ? var(z) : var(prev)) * da);
          prev = z;
        }
        return var(prev);
      }
      case SpeciesExpr::Cycle: {
        RatFunc a = translate(e.args[0]);
        std::size_t z = into ? *into : fresh(0);
        define(z, deriv(a) / (one() - a));
        return var(z);
      }
    }
    return one();
  }

  const SpeciesSpec& s_;
  std::vector<Rational> consts_;
  std::size_t cap_ = 0, nv_ = 0, aux_ = 0;
  std::vector<std::string> names_;
  std::vector<Rational> init_;
  std::vector<std::optional<DiffEqSystem::Equation>> eqs_;
};

// Fraction-free elimination on [A | b]; returns the solution of A v = b.
inline std::vector<RatFunc> bareiss_solve(std::vector<std::vector<RatFunc>> a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  const std::size_t nv = a[0][0].nvars();
  RatFunc prev = RatFunc::constant(nv, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) throw Error("NonlinearInDerivatives", "the derivatives are not determined by the system");
    std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        RatFunc t = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) t = t - a[i][k] * a[k][j];
        a[i][j] = t / prev;
      }
      a[i][k] = RatFunc::constant(nv, 0);
    }
    prev = a[k][k];
  }
  std::vector<RatFunc> x(n, RatFunc::constant(nv, 0));
  for (std::size_t i = n; i-- > 0;) {
    RatFunc r = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!a[i][j].is_zero()) r = r - a[i][j] * x[j];
    x[i] = r / a[i][i];
  }
  return x;
}

}  // namespace detail

// Initial values come from the species semantics (size-0 counts).
inline DiffEqSystem species_to_diffsys(const SpeciesSpec& s) { return detail::SpeciesTranslator(s).run(); }

// Differentiates the algebraic equations and solves the resulting system,
// linear in the derivatives, for v'. `init` overrides values carried by `d`.
inline RDS diffsys_to_rds(const DiffEqSystem& d, const std::map<std::string, Rational>& init = {}) {
  const std::size_t m = d.size(), nv = 1 + 2 * m;
  for (const auto& [name, v] : init)
    if (!d.find(name)) throw Error("UnknownName", "no variable '" + name + "' in the system");
  std::vector<Rational> v0(m), pt(nv);
  for (std::size_t i = 0; i < m; ++i) {
    if (auto it = init.find(d.vars[i]); it != init.end())
      v0[i] = it->second;
    else if (d.init[i])
      v0[i] = *d.init[i];
    else
      throw Error("MissingInitialValue", "no initial value for '" + d.vars[i] + "'");
    pt[1 + i] = v0[i];
  }
  auto uses_derivative = [&](const MultiPoly& p) {
    for (std::size_t j = 0; j < m; ++j)
      if (p.uses(1 + m + j)) return true;
    return false;
  };

  std::vector<std::vector<RatFunc>> a(m, std::vector<RatFunc>(m + 1, RatFunc::constant(nv, 0)));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = d.eqs[i];
    RatFunc g = e.rhs;
    if (!e.differential) {
      if (uses_derivative(g.num()) || uses_derivative(g.den()))
        throw Error("NonlinearInDerivatives", "algebraic equation for '" + d.vars[i] + "' involves derivatives");
      if (g.den().eval(pt).is_zero())
        throw Error("SingularInitialValues", "equation for '" + d.vars[i] + "' is undefined at the initial point");
      if (g.eval(pt) != v0[i])
        throw Error("InconsistentInitialValues", "'" + d.vars[i] + "(0)' does not satisfy its equation");
      g = total_derivative(g, m);
    }
    if (uses_derivative(g.den()))
      throw Error("NonlinearInDerivatives", "a derivative occurs in a denominator in the equation for '" +
                                                d.vars[i] + "'");
    // split the numerator into derivative-free part and linear part
    std::vector<MultiPoly> parts(m + 1, MultiPoly(nv));
    for (const auto& [ex, c] : g.num().terms()) {
      std::size_t which = m, deg = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (ex[1 + m + j] > 0) {
          deg += ex[1 + m + j];
          which = j;
        }
      if (deg > 1)
        throw Error("NonlinearInDerivatives", "equation for '" + d.vars[i] + "' is nonlinear in the derivatives");
      Exps rest = ex;
      if (which < m) rest[1 + m + which] = 0;
      parts[which] += MultiPoly::monomial(rest, c);
    }
    a[i][i] = RatFunc::constant(nv, 1);
    for (std::size_t j = 0; j < m; ++j)
      if (!parts[j].is_zero()) a[i][j] = a[i][j] - RatFunc(parts[j], g.den());
    a[i][m] = RatFunc(parts[m], g.den());
  }
  std::vector<RatFunc> sol = detail::bareiss_solve(std::move(a));

  bool x_used = false;
  for (const auto& f : sol) x_used |= f.uses(0);
  const std::size_t k = m + (x_used ? 1 : 0);
  std::vector<int> map(nv, -1);
  map[0] = x_used ? static_cast<int>(m) : -1;
  for (std::size_t i = 0; i < m; ++i) map[1 + i] = static_cast<int>(i);
  RDS r;
  r.vars = d.vars;
  r.init = v0;
  for (const auto& f : sol) r.rhs.push_back(f.remap(k, map));
  if (x_used) {
    r.vars.push_back("x");
    r.rhs.push_back(RatFunc::constant(k, 1));
    r.init.push_back(0);
  }
  if (!r.is_rda()) throw Error("SingularInitialValues", "the normalized system is undefined at the initial point");
  return r;
}

// Keeps `target` and the variables it depends on, with `target` first.
inline RDS restrict_rds(const RDS& s, const std::string& target) {
  const std::size_t k = s.size();
  std::size_t t = k;
  for (std::size_t i = 0; i < k; ++i)
    if (s.vars[i] == target) t = i;
  if (t == k) throw Error("UnknownName", "no variable '" + target + "' in the system");
  std::vector<bool> keep(k, false);
  std::vector<std::size_t> todo{t};
  keep[t] = true;
  while (!todo.empty()) {
    std::size_t i = todo.back();
    todo.pop_back();
    for (std::size_t j = 0; j < k; ++j)
      if (!keep[j] && s.rhs[i].uses(j)) {
        keep[j] = true;
        todo.push_back(j);
      }
  }
  std::vector<std::size_t> order{t};
  for (std::size_t i = 0; i < k; ++i)
    if (keep[i] && i != t) order.push_back(i);
  std::vector<int> map(k, -1);
  for (std::size_t n = 0; n < order.size(); ++n) map[order[n]] = static_cast<int>(n);
  RDS r;
  for (auto i : order) {
    r.vars.push_back(s.vars[i]);
    r.rhs.push_back(s.rhs[i].remap(order.size(), map));
    r.init.push_back(s.init[i]);
  }
  return r;
}

}  // namespace hta

#endif  // HTA_SPECIES_DIFFSYS_HPP
