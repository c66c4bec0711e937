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

#ifndef HTA_EXACTMATH_MULTIPOLY_HPP
#define HTA_EXACTMATH_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hta/exactmath/rational.hpp"
#include "hta/exactmath/unipoly.hpp"

namespace hta {

using Exps = std::vector<unsigned>;

// Graded order, ties broken lexicographically with x0 most significant.
struct GrlexLess {
  bool operator()(const Exps& a, const Exps& b) const {
    unsigned long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

class MultiPoly {
 public:
  using Terms = std::map<Exps, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : n_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_[Exps(nvars, 0)] = c;
    return p;
  }
  static MultiPoly var(std::size_t nvars, std::size_t i, unsigned power = 1) {
    MultiPoly p(nvars);
    Exps e(nvars, 0);
    e[i] = power;
    p.t_[e] = 1;
    return p;
  }
  static MultiPoly monomial(const Exps& e, const Rational& c) {
    MultiPoly p(e.size());
    if (!c.is_zero()) p.t_[e] = c;
    return p;
  }
  // Univariate polynomial placed in variable i.
  static MultiPoly from_uni(std::size_t nvars, std::size_t i, const UniPoly& u) {
    MultiPoly p(nvars);
    for (std::size_t k = 0; k < u.coeffs().size(); ++k)
      if (!u.coeffs()[k].is_zero()) {
        Exps e(nvars, 0);
        e[i] = static_cast<unsigned>(k);
        p.t_[e] = u.coeffs()[k];
      }
    return p;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && total(t_.begin()->first) == 0);
  }
  Rational constant_term() const {
    auto it = t_.find(Exps(n_, 0));
    return it == t_.end() ? Rational(0) : it->second;
  }
  Rational coeff(const Exps& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
  }
  std::pair<Exps, Rational> lead() const { return *t_.rbegin(); }

  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[i]);
    return d;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, static_cast<unsigned>(total(e)));
    return d;
  }
  bool uses(std::size_t i) const { return degree_in(i) > 0; }

  Rational eval(const std::vector<Rational>& pt) const {
    // power tables keep repeated powers cheap
    std::vector<std::vector<Rational>> pw(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned d = degree_in(i);
      pw[i].reserve(d + 1);
      pw[i].push_back(1);
      for (unsigned k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * pt[i]);
    }
    Rational r;
    for (const auto& [e, c] : t_) {
      Rational m = c;
      for (std::size_t i = 0; i < n_; ++i)
        if (e[i]) m *= pw[i][e[i]];
      r += m;
    }
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.n_);
    Exps e(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    if (s.is_zero()) return MultiPoly(a.n_);
    MultiPoly r = a;
    for (auto& [e, c] : r.t_) c *= s;
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(n_, 1), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  // Substitute x_i := value (value over the same variables).
  MultiPoly substitute(std::size_t i, const MultiPoly& value) const {
    auto parts = coefficients_in(i);
    MultiPoly r(n_);
    unsigned last = 0;
    MultiPoly pw = constant(n_, 1);
    for (const auto& [k, c] : parts) {
      while (last < k) {
        pw = pw * value;
        ++last;
      }
      r += c * pw;
    }
    return r;
  }
  MultiPoly shift(std::size_t i, const Rational& c) const {
    return substitute(i, var(n_, i) + constant(n_, c));
  }
  MultiPoly set_value(std::size_t i, const Rational& v) const {
    return substitute(i, constant(n_, v));
  }

  MultiPoly partial(std::size_t i) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : t_)
      if (e[i]) {
        Exps f = e;
        --f[i];
        r.add_term(f, c * Rational(e[i]));
      }
    return r;
  }

  // Coefficients w.r.t. x_i (x_i removed from each), keyed by power.
  std::map<unsigned, MultiPoly> coefficients_in(std::size_t i) const {
    std::map<unsigned, MultiPoly> out;
    for (const auto& [e, c] : t_) {
      Exps f = e;
      f[i] = 0;
      auto [it, fresh] = out.try_emplace(e[i], MultiPoly(n_));
      it->second.add_term(f, c);
    }
    return out;
  }
  MultiPoly lead_coeff_in(std::size_t i) const {
    auto parts = coefficients_in(i);
    return parts.empty() ? MultiPoly(n_) : parts.rbegin()->second;
  }

  // Variable re-indexing; map[old] = new index (or -1 if the variable must be
  // absent). Throws if a dropped variable occurs.
  MultiPoly remap(std::size_t new_n, const std::vector<int>& map) const {
    MultiPoly r(new_n);
    for (const auto& [e, c] : t_) {
      Exps f(new_n, 0);
      for (std::size_t i = 0; i < n_; ++i) {
        if (!e[i]) continue;
        if (map[i] < 0) throw Error("ShapeMismatch", "dropping a variable that occurs");
        f[map[i]] += e[i];
      }
      r.add_term(f, c);
    }
    return r;
  }

  // Univariate view, valid only when no other variable occurs.
  UniPoly to_uni(std::size_t i) const {
    std::vector<Rational> v(degree_in(i) + 1);
    for (const auto& [e, c] : t_) {
      for (std::size_t j = 0; j < n_; ++j)
        if (j != i && e[j]) throw Error("ShapeMismatch", "polynomial is not univariate");
      v[e[i]] = c;
    }
    return UniPoly(std::move(v));
  }

  // Scaled so the leading coefficient is 1.
  MultiPoly normalized() const {
    if (t_.empty()) return *this;
    return (Rational(1) / t_.rbegin()->second) * *this;
  }

  std::optional<MultiPoly> divide_exact(const MultiPoly& b) const {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    check_same(b);
    MultiPoly q(n_), r = *this;
    auto [lb, cb] = b.lead();
    while (!r.is_zero()) {
      auto [lr, cr] = r.lead();
      Exps d(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (lr[i] < lb[i]) return std::nullopt;
        d[i] = lr[i] - lb[i];
      }
      MultiPoly t = monomial(d, cr / cb);
      q += t;
      r -= t * b;
    }
    return q;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c.sign() < 0;
      Rational a = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string mono;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += a.str();
      else if (a.is_one())
        out += mono;
      else
        out += a.str() + "*" + mono;
    }
    return out;
  }
  std::string str() const { return str(default_names(n_)); }

  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
  }

  void add_term(const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

 private:
  static unsigned long total(const Exps& e) {
    unsigned long s = 0;
    for (auto x : e) s += x;
    return s;
  }
  void check_same(const MultiPoly& o) const {
    if (n_ != o.n_) throw Error("ShapeMismatch", "polynomials over different variable sets");
  }

  std::size_t n_ = 0;
  Terms t_;
};

namespace detail {

inline int main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (int i = static_cast<int>(a.nvars()) - 1; i >= 0; --i)
    if (a.uses(i) || b.uses(i)) return i;
  return -1;
}

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly content_in(const MultiPoly& a, std::size_t v) {
  MultiPoly g(a.nvars());
  for (const auto& [k, c] : a.coefficients_in(v)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

inline MultiPoly primitive_in(const MultiPoly& a, std::size_t v) {
  if (a.is_zero()) return a;
  return *a.divide_exact(content_in(a, v));
}

// lc(b)^e * a mod b, w.r.t. x_v
inline MultiPoly pseudo_rem(MultiPoly r, const MultiPoly& b, std::size_t v) {
  unsigned db = b.degree_in(v);
  MultiPoly lb = b.lead_coeff_in(v);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    unsigned dr = r.degree_in(v);
    MultiPoly lr = r.lead_coeff_in(v);
    r = lb * r - lr * MultiPoly::var(r.nvars(), v, dr - db) * b;
  }
  return r;
}

// Recursive primitive PRS gcd over Q[x_0..x_n].
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  std::size_t n = a.nvars();
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  int v = main_variable(a, b);
  if (v < 0) return MultiPoly::constant(n, 1);
  if (!a.uses(v)) return poly_gcd(a, content_in(b, v));
  if (!b.uses(v)) return poly_gcd(content_in(a, v), b);
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly g = poly_gcd(ca, cb);
  MultiPoly p = *a.divide_exact(ca), q = *b.divide_exact(cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    MultiPoly r = pseudo_rem(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      q = MultiPoly::constant(n, 1);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, v);
  }
  return (g * primitive_in(q, v)).normalized();
}

}  // namespace detail

inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return detail::poly_gcd(a, b); }

}  // namespace hta

#endif  // HTA_EXACTMATH_MULTIPOLY_HPP
