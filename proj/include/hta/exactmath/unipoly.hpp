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

#ifndef HTA_EXACTMATH_UNIPOLY_HPP
#define HTA_EXACTMATH_UNIPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hta/exactmath/rational.hpp"

namespace hta {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UniPoly constant(const Rational& v) { return UniPoly({v}); }
  static UniPoly one() { return constant(1); }
  static UniPoly x() { return UniPoly({0, 1}); }
  static UniPoly monomial(std::size_t deg, const Rational& c) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v));
  }
  // x + c
  static UniPoly linear(const Rational& c) { return UniPoly({c, 1}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    Rational l = c_.back();
    std::vector<Rational> v = c_;
    for (auto& e : v) e /= l;
    return UniPoly(std::move(v));
  }

  UniPoly derivative() const {
    std::vector<Rational> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(i));
    return UniPoly(std::move(v));
  }

  // p(x + c), by Horner on (x + c)
  UniPoly shift(const Rational& c) const {
    UniPoly r;
    UniPoly lin = linear(c);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

  UniPoly operator-() const {
    std::vector<Rational> v = c_;
    for (auto& e : v) e = -e;
    return UniPoly(std::move(v));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    return constant(s) * a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Euclidean division over Q.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> r = a.c_;
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    const Rational& lb = b.c_.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      Rational f = r[i + b.c_.size() - 1] / lb;
      q[i] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] -= f * b.c_[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  // Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  static UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (divmod(a * b, gcd(a, b)).first).monic();
  }

  std::string str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational a = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty())
        out += a.str();
      else if (a.is_one())
        out += mono;
      else
        out += a.str() + "*" + mono;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

// Divisors of |n| (n != 0) via trial division; a large cofactor must be
// prime or the search gives up.
inline std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, unsigned>> fac;
  const unsigned long limit = 1000000;
  for (unsigned long p = 2; p <= limit; ++p) {
    BigInt pp(p);
    if (pp * pp > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(pp, e);
  }
  if (n > 1) {
    if (n > BigInt(limit) * BigInt(limit) &&
        mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error("RootSearchLimit",
                  "constant term too large to factor for integer-root search");
    fac.emplace_back(n, 1);
  }
  std::vector<BigInt> out{BigInt(1)};
  for (auto& [p, e] : fac) {
    std::size_t sz = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Exact integer roots, ascending. Rational root theorem on the cleared
// integer polynomial with x^m divided out.
inline std::vector<BigInt> integer_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "integer roots of the zero polynomial");
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<BigInt> a;
  for (const auto& c : p.coeffs()) a.push_back(c.num() * (l / c.den()));
  std::vector<BigInt> roots;
  std::size_t m = 0;
  while (a[m] == 0) ++m;
  if (m > 0) roots.emplace_back(0);
  a.erase(a.begin(), a.begin() + static_cast<long>(m));
  if (a.size() > 1) {
    auto eval = [&](const BigInt& x) {
      BigInt r = 0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
      return r;
    };
    // Cauchy bound keeps the divisor scan short.
    BigInt lead = abs(a.back());
    BigInt mx = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) mx = std::max(mx, BigInt(abs(a[i])));
    BigInt bound = mx / lead + 2;
    std::vector<BigInt> cands;
    if (bound <= 2000000) {
      BigInt c0 = abs(a[0]);
      for (BigInt d = 1; d <= bound; ++d)
        if (mpz_divisible_p(c0.get_mpz_t(), d.get_mpz_t())) cands.push_back(d);
    } else {
      for (auto& d : detail::divisors(a[0]))
        if (d <= bound) cands.push_back(d);
    }
    for (const auto& d : cands) {
      if (eval(d) == 0) roots.push_back(d);
      if (eval(BigInt(-d)) == 0) roots.push_back(-d);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline bool has_root_at_least(const UniPoly& p, long lo) {
  if (p.is_zero()) return true;
  if (p.is_constant()) return false;
  for (const auto& r : integer_roots(p))
    if (r >= lo) return true;
  return false;
}

}  // namespace hta

#endif  // HTA_EXACTMATH_UNIPOLY_HPP
