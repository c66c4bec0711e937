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

#ifndef HTA_EXACTMATH_RATFUNC_HPP
#define HTA_EXACTMATH_RATFUNC_HPP

#include <string>
#include <vector>

#include "hta/exactmath/multipoly.hpp"

namespace hta {

// Reduced fraction of multivariate polynomials; the denominator has leading
// coefficient 1 in graded order.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.nvars(), 1)) {}
  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
    reduce();
  }

  static RatFunc constant(std::size_t nvars, const Rational& c) {
    return RatFunc(MultiPoly::constant(nvars, c));
  }
  static RatFunc var(std::size_t nvars, std::size_t i) { return RatFunc(MultiPoly::var(nvars, i)); }

  std::size_t nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool uses(std::size_t i) const { return num_.uses(i) || den_.uses(i); }

  Rational eval(const std::vector<Rational>& pt) const {
    Rational d = den_.eval(pt);
    if (d.is_zero()) throw Error("DenominatorZero", "rational function undefined at point");
    return num_.eval(pt) / d;
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(unsigned k) const { return RatFunc(num_.pow(k), den_.pow(k), true); }

  RatFunc partial(std::size_t i) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.partial(i) * den_ - num_ * den_.partial(i), den_ * den_);
  }

  RatFunc substitute(std::size_t i, const RatFunc& v) const {
    // homogenize with v's denominator to stay polynomial
    unsigned dn = num_.degree_in(i), dd = den_.degree_in(i);
    unsigned top = std::max(dn, dd);
    auto homog = [&](const MultiPoly& p) {
      MultiPoly r(nvars());
      for (const auto& [k, c] : p.coefficients_in(i))
        r += c * v.num_.pow(k) * v.den_.pow(top - k);
      return r;
    };
    return RatFunc(homog(num_), homog(den_));
  }

  RatFunc remap(std::size_t new_n, const std::vector<int>& map) const {
    return RatFunc(num_.remap(new_n, map), den_.remap(new_n, map), true);
  }

  std::string str(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
  }

 private:
  RatFunc(MultiPoly n, MultiPoly d, bool /*already reduced*/)
      : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(num_.nvars(), 1);
      return;
    }
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
    Rational l = den_.lead().second;
    if (!l.is_one()) {
      num_ = (Rational(1) / l) * num_;
      den_ = (Rational(1) / l) * den_;
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace hta

#endif  // HTA_EXACTMATH_RATFUNC_HPP
