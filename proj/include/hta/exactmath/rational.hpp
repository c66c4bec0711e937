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

#ifndef HTA_EXACTMATH_RATIONAL_HPP
#define HTA_EXACTMATH_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "hta/error.hpp"

namespace hta {

using BigInt = mpz_class;

// Exact rational, always canonical (gmp keeps gcd = 1, den > 0).
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) {  // NOLINT: implicit on purpose
    if constexpr (std::is_signed_v<T>)
      v_ = mpq_class(mpz_class(static_cast<long>(v)));
    else
      v_ = mpq_class(mpz_class(static_cast<unsigned long>(v)));
  }

  explicit Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw Error("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "7", "-3", "2/5", "-2/5", surrounding blanks ignored.
  static Rational parse(std::string_view s) {
    auto trim = [](std::string_view t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
      while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
      return t;
    };
    s = trim(s);
    auto slash = s.find('/');
    auto parse_int = [](std::string_view t) {
      std::string str(t);
      std::size_t start = (!str.empty() && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
      if (start == str.size())
        throw Error("SyntaxError", "malformed rational '" + str + "'",
                    ErrorKind::Parse);
      for (std::size_t i = start; i < str.size(); ++i)
        if (str[i] < '0' || str[i] > '9')
          throw Error("SyntaxError", "malformed rational '" + str + "'",
                      ErrorKind::Parse);
      if (str[0] == '+') str.erase(0, 1);
      return BigInt(str, 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt n = parse_int(trim(s.substr(0, slash)));
    BigInt d = parse_int(trim(s.substr(slash + 1)));
    if (d == 0)
      throw Error("SyntaxError", "zero denominator in '" + std::string(s) + "'",
                  ErrorKind::Parse);
    return Rational(n, d);
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("DivisionByZero", "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rational(n, d);
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hta

#endif  // HTA_EXACTMATH_RATIONAL_HPP
