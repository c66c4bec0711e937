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

#include <catch_amalgamated.hpp>

#include <random>

#include "hta/exactmath/common_denominator.hpp"
#include "hta/exactmath/size_rational.hpp"

using namespace hta;

namespace {

std::mt19937 rng(20260115);

Rational small_rational() {
  std::uniform_int_distribution<int> n(-6, 6), d(1, 4);
  return Rational(BigInt(n(rng)), BigInt(d(rng)));
}

MultiPoly random_poly(std::size_t nvars, int terms = 4, unsigned maxdeg = 2) {
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exps e(nvars);
    for (auto& x : e) x = deg(rng);
    p.add_term(e, small_rational());
  }
  return p;
}

UniPoly random_uni(int deg) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(small_rational());
  return UniPoly(c);
}

// Legal denominators: roots pushed to negative integers or non-integers.
UniPoly safe_den(bool x0) {
  std::uniform_int_distribution<int> pick(0, 2), off(1, 4);
  switch (pick(rng)) {
    case 0: return UniPoly::one();
    case 1: return x0 ? UniPoly::x() : UniPoly::linear(off(rng));
    default: return UniPoly::linear(off(rng)) * UniPoly({Rational(1, 2) * off(rng), 0, 1});
  }
}

SizeRational random_size_rational(std::size_t arity) {
  std::vector<UniPoly> d;
  for (std::size_t i = 0; i <= arity; ++i) d.push_back(safe_den(i == 0));
  return SizeRational(random_poly(arity + 1, 3, 2), d);
}

std::vector<Rational> legal_point(std::size_t arity) {
  std::uniform_int_distribution<int> sz(0, 6);
  std::vector<Rational> pt(arity + 1);
  long total = 1;
  for (std::size_t i = 1; i <= arity; ++i) {
    long v = sz(rng);
    pt[i] = v;
    total += v;
  }
  pt[0] = total;
  return pt;
}

}  // namespace

TEST_CASE("rationals are canonical", "[rational]") {
  Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse(" -10/4 ") == Rational(BigInt(-5), BigInt(2)));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("rational ring laws", "[rational][property]") {
  for (int i = 0; i < 200; ++i) {
    Rational a = small_rational(), b = small_rational(), c = small_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("integer roots", "[unipoly]") {
  CHECK(integer_roots(UniPoly({-3, 1})) == std::vector<BigInt>{3});
  CHECK(integer_roots(UniPoly({1, 1})) == std::vector<BigInt>{-1});
  CHECK(integer_roots(UniPoly({6, -5, 1})) == std::vector<BigInt>{2, 3});
  CHECK(integer_roots(UniPoly({0, 0, 1})) == std::vector<BigInt>{0});
  CHECK(integer_roots(UniPoly({1, 0, 1})).empty());
  CHECK(integer_roots(UniPoly({Rational(1, 2), Rational(-1, 2)})) == std::vector<BigInt>{1});
  CHECK_THROWS_AS(integer_roots(UniPoly()), Error);
}

TEST_CASE("integer roots of random products of linear factors", "[unipoly][property]") {
  std::uniform_int_distribution<int> r(-30, 30), k(1, 4);
  for (int it = 0; it < 50; ++it) {
    std::vector<BigInt> want;
    UniPoly p = UniPoly::constant(small_rational() + Rational(7));  // nonzero
    int m = k(rng);
    for (int j = 0; j < m; ++j) {
      int root = r(rng);
      want.push_back(root);
      p = p * UniPoly::linear(-root);
    }
    // an irreducible quadratic never adds integer roots
    p = p * UniPoly({3, 0, 1});
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    CHECK(integer_roots(p) == want);
  }
}

TEST_CASE("univariate division and gcd", "[unipoly][property]") {
  for (int it = 0; it < 50; ++it) {
    UniPoly a = random_uni(4), b = random_uni(2);
    if (b.is_zero()) continue;
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    UniPoly c = random_uni(2);
    if (c.is_zero()) continue;
    UniPoly g = UniPoly::gcd(a * c, b * c);
    CHECK(UniPoly::divmod(g, c.monic()).second.is_zero());
  }
  CHECK(UniPoly({1, 2, 1}).shift(-1) == UniPoly({0, 0, 1}));
}

TEST_CASE("multivariate ring laws", "[multipoly][property]") {
  for (int it = 0; it < 60; ++it) {
    MultiPoly a = random_poly(3), b = random_poly(3), c = random_poly(3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto pt = legal_point(2);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("multivariate exact division and gcd", "[multipoly][property]") {
  for (int it = 0; it < 40; ++it) {
    MultiPoly a = random_poly(3, 3, 2), b = random_poly(3, 3, 2), c = random_poly(3, 2, 1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto q = (a * c).divide_exact(c);
    REQUIRE(q);
    CHECK(*q == a);
    MultiPoly g = gcd(a * c, b * c);
    CHECK(g.divide_exact(c.normalized()).has_value());
    CHECK((a * c).divide_exact(g).has_value());
    CHECK((b * c).divide_exact(g).has_value());
  }
  MultiPoly x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
  MultiPoly one = MultiPoly::constant(2, 1);
  CHECK(gcd((x - y) * (x + one), (x - y) * (y + one)) == (x - y).normalized());
  CHECK(gcd(x, y).is_constant());
}

TEST_CASE("rational functions reduce", "[ratfunc]") {
  std::vector<std::string> names{"x", "y"};
  RatFunc f = parse_ratfunc("(x^2 - y^2)/(x - y)", names);
  CHECK(f.is_polynomial());
  CHECK(f.str(names) == "x + y");
  RatFunc g = parse_ratfunc("1/(1-x) + 1/(1+x)", names);
  CHECK(g.eval({Rational(1, 2), 0}) == Rational(8, 3));
  CHECK_THROWS_AS(parse_ratfunc("1/0", names), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("z + 1", names), ParseError);
  try {
    parse_ratfunc("x + (y", names);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() >= 6);
  }
}

TEST_CASE("size rational evaluation", "[size_rational]") {
  CHECK(SizeRational::parse("(x1+1)/(x0+1)", 1).eval(std::vector<long>{1, 0}) == Rational(1, 2));
  CHECK(SizeRational::parse("1/x0", 2).eval(std::vector<long>{3, 2, 0}) == Rational(1, 3));
  // entry of the cubic construction at (4,0,3): -(3+1)/(4+1)
  CHECK(SizeRational::parse("-(x2+1)/(x0+1)", 2).eval(std::vector<long>{4, 0, 3}) ==
        Rational(-4, 5));
}

TEST_CASE("membership in the restricted ring", "[size_rational]") {
  CHECK_THROWS_AS(SizeRational::parse("1/x1", 1), Error);
  CHECK_THROWS_AS(SizeRational::parse("1/(x0-1)", 1), Error);
  CHECK_NOTHROW(SizeRational::parse("1/x0", 1));
  CHECK_NOTHROW(SizeRational::parse("1/(x1+1)", 1));
  CHECK_THROWS_AS(SizeRational::parse("1/(x1-3)", 1), Error);
  CHECK_NOTHROW(SizeRational::parse("1/(x1^2+1)", 1));
  // cancellation happens before the membership test
  CHECK(SizeRational::parse("x1/x1", 1).is_constant());
  CHECK_THROWS_AS(SizeRational::parse("1/(x0*x1 + 1)", 1), Error);
}

TEST_CASE("size rational text round trip", "[size_rational]") {
  for (const char* s : {"0", "1", "-1/(x0)", "(x2 + 1)/(x0 + 1)", "3/2*x0^2*x1 - x2",
                        "1/(x0)*(x1 + 2)", "-(x2+1)/(x0+1)"}) {
    std::size_t arity = 2;
    SizeRational f = SizeRational::parse(s, arity);
    CHECK(SizeRational::parse(f.str(), arity) == f);
  }
  CHECK(SizeRational::parse("-(x2+1)/(x0+1)", 2).str() == "(-x2 - 1)/(x0 + 1)");
}

TEST_CASE("size rational ring laws agree pointwise", "[size_rational][property]") {
  for (int it = 0; it < 30; ++it) {
    SizeRational a = random_size_rational(2), b = random_size_rational(2),
                 c = random_size_rational(2);
    SizeRational s1 = (a + b) * c, s2 = a * c + b * c;
    CHECK(s1 == s2);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    for (int k = 0; k < 50; ++k) {
      auto pt = legal_point(2);
      CHECK(s1.eval(pt) == a.eval(pt) * c.eval(pt) + b.eval(pt) * c.eval(pt));
    }
  }
}

TEST_CASE("size rational substitutions", "[size_rational]") {
  SizeRational f = SizeRational::parse("(x1 + x2)/(x0)*(x2 + 1)", 2);
  SizeRational g = f.shift_var(0, 1).shift_var(1, 1).set_zero(2);
  // f(x0+1, x1+1, 0)
  for (long a = 1; a < 5; ++a)
    for (long b = 0; b < 4; ++b)
      CHECK(g.eval(std::vector<long>{a, b, 7}) == f.eval(std::vector<long>{a + 1, b + 1, 0}));
  CHECK(g.with_arity(1).arity() == 1);
  CHECK_THROWS_AS(f.with_arity(1), Error);
}

TEST_CASE("common denominator of the Bell weights", "[common_denominator]") {
  SizeMatrix s1(2, 2, 1), s2(4, 2, 2);
  s1.set(1, 1, SizeRational::parse("1/x0", 1));
  s2.set(2, 0, SizeRational::parse("1/x0", 2));
  auto cd = normalize_common_denominator({s1, s2});
  CHECK(cd.Q == UniPoly::x());
  CHECK(cd.r == 0);
  for (const auto& sd : cd.symbols)
    for (const auto& q : sd.q) CHECK(q.is_one());
  CHECK(reassemble(cd, 0, 2, 2) == s1);
  CHECK(reassemble(cd, 1, 4, 2) == s2);
}

TEST_CASE("common denominator of constant weights", "[common_denominator]") {
  SizeMatrix s(2, 1, 1);
  s.set(0, 0, SizeRational::parse("x1^3 + 2", 1));
  s.set(1, 0, SizeRational::parse("5", 1));
  auto cd = normalize_common_denominator({s});
  CHECK(cd.Q.is_one());
  CHECK(cd.symbols[0].q[0].is_one());
  CHECK(cd.r == 3);
  CHECK(reassemble(cd, 0, 2, 1) == s);
}

TEST_CASE("common denominator splits numerators by exponent", "[common_denominator]") {
  SizeMatrix s(4, 2, 2);
  s.set(3, 1, SizeRational::parse("(x2+1)/(x0+1)", 2));
  auto cd = normalize_common_denominator({s});
  CHECK(cd.Q == UniPoly::linear(1));
  CHECK(cd.symbols[0].q[1].is_one());
  CHECK(cd.symbols[0].parts.size() == 2);
  CHECK(cd.symbols[0].parts.count(Exps{0, 0}) == 1);
  CHECK(cd.symbols[0].parts.count(Exps{0, 1}) == 1);
  CHECK(cd.r == 1);
  CHECK(reassemble(cd, 0, 4, 2) == s);
}

TEST_CASE("common denominator round trips random weights", "[common_denominator][property]") {
  for (int it = 0; it < 20; ++it) {
    SizeMatrix a(4, 2, 2), b(2, 2, 1);
    for (int k = 0; k < 3; ++k) {
      std::uniform_int_distribution<int> r4(0, 3), r2(0, 1);
      // keep numerators free of x0 so reassembly is literal
      SizeRational f = random_size_rational(2);
      MultiPoly p = f.numerator().set_value(0, 1);
      a.set(r4(rng), r2(rng), SizeRational(p, f.denominators()));
      SizeRational g = random_size_rational(1);
      b.set(r2(rng), r2(rng), SizeRational(g.numerator().set_value(0, 2), g.denominators()));
    }
    auto cd = normalize_common_denominator({b, a});
    // equal as functions on legal tuples (the x0 part of Q is shared)
    SizeMatrix rb = reassemble(cd, 0, 2, 2), ra = reassemble(cd, 1, 4, 2);
    for (int k = 0; k < 20; ++k) {
      auto p1 = legal_point(1), p2 = legal_point(2);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
          CHECK(ra.at(r, c).eval(p2) == a.at(r, c).eval(p2));
          if (r < 2) CHECK(rb.at(r, c).eval(p1) == b.at(r, c).eval(p1));
        }
    }
  }
}

TEST_CASE("x0 in numerators is read on the legal hyperplane", "[common_denominator]") {
  SizeMatrix s(2, 1, 1);
  s.set(1, 0, SizeRational::parse("x0/(x0+1)", 1));
  auto cd = normalize_common_denominator({s});
  SizeMatrix back = reassemble(cd, 0, 2, 1);
  for (long n1 = 0; n1 < 6; ++n1)
    CHECK(back.at(1, 0).eval(std::vector<long>{n1 + 1, n1}) ==
          s.at(1, 0).eval(std::vector<long>{n1 + 1, n1}));
}
