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

#include "hta/series/coefficients.hpp"
#include "support.hpp"

using namespace hta;
using hta::testing::r;
using hta::testing::shipped;

TEST_CASE("bell numbers over n factorial") {
  auto p = generating_prefix(shipped("bell"), 6);
  CHECK(p == SeriesPrefix{r(1), r(1), r(1), r(5, 6), r(5, 8), r(13, 30), r(203, 720)});
  std::vector<Rational> bell{1, 1, 2, 5, 15, 52, 203};
  CHECK(egf_counts(p) == bell);
}

TEST_CASE("labelled rooted trees") {
  auto p = generating_prefix(shipped("labelled_trees"), 5);
  CHECK(p == SeriesPrefix{r(0), r(1), r(1), r(3, 2), r(8, 3), r(125, 24)});
  // n^(n-1) labelled rooted trees
  auto c = egf_counts(generating_prefix(shipped("labelled_trees"), 8));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(c[n] == Rational(pow(Rational(n), n - 1)));
}

TEST_CASE("cubic series") {
  auto p = generating_prefix(shipped("cubic"), 7);
  CHECK(p == SeriesPrefix{r(0), r(1), r(0), r(0), r(-1, 12), r(0), r(0), r(-1, 252)});
}

TEST_CASE("zero automaton") {
  auto p = generating_prefix(shipped("zero"), 10);
  for (const auto& c : p) CHECK(c.is_zero());
}

TEST_CASE("dynamic programme equals enumeration") {
  for (const char* name : {"bell", "labelled_trees", "cubic"}) {
    auto a = shipped(name);
    auto dp = coefficients(a, 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(dp[n] == brute_force_coefficient(a, n));
  }
  std::mt19937 rng(19);
  RankedAlphabet al({{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}});
  for (int trial = 0; trial < 8; ++trial) {
    auto a = hta::testing::random_automaton(rng, 2 + trial % 2, al, 4);
    auto dp = coefficients(a, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(dp[n] == brute_force_coefficient(a, n));
  }
}

TEST_CASE("ternary symbols") {
  std::mt19937 rng(23);
  RankedAlphabet al({{"a", 0}, {"t", 3}, {"f", 1}});
  for (int trial = 0; trial < 4; ++trial) {
    auto a = hta::testing::random_automaton(rng, 2, al, 5);
    auto dp = coefficients(a, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(dp[n] == brute_force_coefficient(a, n));
  }
}

TEST_CASE("stream resumes where it stopped") {
  auto a = shipped("bell");
  CoefficientStream s(a);
  auto first = s.prefix(3);
  CHECK(s.computed() == 4);
  auto more = s.prefix(9);
  CHECK(std::equal(first.begin(), first.end(), more.begin()));
  CHECK(more == coefficients(a, 9));
}

TEST_CASE("prefix arithmetic") {
  SeriesPrefix a{r(1), r(2), r(3)}, b{r(4), r(5), r(6)};
  CHECK(s_derive(a) == SeriesPrefix{r(0), r(2), r(6)});
  CHECK(series_add(a, b) == SeriesPrefix{r(5), r(7), r(9)});
  CHECK(series_scale(a, r(1, 2)) == SeriesPrefix{r(1, 2), r(1), r(3, 2)});
  CHECK(series_cauchy(a, b) == SeriesPrefix{r(4), r(13), r(28)});
  // 1/(1-x) squared
  SeriesPrefix g(8, r(1));
  auto sq = series_cauchy(g, g);
  for (std::size_t n = 0; n < 8; ++n) CHECK(sq[n] == Rational(n + 1));
  auto d2 = s_derive(s_derive(g));
  for (std::size_t n = 0; n < 8; ++n) CHECK(d2[n] == Rational(n * n));
}

TEST_CASE("pruned enumeration equals evaluating every tree") {
  std::mt19937 rng(29);
  RankedAlphabet al({{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}});
  for (int trial = 0; trial < 6; ++trial) {
    auto a = hta::testing::random_automaton(rng, 2, al, 3);
    for (std::size_t n = 0; n <= 4; ++n) {
      RowVector sum(2);
      for (const auto& t : enumerate_trees(al, n)) {
        auto mu = evaluate(a, t).mu;
        sum[0] += mu[0];
        sum[1] += mu[1];
      }
      CHECK(brute_force_coefficient(a, n) == sum);
    }
  }
}
