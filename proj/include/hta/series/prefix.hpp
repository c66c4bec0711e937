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

#ifndef HTA_SERIES_PREFIX_HPP
#define HTA_SERIES_PREFIX_HPP

#include <algorithm>
#include <vector>

#include "hta/exactmath/rational.hpp"

namespace hta {

// Coefficient n is the coefficient of x^n.
using SeriesPrefix = std::vector<Rational>;

// n * a_n
inline SeriesPrefix s_derive(const SeriesPrefix& s) {
  SeriesPrefix r(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) r[n] = s[n] * Rational(n);
  return r;
}

inline SeriesPrefix series_add(const SeriesPrefix& a, const SeriesPrefix& b) {
  SeriesPrefix r(std::min(a.size(), b.size()));
  for (std::size_t n = 0; n < r.size(); ++n) r[n] = a[n] + b[n];
  return r;
}

inline SeriesPrefix series_scale(const SeriesPrefix& a, const Rational& c) {
  SeriesPrefix r(a.size());
  for (std::size_t n = 0; n < r.size(); ++n) r[n] = a[n] * c;
  return r;
}

inline SeriesPrefix series_cauchy(const SeriesPrefix& a, const SeriesPrefix& b) {
  SeriesPrefix r(std::min(a.size(), b.size()));
  for (std::size_t n = 0; n < r.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i) r[n] += a[i] * b[n - i];
  return r;
}

// n! * a_n, the counting sequence of an exponential generating function.
inline std::vector<Rational> egf_counts(const SeriesPrefix& s) {
  std::vector<Rational> r(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) r[n] = s[n] * Rational(factorial(n));
  return r;
}

}  // namespace hta

#endif  // HTA_SERIES_PREFIX_HPP
