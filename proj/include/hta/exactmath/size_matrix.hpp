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

#ifndef HTA_EXACTMATH_SIZE_MATRIX_HPP
#define HTA_EXACTMATH_SIZE_MATRIX_HPP

#include <map>
#include <utility>

#include "hta/exactmath/size_rational.hpp"

namespace hta {

// Matrix of SizeRational over x0..x_arity. Only nonzero entries are kept:
// the Kronecker-indexed row space d^k grows fast while the constructions
// touch few rows.
class SizeMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Entries = std::map<Key, SizeRational>;

  SizeMatrix() = default;
  SizeMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
      : rows_(rows), cols_(cols), arity_(arity) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t arity() const { return arity_; }
  const Entries& entries() const { return e_; }
  std::size_t nonzeros() const { return e_.size(); }

  SizeRational at(std::size_t r, std::size_t c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? SizeRational(arity_) : it->second;
  }

  void set(std::size_t r, std::size_t c, SizeRational v) {
    check(r, c, v);
    if (v.is_zero())
      e_.erase({r, c});
    else
      e_[{r, c}] = std::move(v);
  }

  void add(std::size_t r, std::size_t c, const SizeRational& v) {
    check(r, c, v);
    if (v.is_zero()) return;
    auto it = e_.find({r, c});
    if (it == e_.end()) {
      e_.emplace(Key{r, c}, v);
      return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) e_.erase(it);
  }

  friend bool operator==(const SizeMatrix& a, const SizeMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.arity_ == b.arity_ && a.e_ == b.e_;
  }

 private:
  void check(std::size_t r, std::size_t c, const SizeRational& v) const {
    if (r >= rows_ || c >= cols_) throw Error("ShapeMismatch", "matrix index out of range");
    if (v.arity() != arity_) throw Error("ShapeMismatch", "entry arity differs from matrix arity");
  }

  std::size_t rows_ = 0, cols_ = 0, arity_ = 0;
  Entries e_;
};

}  // namespace hta

#endif  // HTA_EXACTMATH_SIZE_MATRIX_HPP
