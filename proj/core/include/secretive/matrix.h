// Copyright 2026 The Secretive Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECRETIVE_MATRIX_H_
#define SECRETIVE_MATRIX_H_

#include <cassert>
#include <cstdint>
#include <vector>

#include "secretive/rational.h"

namespace secretive {

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[std::size_t(r) * cols_ + c];
  }
  const T& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[std::size_t(r) * cols_ + c];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using WeightMatrix = Matrix<Rat>;
// 0/1 adjacency; uint8_t instead of bool so elements are addressable.
using BoolMatrix = Matrix<std::uint8_t>;

}  // namespace secretive

#endif  // SECRETIVE_MATRIX_H_
