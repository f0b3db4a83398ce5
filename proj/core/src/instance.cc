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

#include "secretive/instance.h"

#include <string>

#include "secretive/error.h"

namespace secretive {
namespace {

[[noreturn]] void Invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidInstance, msg);
}

}  // namespace

RentInstance::RentInstance(std::vector<std::vector<Rat>> base_values)
    : n_(static_cast<int>(base_values.size()) + 1) {
  if (n_ < 2) Invalid("rent instance needs at least one known agent");
  base_ = WeightMatrix(n_ - 1, n_);
  for (int a = 0; a < n_ - 1; ++a) {
    if (static_cast<int>(base_values[a].size()) != n_) {
      Invalid("base_values row " + std::to_string(a) + " has " +
              std::to_string(base_values[a].size()) + " entries, expected " +
              std::to_string(n_));
    }
    for (int r = 0; r < n_; ++r) base_(a, r) = std::move(base_values[a][r]);
  }
}

RentInstance::RentInstance(int n, WeightMatrix base_values)
    : n_(n), base_(std::move(base_values)) {
  if (n_ < 2) Invalid("rent instance needs n >= 2");
  if (base_.rows() != n_ - 1 || base_.cols() != n_) {
    Invalid("base_values must be (n-1) x n");
  }
}

GoodsInstance::GoodsInstance(int n, int m,
                             std::vector<ValuationOracle> valuations)
    : n_(n), m_(m), valuations_(std::move(valuations)) {
  if (n_ < 2) Invalid("goods instance needs n >= 2");
  if (m_ < 0) Invalid("negative good count");
  if (static_cast<int>(valuations_.size()) != n_ - 1) {
    Invalid("expected " + std::to_string(n_ - 1) + " valuations, got " +
            std::to_string(valuations_.size()));
  }
  for (int a = 0; a < n_ - 1; ++a) {
    if (valuations_[a].num_goods() != m_) {
      Invalid("valuation " + std::to_string(a) + " is defined on " +
              std::to_string(valuations_[a].num_goods()) + " goods, not " +
              std::to_string(m_));
    }
    if (!IsNonnegativeAndMonotone(valuations_[a])) {
      Invalid("valuation " + std::to_string(a) +
              " is negative or not monotone");
    }
  }
}

}  // namespace secretive
