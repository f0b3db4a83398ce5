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

//
// Problem instances with a secretive agent. There are n agents; only the
// first n-1 (indices 0..n-2) are described. Agent n-1 reveals nothing and
// picks any bundle after the division is announced.
//

#ifndef SECRETIVE_INSTANCE_H_
#define SECRETIVE_INSTANCE_H_

#include <vector>

#include "secretive/matrix.h"
#include "secretive/rational.h"
#include "secretive/valuation.h"

namespace secretive {

// Quasilinear rent division: agent a's utility for room r at rent p_r is
// base_values(a, r) - p_r.
class RentInstance {
 public:
  // `base_values` must have n-1 rows of n entries each, n >= 2.
  explicit RentInstance(std::vector<std::vector<Rat>> base_values);
  RentInstance(int n, WeightMatrix base_values);

  int n() const { return n_; }
  int num_known() const { return n_ - 1; }
  const Rat& base(int agent, int room) const { return base_(agent, room); }
  const WeightMatrix& base_values() const { return base_; }

 private:
  int n_;
  WeightMatrix base_;
};

// Indivisible goods 0..m-1; one valuation per known agent. Construction
// rejects negative or non-monotone valuations (exhaustive check up to 12
// goods, sampled above).
class GoodsInstance {
 public:
  GoodsInstance(int n, int m, std::vector<ValuationOracle> valuations);

  int n() const { return n_; }
  int m() const { return m_; }
  int num_known() const { return n_ - 1; }
  const ValuationOracle& valuation(int agent) const {
    return valuations_[agent];
  }
  const std::vector<ValuationOracle>& valuations() const { return valuations_; }

 private:
  int n_;
  int m_;
  std::vector<ValuationOracle> valuations_;
};

}  // namespace secretive

#endif  // SECRETIVE_INSTANCE_H_
