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

#ifndef SECRETIVE_MATCHING_H_
#define SECRETIVE_MATCHING_H_

#include <vector>

#include "secretive/matrix.h"
#include "secretive/rational.h"

namespace secretive {

struct Matching {
  std::vector<int> assignment;  // row -> column, a permutation
  Rat total_weight;
};

// Hungarian method with exact potentials, O(d^3). Maximizes the total weight
// over all permutations; entries may be negative. Deterministic for a given
// input. Throws Error(kDimensionMismatch) if `weights` is not square or empty.
Matching MaxWeightPerfectMatching(const WeightMatrix& weights);

// Max-weight perfect matching of the rows onto all columns except
// `skip_column`. `weights` must have exactly one more column than rows.
// Returned assignment uses the original column numbering.
Matching MaxWeightMatchingSkippingColumn(const WeightMatrix& weights,
                                         int skip_column);

struct CardinalityMatching {
  int size = 0;
  std::vector<int> row_to_col;  // -1 when unmatched
  std::vector<int> col_to_row;  // -1 when unmatched
};

// Augmenting-path maximum matching on a bipartite adjacency matrix.
CardinalityMatching MaxCardinalityMatching(const BoolMatrix& edges);

}  // namespace secretive

#endif  // SECRETIVE_MATCHING_H_
