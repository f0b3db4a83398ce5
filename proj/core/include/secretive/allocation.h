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

#ifndef SECRETIVE_ALLOCATION_H_
#define SECRETIVE_ALLOCATION_H_

#include <span>
#include <string>
#include <vector>

#include "secretive/good_set.h"
#include "secretive/rational.h"

namespace secretive {

// n pairwise-disjoint bundles covering goods 0..m-1. Empty bundles are
// allowed.
struct Partition {
  std::vector<GoodSet> bundles;

  int size() const { return static_cast<int>(bundles.size()); }
  const GoodSet& operator[](int i) const { return bundles[i]; }

  static Partition Empty(int n) { return Partition{std::vector<GoodSet>(n)}; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Returns an empty string when `p` is an n-partition of goods 0..m-1,
// otherwise a description of the first violation.
std::string ValidatePartition(const Partition& p, int n, int m);

// pi[k][a] is the bundle that known agent a receives when the secretive agent
// takes bundle k. Each pi[k] is a bijection {0..n-2} -> {0..n-1} \ {k}.
struct BijectionFamily {
  std::vector<std::vector<int>> pi;

  int n() const { return static_cast<int>(pi.size()); }
  friend bool operator==(const BijectionFamily&,
                         const BijectionFamily&) = default;
};

// Empty string when `f` has the shape and bijectivity required for n agents.
std::string ValidateBijectionFamily(const BijectionFamily& f, int n);

// sigma[i] > i for every i in 0..n-2; sigma[i] <= n-1.
struct BackupMap {
  std::vector<int> sigma;

  friend bool operator==(const BackupMap&, const BackupMap&) = default;
};

// Expands a backup map into n bijections over bundle positions such that
// pi[k][i] is either i or sigma[i]: positions on the sigma-path from k to the
// last bundle move to their backup, all others keep their own bundle.
// Throws Error(kInvalidBackupMap) if sigma[i] <= i or sigma[i] >= n.
BijectionFamily BackupToBijections(const BackupMap& backup, int n);

// Re-expresses a family over bundle positions in terms of agents when
// position i is held by agent owner[i] (owner is a permutation of 0..n-2).
BijectionFamily RelabelAgents(const BijectionFamily& by_position,
                              std::span<const int> owner);

struct PriceVector {
  std::vector<Rat> prices;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;
};

}  // namespace secretive

#endif  // SECRETIVE_ALLOCATION_H_
