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
// Solver-independent checks for secretive solutions.
//
// A candidate division is secretive for a fairness property exactly when,
// for every bundle k the secretive agent might take, the known agents can be
// matched onto the other bundles along edges that satisfy the property. The
// checkers build that bipartite graph by direct valuation queries and test it
// with maximum-cardinality matchings.
//

#ifndef SECRETIVE_VERIFY_H_
#define SECRETIVE_VERIFY_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secretive/allocation.h"
#include "secretive/cake.h"
#include "secretive/instance.h"
#include "secretive/matrix.h"

namespace secretive {

// (n-1) x n; edge (a, i) iff bundle i is acceptable to known agent a.
using FairnessGraph = BoolMatrix;

struct Verdict {
  bool ok = false;
  std::optional<BijectionFamily> witness_bijections;  // when ok
  std::optional<int> failing_choice;                  // k with no matching
  std::optional<std::vector<int>> failing_subset;     // |N(S)| <= |S|
  std::string problem;  // malformed input, if that is why ok is false
};

Verdict CheckSecretive(const FairnessGraph& graph);

// True iff every pi_k(a) is an edge of `graph` and `family` has the right
// shape.
bool FamilyRespectsGraph(const FairnessGraph& graph,
                         const BijectionFamily& family);

FairnessGraph RentFairnessGraph(const RentInstance& inst, const PriceVector& p);
Verdict VerifySecretiveRent(const RentInstance& inst, const PriceVector& p);

FairnessGraph Ef1FairnessGraph(const GoodsInstance& inst, const Partition& p);
Verdict VerifySecretiveEf1(const GoodsInstance& inst, const Partition& p);

FairnessGraph EpsEfFairnessGraph(const CakeInstance& inst,
                                 const CakePartition& p, const Rat& eps);
Verdict VerifySecretiveEpsEf(const CakeInstance& inst, const CakePartition& p,
                             const Rat& eps);

FairnessGraph ProportionalFairnessGraph(const CakeInstance& inst,
                                        const CakePartition& p);
Verdict VerifySecretiveProportional(const CakeInstance& inst,
                                    const CakePartition& p);

// Edge (a, i) iff v_a(P_i) >= ratio * mu[a]. With no `mu`, maximin shares are
// computed by brute force (Error(kTooLarge) past the enumeration budget).
FairnessGraph MmsFairnessGraph(const GoodsInstance& inst, const Partition& p,
                               const Rat& ratio, std::span<const Rat> mu);
Verdict VerifySecretiveMms(const GoodsInstance& inst, const Partition& p,
                           const Rat& ratio,
                           std::optional<std::vector<Rat>> mu = std::nullopt);

}  // namespace secretive

#endif  // SECRETIVE_VERIFY_H_
