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
// EF1 allocation of indivisible goods robust to a secretive agent.
//
// Goods are inserted one at a time. Before each insertion the known agents
// are matched, for every bundle k the secretive agent could take, onto the
// remaining bundles by a max-weight matching that only uses EF1 edges (non-EF1
// edges carry a prohibitive negative weight). The next good goes to a bundle
// that every known agent weakly dislikes relative to what each matching gives
// them, which keeps all matched edges EF1 after the insertion.
//

#ifndef SECRETIVE_EF1_H_
#define SECRETIVE_EF1_H_

#include <vector>

#include "secretive/allocation.h"
#include "secretive/instance.h"
#include "secretive/matrix.h"

namespace secretive {

struct Ef1Graph {
  WeightMatrix weights;  // (n-1) x n
  BoolMatrix ef1;        // ef1(a, i) == 1 iff edge (a, P_i) is EF1
};

struct Ef1Solution {
  Partition partition;
  BijectionFamily bijections;
};

// Optional per-run record, mainly for tests.
struct Ef1Trace {
  std::vector<int> despised;  // bundle chosen at each insertion
  int matched_edges_checked = 0;
};

// True iff for every nonempty bundle P_j some g in P_j has
// v_a(P_i) >= v_a(P_j \ {g}).
bool IsEf1Edge(int agent, int bundle, const Partition& p,
               const GoodsInstance& inst);

// -m * max_a v_a(all goods).
Rat Ef1Penalty(const GoodsInstance& inst);

Ef1Graph BuildEf1Graph(const Partition& p, const GoodsInstance& inst);

// Max-weight matchings of the graph with bundle k removed, for every k.
BijectionFamily MatchAroundEachBundle(const Ef1Graph& graph);

// Smallest rho with v_a(P_{pi_k(a)}) >= v_a(P_rho) for every a and k.
// Throws Error(kNoDespisedBundle) when no bundle qualifies.
int FindDespisedBundle(const Partition& p, const GoodsInstance& inst,
                       const BijectionFamily& family);

// Goods are inserted in ascending index order. Throws
// Error(kNoDespisedBundle) or Error(kNonEf1Matching) only if an internal
// invariant breaks.
Ef1Solution AllocateSecretiveEf1(const GoodsInstance& inst,
                                 Ef1Trace* trace = nullptr);

}  // namespace secretive

#endif  // SECRETIVE_EF1_H_
