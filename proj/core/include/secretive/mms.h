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
// Maximin shares for indivisible goods with a secretive agent.
//
// mu_a is the best value agent a can guarantee by splitting all goods into n
// bundles and receiving the worst one. The solvers here return a partition
// P_0..P_{n-1} in which position i (i < n-1) is held by known agent order[i],
// together with a backup map sigma: every known agent values both its own
// bundle and bundle sigma(i) at least ratio * tau_a.
//

#ifndef SECRETIVE_MMS_H_
#define SECRETIVE_MMS_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "secretive/allocation.h"
#include "secretive/instance.h"
#include "secretive/valuation.h"

namespace secretive {

inline constexpr int kMaxBruteForceGoods = 12;
inline constexpr int kMaxBruteForceParts = 5;
// Upper bound on |agents|^|goods| assignments in BruteForceMmsAllocation.
inline constexpr long long kMaxBruteForceAssignments = 1LL << 22;

// Exact maximin value of `goods` split into `parts` bundles under v. Zero when
// there are fewer goods than parts. Throws Error(kTooLarge) past
// kMaxBruteForceGoods goods or kMaxBruteForceParts parts.
Rat BruteForceMms(const ValuationOracle& v, const GoodSet& goods, int parts);

// Splits `goods` among the agents so as to maximize min_a v_a(Q_a) / mu_a,
// where mu_a is agent a's maximin value for |agents| parts; agents with
// mu_a = 0 never bind. Ties are broken by the larger min_a v_a(Q_a), then by
// the lexicographically smallest assignment (good by good, ascending).
// Bundle i belongs to agents[i].
// Throws Error(kTooLarge).
Partition BruteForceMmsAllocation(std::span<const ValuationOracle> agents,
                                  const GoodSet& goods);

// Any routine with the contract above that achieves at least 1/3 of every
// agent's maximin value may be plugged into SecretiveMms19.
using MmsSubroutine = std::function<Partition(
    std::span<const ValuationOracle> agents, const GoodSet& goods)>;

struct MmsSolution {
  Partition partition;
  std::vector<int> order;      // order[i] = known agent holding position i
  BackupMap sigma;             // over positions
  BijectionFamily bijections;  // pi[k][agent]
  Rat ratio;
  std::vector<Rat> thresholds;  // per agent
};

struct Mms19Result {
  std::optional<MmsSolution> solution;
  int flagged_agent = -1;  // set when a threshold was proven too high

  bool ok() const { return solution.has_value(); }
};

// One pass with fixed thresholds (one per known agent). If tau_a <= mu_a the
// returned solution gives agent a at least tau_a / 19 from both P_a and
// P_sigma(a); an agent is only flagged when tau_a > mu_a. Subroutine budget
// overruns surface as Error(kSubroutineBudgetExceeded).
Mms19Result SecretiveMms19(
    const GoodsInstance& inst, std::span<const Rat> thresholds,
    const MmsSubroutine& subroutine = BruteForceMmsAllocation);

// BruteForceMms(v_a, all goods, n) for every known agent.
std::vector<Rat> ExactMmsThresholds(const GoodsInstance& inst);

// Per-agent bisection of tau_a over [0, v_a(all goods)]. A flagged agent
// lowers its upper end, a clean run raises every lower end. Stops once every
// interval is narrower than v_a(all goods) / 2^rounds, then reruns at the
// lower ends.
MmsSolution ThresholdSearch(
    const GoodsInstance& inst, int rounds = 40,
    const MmsSubroutine& subroutine = BruteForceMmsAllocation);

// SecretiveMms19 at ExactMmsThresholds. Throws Error(kInternal) on a flag.
MmsSolution SecretiveMms19Exact(
    const GoodsInstance& inst,
    const MmsSubroutine& subroutine = BruteForceMmsAllocation);

// Single-good preprocessing followed by a discrete moving knife over goods in
// ascending order; the leftover is bundle n-1. Gives every known agent at
// least tau_a / 2 from P_a and P_sigma(a) when tau_a <= mu_a.
// Throws Error(kInvalidOracleKind) for non-additive valuations and
// Error(kPreconditionViolated) when a threshold turns out to exceed mu_a.
MmsSolution AdditiveHalfMms(const GoodsInstance& inst,
                            std::span<const Rat> thresholds);

}  // namespace secretive

#endif  // SECRETIVE_MMS_H_
