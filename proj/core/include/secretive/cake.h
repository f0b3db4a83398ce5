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
// Divisible cake [0, 1] with piecewise-constant valuations, accessed only
// through Eval and Cut queries.
//

#ifndef SECRETIVE_CAKE_H_
#define SECRETIVE_CAKE_H_

#include <span>
#include <string>
#include <vector>

#include "secretive/allocation.h"
#include "secretive/rational.h"

namespace secretive {

// densities[i] applies on [breakpoints[i], breakpoints[i+1]].
struct CakeValuation {
  std::vector<Rat> breakpoints;  // 0 = b_0 < b_1 < ... < b_s = 1
  std::vector<Rat> densities;    // s entries, all >= 0, integral exactly 1

  static CakeValuation Uniform();
  friend bool operator==(const CakeValuation&, const CakeValuation&) = default;
};

// Empty string when `v` is well formed and normalized.
std::string ValidateCakeValuation(const CakeValuation& v);

class CakeInstance {
 public:
  // Needs n >= 2 and n-1 valid valuations; throws Error(kInvalidInstance).
  CakeInstance(int n, std::vector<CakeValuation> valuations);

  int n() const { return n_; }
  int num_known() const { return n_ - 1; }
  const CakeValuation& valuation(int agent) const { return valuations_[agent]; }
  const std::vector<CakeValuation>& valuations() const { return valuations_; }

 private:
  int n_;
  std::vector<CakeValuation> valuations_;
};

struct Interval {
  Rat lo;
  Rat hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

using CakeBundle = std::vector<Interval>;

struct CakePartition {
  std::vector<CakeBundle> bundles;

  int size() const { return static_cast<int>(bundles.size()); }
  const CakeBundle& operator[](int i) const { return bundles[i]; }
  friend bool operator==(const CakePartition&, const CakePartition&) = default;
};

// Empty string when the bundles are n interior-disjoint interval unions
// inside [0, 1] whose lengths sum to 1.
std::string ValidateCakePartition(const CakePartition& p, int n);

// Integral of the density over [lo, hi]. Throws Error(kOutOfRange) unless
// 0 <= lo <= hi <= 1.
Rat EvalQuery(const CakeValuation& v, const Rat& lo, const Rat& hi);

// Smallest x in [lo, hi] with v([lo, x]) = lambda * v([lo, hi]); lo when the
// interval is worthless. Throws Error(kOutOfRange) or Error(kInvalidLambda)
// for lambda outside (0, 1].
Rat CutQuery(const CakeValuation& v, const Rat& lo, const Rat& hi,
             const Rat& lambda);

Rat BundleValue(const CakeValuation& v, std::span<const Interval> bundle);

// Query front end over an instance that counts what it is asked.
class RobertsonWebb {
 public:
  explicit RobertsonWebb(const CakeInstance& inst) : inst_(inst) {}

  Rat Eval(int agent, const Rat& lo, const Rat& hi);
  Rat Cut(int agent, const Rat& lo, const Rat& hi, const Rat& lambda);

  int eval_queries() const { return eval_queries_; }
  int cut_queries() const { return cut_queries_; }

 private:
  const CakeInstance& inst_;
  int eval_queries_ = 0;
  int cut_queries_ = 0;
};

struct ProportionalSolution {
  CakePartition partition;     // contiguous; bundle n-1 is the leftover
  std::vector<int> order;      // order[i] = known agent that cut bundle i
  BackupMap sigma;             // over bundle positions
  BijectionFamily bijections;  // pi[k][agent]
  int eval_queries = 0;
  int cut_queries = 0;
};

// Moving knife with threshold 1/n among the known agents. The smallest cut
// wins each round, ties to the smaller agent index.
ProportionalSolution SecretiveProportional(const CakeInstance& inst);

struct EpsEfSolution {
  std::vector<Interval> pieces;  // the sweep's pieces, left to right
  CakePartition partition;       // bundle j = union of its pieces
  std::vector<std::vector<int>> piece_bundles;  // piece indices per bundle
  BijectionFamily bijections;
  int eval_queries = 0;
  int cut_queries = 0;
};

// Cuts [0, 1] into pieces worth at most eps to every known agent, then
// allocates the pieces as indivisible goods with the EF1 algorithm.
// Throws Error(kInvalidEpsilon) unless 0 < eps <= 1.
EpsEfSolution SecretiveEpsEf(const CakeInstance& inst, const Rat& eps);

}  // namespace secretive

#endif  // SECRETIVE_CAKE_H_
