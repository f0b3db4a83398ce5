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
// Dense two-phase simplex over exact rationals with Bland's rule.
//
// Intended for small programs (tens of variables, a few hundred rows) where
// degenerate ties are common and any rounding would corrupt the answer.
//

#ifndef SECRETIVE_LP_H_
#define SECRETIVE_LP_H_

#include <vector>

#include "secretive/rational.h"

namespace secretive {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<Rat> coefficients;
  Relation relation = Relation::kLessEqual;
  Rat rhs;
};

// minimize objective . x subject to constraints; nonnegative[j] restricts
// x_j >= 0, otherwise x_j is free.
struct LinearProgram {
  std::vector<Rat> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;

  int num_vars() const { return static_cast<int>(objective.size()); }
};

struct LpSolution {
  Rat optimum;
  std::vector<Rat> x;
  int pivots = 0;
};

// Throws Error(kInfeasible), Error(kUnbounded), or Error(kDimensionMismatch)
// for rows whose width differs from the objective.
LpSolution SolveMin(const LinearProgram& lp);

// True when `x` satisfies every constraint and sign restriction exactly.
bool IsFeasible(const LinearProgram& lp, const std::vector<Rat>& x);

}  // namespace secretive

#endif  // SECRETIVE_LP_H_
