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
// Envy-free rent division with a secretive tenant under quasilinear
// utilities.
//
// For each room k the secretive tenant might take, a max-weight matching of
// the known tenants onto the other rooms fixes who would live where. A single
// price vector is then chosen by LP so that every one of those n assignments
// is envy-free at the same prices; among such vectors the one with the least
// total rent is returned.
//

#ifndef SECRETIVE_RENT_H_
#define SECRETIVE_RENT_H_

#include "secretive/allocation.h"
#include "secretive/instance.h"
#include "secretive/lp.h"

namespace secretive {

struct RentSolution {
  PriceVector prices;
  BijectionFamily bijections;
  Rat lp_optimum;  // sum of prices
};

// pi[k] is a max-weight perfect matching of the known agents onto the rooms
// other than k, weights base_values(a, r).
BijectionFamily ComputeRoomRemovalMatchings(const RentInstance& inst);

// The price LP for a fixed family: minimize sum x_r subject to x >= 0 and,
// for every a, k, r: B[a][pi_k(a)] - x[pi_k(a)] >= B[a][r] - x[r].
// All n(n-1)n rows are emitted, trivial ones included.
LinearProgram BuildRentLp(const RentInstance& inst,
                          const BijectionFamily& family);

// Throws Error(kInternalInfeasibility) if the LP has no solution, which can
// only happen if the matchings are not maximum-weight.
RentSolution SolveSecretiveRent(const RentInstance& inst);

// Smallest room rho with B[a][pi_k(a)] >= B[a][rho] for every known agent a
// and every k. Throws Error(kNoDespisedRoom) if none exists (the family was
// not built from maximum-weight matchings).
int FindDespisedRoom(const RentInstance& inst, const BijectionFamily& family);

}  // namespace secretive

#endif  // SECRETIVE_RENT_H_
