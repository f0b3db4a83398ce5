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

#include "secretive/rent.h"

#include "secretive/error.h"
#include "secretive/matching.h"

namespace secretive {

BijectionFamily ComputeRoomRemovalMatchings(const RentInstance& inst) {
  BijectionFamily family;
  family.pi.reserve(inst.n());
  for (int k = 0; k < inst.n(); ++k) {
    family.pi.push_back(
        MaxWeightMatchingSkippingColumn(inst.base_values(), k).assignment);
  }
  return family;
}

LinearProgram BuildRentLp(const RentInstance& inst,
                          const BijectionFamily& family) {
  const int n = inst.n();
  LinearProgram lp;
  lp.objective.assign(n, Rat(1));
  lp.nonnegative.assign(n, true);
  lp.constraints.reserve(std::size_t(n) * (n - 1) * n);
  // x_r - x_s >= B[a][r] - B[a][s], with s = pi_k(a).
  for (int a = 0; a < n - 1; ++a) {
    for (int k = 0; k < n; ++k) {
      const int s = family.pi[k][a];
      for (int r = 0; r < n; ++r) {
        LinearConstraint con;
        con.coefficients.assign(n, Rat());
        if (r != s) {
          con.coefficients[r] = 1;
          con.coefficients[s] = -1;
        }
        con.relation = Relation::kGreaterEqual;
        con.rhs = inst.base(a, r) - inst.base(a, s);
        lp.constraints.push_back(std::move(con));
      }
    }
  }
  return lp;
}

RentSolution SolveSecretiveRent(const RentInstance& inst) {
  RentSolution out;
  out.bijections = ComputeRoomRemovalMatchings(inst);
  LpSolution lp;
  try {
    lp = SolveMin(BuildRentLp(inst, out.bijections));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInfeasible) {
      throw Error(ErrorCode::kInternalInfeasibility,
                  "rent LP infeasible for max-weight matchings");
    }
    throw;
  }
  out.prices.prices = std::move(lp.x);
  out.lp_optimum = std::move(lp.optimum);
  return out;
}

int FindDespisedRoom(const RentInstance& inst, const BijectionFamily& family) {
  const int n = inst.n();
  for (int rho = 0; rho < n; ++rho) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      for (int a = 0; a < n - 1 && ok; ++a) {
        ok = inst.base(a, family.pi[k][a]) >= inst.base(a, rho);
      }
    }
    if (ok) return rho;
  }
  throw Error(ErrorCode::kNoDespisedRoom,
              "no room is weakly dispreferred under every matching");
}

}  // namespace secretive
