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

#include "secretive/allocation.h"

#include "secretive/error.h"

namespace secretive {

std::string ValidatePartition(const Partition& p, int n, int m) {
  if (p.size() != n) {
    return "partition has " + std::to_string(p.size()) + " bundles, expected " +
           std::to_string(n);
  }
  GoodSet seen;
  for (int i = 0; i < n; ++i) {
    if (p[i].Bound() > m) {
      return "bundle " + std::to_string(i) +
             " names a good >= " + std::to_string(m);
    }
    if (p[i].Intersects(seen)) {
      return "bundle " + std::to_string(i) + " overlaps an earlier bundle";
    }
    seen = seen | p[i];
  }
  if (seen != GoodSet::FirstN(m)) return "bundles do not cover every good";
  return "";
}

std::string ValidateBijectionFamily(const BijectionFamily& f, int n) {
  if (f.n() != n) {
    return "family has " + std::to_string(f.n()) + " bijections, expected " +
           std::to_string(n);
  }
  for (int k = 0; k < n; ++k) {
    const auto& pi = f.pi[k];
    if (static_cast<int>(pi.size()) != n - 1) {
      return "bijection " + std::to_string(k) + " has wrong length";
    }
    std::vector<char> used(n, 0);
    for (int a = 0; a < n - 1; ++a) {
      const int b = pi[a];
      if (b < 0 || b >= n) {
        return "bijection " + std::to_string(k) + " maps agent " +
               std::to_string(a) + " out of range";
      }
      if (b == k) {
        return "bijection " + std::to_string(k) + " uses the chosen bundle";
      }
      if (used[b]) {
        return "bijection " + std::to_string(k) + " is not injective";
      }
      used[b] = 1;
    }
  }
  return "";
}

BijectionFamily BackupToBijections(const BackupMap& backup, int n) {
  const auto& sigma = backup.sigma;
  if (n < 2 || static_cast<int>(sigma.size()) != n - 1) {
    throw Error(ErrorCode::kInvalidBackupMap,
                "backup map must have n-1 entries");
  }
  for (int i = 0; i < n - 1; ++i) {
    if (sigma[i] <= i || sigma[i] >= n) {
      throw Error(ErrorCode::kInvalidBackupMap,
                  "sigma(" + std::to_string(i) + ") = " +
                      std::to_string(sigma[i]) + " is not a later bundle");
    }
  }
  BijectionFamily family;
  family.pi.resize(n);
  for (int k = 0; k < n; ++k) {
    std::vector<int>& pi = family.pi[k];
    pi.resize(n - 1);
    for (int i = 0; i < n - 1; ++i) pi[i] = i;
    // The path k -> sigma(k) -> ... ends at n-1, which is not a position.
    for (int v = k; v != n - 1; v = sigma[v]) pi[v] = sigma[v];
  }
  return family;
}

BijectionFamily RelabelAgents(const BijectionFamily& by_position,
                              std::span<const int> owner) {
  BijectionFamily out;
  out.pi.resize(by_position.pi.size());
  for (std::size_t k = 0; k < by_position.pi.size(); ++k) {
    const auto& src = by_position.pi[k];
    out.pi[k].assign(src.size(), -1);
    for (std::size_t i = 0; i < src.size(); ++i) out.pi[k][owner[i]] = src[i];
  }
  return out;
}

}  // namespace secretive
