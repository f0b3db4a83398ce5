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

#include "secretive/verify.h"

#include <algorithm>
#include <string>
#include <utility>

#include "secretive/matching.h"
#include "secretive/mms.h"

namespace secretive {
namespace {

BoolMatrix WithoutColumn(const FairnessGraph& graph, int k) {
  BoolMatrix out(graph.rows(), graph.cols() - 1, 0);
  for (int a = 0; a < graph.rows(); ++a) {
    for (int i = 0, c = 0; i < graph.cols(); ++i) {
      if (i != k) out(a, c++) = graph(a, i);
    }
  }
  return out;
}

// Agents reachable from `root` by alternating paths; their neighbourhood in
// `g` is exactly the partners of the other members.
std::vector<int> HallViolator(const BoolMatrix& g,
                              const CardinalityMatching& mm, int root) {
  std::vector<char> in_set(g.rows(), 0);
  std::vector<int> stack = {root};
  in_set[root] = 1;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (int c = 0; c < g.cols(); ++c) {
      if (!g(a, c)) continue;
      const int b = mm.col_to_row[c];
      if (b >= 0 && !in_set[b]) {
        in_set[b] = 1;
        stack.push_back(b);
      }
    }
  }
  std::vector<int> s;
  for (int a = 0; a < g.rows(); ++a) {
    if (in_set[a]) s.push_back(a);
  }
  return s;
}

Verdict Malformed(std::string problem) {
  Verdict v;
  v.problem = std::move(problem);
  return v;
}

Rat Integral(const CakeValuation& v, const Rat& lo, const Rat& hi) {
  Rat total;
  for (std::size_t s = 0; s < v.densities.size(); ++s) {
    const Rat left = Max(lo, v.breakpoints[s]);
    const Rat right = Min(hi, v.breakpoints[s + 1]);
    if (left < right) total += v.densities[s] * (right - left);
  }
  return total;
}

std::vector<std::vector<Rat>> CakeValues(const CakeInstance& inst,
                                         const CakePartition& p) {
  std::vector<std::vector<Rat>> val(inst.num_known(),
                                    std::vector<Rat>(p.size()));
  for (int a = 0; a < inst.num_known(); ++a) {
    for (int i = 0; i < p.size(); ++i) {
      for (const Interval& iv : p[i]) {
        val[a][i] += Integral(inst.valuation(a), iv.lo, iv.hi);
      }
    }
  }
  return val;
}

}  // namespace

Verdict CheckSecretive(const FairnessGraph& graph) {
  const int n = graph.cols();
  if (n < 2 || graph.rows() != n - 1) {
    return Malformed("fairness graph must be (n-1) x n with n >= 2");
  }
  BijectionFamily family;
  for (int k = 0; k < n; ++k) {
    const BoolMatrix g = WithoutColumn(graph, k);
    const CardinalityMatching mm = MaxCardinalityMatching(g);
    if (mm.size < n - 1) {
      int root = 0;
      while (mm.row_to_col[root] >= 0) ++root;
      Verdict v;
      v.failing_choice = k;
      v.failing_subset = HallViolator(g, mm, root);
      return v;
    }
    std::vector<int> pi(n - 1);
    for (int a = 0; a < n - 1; ++a) {
      const int c = mm.row_to_col[a];
      pi[a] = c < k ? c : c + 1;
    }
    family.pi.push_back(std::move(pi));
  }
  Verdict v;
  v.ok = true;
  v.witness_bijections = std::move(family);
  return v;
}

bool FamilyRespectsGraph(const FairnessGraph& graph,
                         const BijectionFamily& family) {
  if (!ValidateBijectionFamily(family, graph.cols()).empty()) return false;
  for (int k = 0; k < family.n(); ++k) {
    for (int a = 0; a < graph.rows(); ++a) {
      if (!graph(a, family.pi[k][a])) return false;
    }
  }
  return true;
}

FairnessGraph RentFairnessGraph(const RentInstance& inst,
                                const PriceVector& p) {
  const int n = inst.n();
  FairnessGraph g(n - 1, n, 0);
  for (int a = 0; a < n - 1; ++a) {
    Rat best = inst.base(a, 0) - p.prices[0];
    for (int r = 1; r < n; ++r) best = Max(best, inst.base(a, r) - p.prices[r]);
    for (int r = 0; r < n; ++r) {
      g(a, r) = inst.base(a, r) - p.prices[r] == best ? 1 : 0;
    }
  }
  return g;
}

Verdict VerifySecretiveRent(const RentInstance& inst, const PriceVector& p) {
  if (static_cast<int>(p.prices.size()) != inst.n()) {
    return Malformed("expected " + std::to_string(inst.n()) + " prices");
  }
  return CheckSecretive(RentFairnessGraph(inst, p));
}

FairnessGraph Ef1FairnessGraph(const GoodsInstance& inst, const Partition& p) {
  const int n = inst.n();
  FairnessGraph g(n - 1, n, 0);
  for (int a = 0; a < n - 1; ++a) {
    const ValuationOracle& v = inst.valuation(a);
    std::vector<Rat> own(n);
    for (int i = 0; i < n; ++i) own[i] = v.Value(p[i]);
    for (int i = 0; i < n; ++i) {
      bool edge = true;
      for (int j = 0; j < n && edge; ++j) {
        if (own[i] >= own[j]) continue;
        bool rescued = false;
        for (int x : p[j].Elements()) {
          if (own[i] >= v.Value(p[j].Without(x))) {
            rescued = true;
            break;
          }
        }
        edge = rescued;
      }
      g(a, i) = edge ? 1 : 0;
    }
  }
  return g;
}

Verdict VerifySecretiveEf1(const GoodsInstance& inst, const Partition& p) {
  const std::string bad = ValidatePartition(p, inst.n(), inst.m());
  if (!bad.empty()) return Malformed(bad);
  return CheckSecretive(Ef1FairnessGraph(inst, p));
}

FairnessGraph EpsEfFairnessGraph(const CakeInstance& inst,
                                 const CakePartition& p, const Rat& eps) {
  const int n = inst.n();
  const auto val = CakeValues(inst, p);
  FairnessGraph g(n - 1, n, 0);
  for (int a = 0; a < n - 1; ++a) {
    const Rat top = *std::max_element(val[a].begin(), val[a].end());
    for (int i = 0; i < n; ++i) g(a, i) = val[a][i] >= top - eps ? 1 : 0;
  }
  return g;
}

Verdict VerifySecretiveEpsEf(const CakeInstance& inst, const CakePartition& p,
                             const Rat& eps) {
  const std::string bad = ValidateCakePartition(p, inst.n());
  if (!bad.empty()) return Malformed(bad);
  return CheckSecretive(EpsEfFairnessGraph(inst, p, eps));
}

FairnessGraph ProportionalFairnessGraph(const CakeInstance& inst,
                                        const CakePartition& p) {
  const int n = inst.n();
  const auto val = CakeValues(inst, p);
  const Rat share(1, n);
  FairnessGraph g(n - 1, n, 0);
  for (int a = 0; a < n - 1; ++a) {
    for (int i = 0; i < n; ++i) g(a, i) = val[a][i] >= share ? 1 : 0;
  }
  return g;
}

Verdict VerifySecretiveProportional(const CakeInstance& inst,
                                    const CakePartition& p) {
  const std::string bad = ValidateCakePartition(p, inst.n());
  if (!bad.empty()) return Malformed(bad);
  return CheckSecretive(ProportionalFairnessGraph(inst, p));
}

FairnessGraph MmsFairnessGraph(const GoodsInstance& inst, const Partition& p,
                               const Rat& ratio, std::span<const Rat> mu) {
  const int n = inst.n();
  FairnessGraph g(n - 1, n, 0);
  for (int a = 0; a < n - 1; ++a) {
    const Rat bar = ratio * mu[a];
    for (int i = 0; i < n; ++i) {
      g(a, i) = inst.valuation(a).Value(p[i]) >= bar ? 1 : 0;
    }
  }
  return g;
}

Verdict VerifySecretiveMms(const GoodsInstance& inst, const Partition& p,
                           const Rat& ratio,
                           std::optional<std::vector<Rat>> mu) {
  const std::string bad = ValidatePartition(p, inst.n(), inst.m());
  if (!bad.empty()) return Malformed(bad);
  if (!mu) {
    mu.emplace();
    const GoodSet all = GoodSet::FirstN(inst.m());
    for (int a = 0; a < inst.num_known(); ++a) {
      mu->push_back(BruteForceMms(inst.valuation(a), all, inst.n()));
    }
  }
  if (static_cast<int>(mu->size()) != inst.num_known()) {
    return Malformed("expected one maximin share per known agent");
  }
  return CheckSecretive(MmsFairnessGraph(inst, p, ratio, *mu));
}

}  // namespace secretive
