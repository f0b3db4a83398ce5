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

#include "secretive/ef1.h"

#include <optional>
#include <string>
#include <unordered_map>

#include "secretive/error.h"
#include "secretive/matching.h"

namespace secretive {
namespace {

// Memoized bundle values. Bundles only grow, so most lookups repeat.
class BundleValues {
 public:
  explicit BundleValues(const GoodsInstance& inst)
      : inst_(inst), cache_(inst.num_known()) {}

  const Rat& Get(int agent, const GoodSet& s) {
    auto& m = cache_[agent];
    auto it = m.find(s);
    if (it == m.end()) it = m.emplace(s, inst_.valuation(agent).Value(s)).first;
    return it->second;
  }

 private:
  const GoodsInstance& inst_;
  std::vector<std::unordered_map<GoodSet, Rat>> cache_;
};

// Largest value agent a may hold without EF1-envying bundle j, i.e.
// min_g v_a(P_j \ {g}); nullopt for an empty bundle (never envied).
std::optional<Rat> EnvyBar(BundleValues& values, int agent,
                           const GoodSet& bundle) {
  std::optional<Rat> bar;
  for (int g : bundle.Elements()) {
    const Rat& v = values.Get(agent, bundle.Without(g));
    if (!bar || v < *bar) bar = v;
  }
  return bar;
}

Ef1Graph BuildGraph(const Partition& p, const GoodsInstance& inst,
                    const Rat& penalty, BundleValues& values) {
  const int n = inst.n();
  Ef1Graph g{WeightMatrix(n - 1, n), BoolMatrix(n - 1, n, 0)};
  for (int a = 0; a < n - 1; ++a) {
    std::optional<Rat> need;
    for (int j = 0; j < n; ++j) {
      auto bar = EnvyBar(values, a, p[j]);
      if (bar && (!need || *need < *bar)) need = std::move(bar);
    }
    for (int i = 0; i < n; ++i) {
      const Rat& own = values.Get(a, p[i]);
      const bool ok = !need || own >= *need;
      g.ef1(a, i) = ok ? 1 : 0;
      g.weights(a, i) = ok ? own : penalty;
    }
  }
  return g;
}

int DespisedBundle(const Partition& p, int n, const BijectionFamily& family,
                   BundleValues& values) {
  for (int rho = 0; rho < n; ++rho) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      for (int a = 0; a < n - 1 && ok; ++a) {
        ok = values.Get(a, p[family.pi[k][a]]) >= values.Get(a, p[rho]);
      }
    }
    if (ok) return rho;
  }
  throw Error(ErrorCode::kNoDespisedBundle,
              "no bundle is weakly dispreferred under every matching");
}

// Every matched edge must be EF1; returns the number of edges checked.
int RequireEf1Matchings(const Ef1Graph& graph, const BijectionFamily& family,
                        const char* when) {
  int checked = 0;
  for (int k = 0; k < family.n(); ++k) {
    for (int a = 0; a < static_cast<int>(family.pi[k].size()); ++a) {
      ++checked;
      if (!graph.ef1(a, family.pi[k][a])) {
        throw Error(ErrorCode::kNonEf1Matching,
                    std::string(when) + ": agent " + std::to_string(a) +
                        " matched to non-EF1 bundle " +
                        std::to_string(family.pi[k][a]) + " for choice " +
                        std::to_string(k));
      }
    }
  }
  return checked;
}

}  // namespace

bool IsEf1Edge(int agent, int bundle, const Partition& p,
               const GoodsInstance& inst) {
  const ValuationOracle& v = inst.valuation(agent);
  const Rat own = v.Value(p[bundle]);
  for (int j = 0; j < p.size(); ++j) {
    if (p[j].Empty()) continue;
    bool some_removal_works = false;
    for (int g : p[j].Elements()) {
      if (own >= v.Value(p[j].Without(g))) {
        some_removal_works = true;
        break;
      }
    }
    if (!some_removal_works) return false;
  }
  return true;
}

Rat Ef1Penalty(const GoodsInstance& inst) {
  const GoodSet all = GoodSet::FirstN(inst.m());
  Rat best;
  for (int a = 0; a < inst.num_known(); ++a) {
    best = Max(best, inst.valuation(a).Value(all));
  }
  return -(Rat(inst.m()) * best);
}

Ef1Graph BuildEf1Graph(const Partition& p, const GoodsInstance& inst) {
  BundleValues values(inst);
  return BuildGraph(p, inst, Ef1Penalty(inst), values);
}

BijectionFamily MatchAroundEachBundle(const Ef1Graph& graph) {
  BijectionFamily family;
  const int n = graph.weights.cols();
  family.pi.reserve(n);
  for (int k = 0; k < n; ++k) {
    family.pi.push_back(
        MaxWeightMatchingSkippingColumn(graph.weights, k).assignment);
  }
  return family;
}

int FindDespisedBundle(const Partition& p, const GoodsInstance& inst,
                       const BijectionFamily& family) {
  BundleValues values(inst);
  return DespisedBundle(p, inst.n(), family, values);
}

Ef1Solution AllocateSecretiveEf1(const GoodsInstance& inst, Ef1Trace* trace) {
  const int n = inst.n();
  const Rat penalty = Ef1Penalty(inst);
  BundleValues values(inst);

  Ef1Solution out;
  out.partition = Partition::Empty(n);
  Ef1Graph graph = BuildGraph(out.partition, inst, penalty, values);
  out.bijections = MatchAroundEachBundle(graph);
  int checked = RequireEf1Matchings(graph, out.bijections, "initial");

  for (int good = 0; good < inst.m(); ++good) {
    const int rho = DespisedBundle(out.partition, n, out.bijections, values);
    if (trace) trace->despised.push_back(rho);
    out.partition.bundles[rho].Insert(good);

    graph = BuildGraph(out.partition, inst, penalty, values);
    // The previous matchings must survive the insertion...
    checked += RequireEf1Matchings(graph, out.bijections, "after insertion");
    // ...so the new max-weight matchings avoid every penalized edge.
    out.bijections = MatchAroundEachBundle(graph);
    checked += RequireEf1Matchings(graph, out.bijections, "rematch");
  }
  if (trace) trace->matched_edges_checked += checked;
  return out;
}

}  // namespace secretive
