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

#include "secretive/mms.h"

#include <algorithm>
#include <string>
#include <utility>

#include "secretive/error.h"

namespace secretive {
namespace {

void CheckBruteForceSize(int goods, int parts) {
  if (goods > kMaxBruteForceGoods || parts > kMaxBruteForceParts) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(goods) + " goods into " + std::to_string(parts) +
                    " parts exceeds the brute-force budget");
  }
}

void CheckThresholds(const GoodsInstance& inst,
                     std::span<const Rat> thresholds) {
  if (static_cast<int>(thresholds.size()) != inst.num_known()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected one threshold per known agent");
  }
  for (const Rat& t : thresholds) {
    if (t.Sign() < 0) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "thresholds must be nonnegative");
    }
  }
}

// Restricted-growth enumeration of set partitions into exactly `parts`
// blocks over local good indices.
class MmsSearch {
 public:
  MmsSearch(const std::vector<Rat>& table, int num_goods, int parts)
      : table_(table), k_(num_goods), parts_(parts), blocks_(parts, 0) {}

  Rat Run() {
    Visit(0, 0);
    return best_;
  }

 private:
  void Visit(int g, int used) {
    if (k_ - g < parts_ - used) return;
    if (g == k_) {
      Rat worst = table_[blocks_[0]];
      for (int b = 1; b < parts_; ++b) worst = Min(worst, table_[blocks_[b]]);
      if (worst > best_) best_ = worst;
      return;
    }
    const int limit = std::min(used + 1, parts_);
    for (int b = 0; b < limit; ++b) {
      blocks_[b] |= 1u << g;
      Visit(g + 1, std::max(used, b + 1));
      blocks_[b] &= ~(1u << g);
    }
  }

  const std::vector<Rat>& table_;
  int k_;
  int parts_;
  std::vector<unsigned> blocks_;
  Rat best_;
};

// min_a v_a(Q_a) / mu_a over agents with mu_a > 0 (nullopt stands for
// +infinity), then min_a v_a(Q_a) over all agents.
struct Score {
  std::optional<Rat> ratio;
  Rat worst;
};

bool Better(const Score& a, const Score& b) {
  if (a.ratio != b.ratio) {
    if (!a.ratio) return true;
    return b.ratio && *a.ratio > *b.ratio;
  }
  return a.worst > b.worst;
}

class AllocationSearch {
 public:
  AllocationSearch(std::vector<std::vector<Rat>> tables, std::vector<Rat> mu,
                   int num_goods)
      : tables_(std::move(tables)),
        mu_(std::move(mu)),
        k_(num_goods),
        masks_(tables_.size(), 0),
        owner_(num_goods, 0) {}

  std::vector<int> Run() {
    Visit(0);
    return best_owner_;
  }

 private:
  void Visit(int g) {
    if (g == k_) {
      Score score;
      for (std::size_t a = 0; a < tables_.size(); ++a) {
        const Rat& value = tables_[a][masks_[a]];
        if (a == 0 || value < score.worst) score.worst = value;
        if (mu_[a].IsZero()) continue;
        Rat r = value / mu_[a];
        if (!score.ratio || r < *score.ratio) score.ratio = std::move(r);
      }
      if (!have_best_ || Better(score, best_score_)) {
        have_best_ = true;
        best_score_ = std::move(score);
        best_owner_ = owner_;
      }
      return;
    }
    for (std::size_t a = 0; a < tables_.size(); ++a) {
      masks_[a] |= 1u << g;
      owner_[g] = static_cast<int>(a);
      Visit(g + 1);
      masks_[a] &= ~(1u << g);
    }
  }

  std::vector<std::vector<Rat>> tables_;
  std::vector<Rat> mu_;
  int k_;
  std::vector<unsigned> masks_;
  std::vector<int> owner_;
  bool have_best_ = false;
  Score best_score_;
  std::vector<int> best_owner_;
};

MmsSolution Assemble(int n, std::vector<GoodSet> bundles,
                     std::vector<int> order, std::vector<int> sigma, Rat ratio,
                     std::span<const Rat> thresholds) {
  MmsSolution out;
  out.partition.bundles = std::move(bundles);
  out.order = std::move(order);
  out.sigma.sigma = std::move(sigma);
  out.bijections = RelabelAgents(BackupToBijections(out.sigma, n), out.order);
  out.ratio = std::move(ratio);
  out.thresholds.assign(thresholds.begin(), thresholds.end());
  return out;
}

}  // namespace

Rat BruteForceMms(const ValuationOracle& v, const GoodSet& goods, int parts) {
  if (parts < 1) {
    throw Error(ErrorCode::kPreconditionViolated, "need at least one part");
  }
  const int k = goods.Size();
  CheckBruteForceSize(k, parts);
  if (k < parts) return Rat(0);
  const std::vector<Rat> table = TabulateSubsets(v, goods);
  return MmsSearch(table, k, parts).Run();
}

Partition BruteForceMmsAllocation(std::span<const ValuationOracle> agents,
                                  const GoodSet& goods) {
  const int num_agents = static_cast<int>(agents.size());
  if (num_agents == 0) {
    throw Error(ErrorCode::kPreconditionViolated, "no agents to allocate to");
  }
  const int k = goods.Size();
  CheckBruteForceSize(k, num_agents);
  long long count = 1;
  for (int g = 0; g < k; ++g) {
    count *= num_agents;
    if (count > kMaxBruteForceAssignments) {
      throw Error(ErrorCode::kTooLarge,
                  "too many assignments for brute-force allocation");
    }
  }

  std::vector<std::vector<Rat>> tables;
  std::vector<Rat> mu;
  for (const ValuationOracle& v : agents) {
    tables.push_back(TabulateSubsets(v, goods));
    mu.push_back(k < num_agents
                     ? Rat(0)
                     : MmsSearch(tables.back(), k, num_agents).Run());
  }
  const std::vector<int> owner =
      AllocationSearch(std::move(tables), std::move(mu), k).Run();

  const std::vector<int> elems = goods.Elements();
  Partition out = Partition::Empty(num_agents);
  for (int i = 0; i < k; ++i) out.bundles[owner[i]].Insert(elems[i]);
  return out;
}

Mms19Result SecretiveMms19(const GoodsInstance& inst,
                           std::span<const Rat> thresholds,
                           const MmsSubroutine& subroutine) {
  CheckThresholds(inst, thresholds);
  const int n = inst.n();
  const int m = inst.m();
  std::vector<Rat> kappa(n - 1);
  std::vector<std::vector<Rat>> single(n - 1, std::vector<Rat>(m));
  for (int a = 0; a < n - 1; ++a) {
    kappa[a] = thresholds[a] / Rat(19);
    for (int g = 0; g < m; ++g)
      single[a][g] = inst.valuation(a).SingletonValue(g);
  }
  auto high_goods = [&](int a, const GoodSet& goods) {
    std::vector<int> high;
    for (int g : goods.Elements()) {
      if (single[a][g] >= kappa[a]) high.push_back(g);
    }
    return high;
  };

  GoodSet remaining = GoodSet::FirstN(m);
  std::vector<char> active(n - 1, 1);
  std::vector<int> order;
  std::vector<GoodSet> bundles;
  std::vector<int> second_high;
  while (true) {
    bool reserved = false;
    for (int a = 0; a < n - 1 && !reserved; ++a) {
      if (!active[a]) continue;
      const std::vector<int> high = high_goods(a, remaining);
      if (high.size() < 2) continue;
      order.push_back(a);
      bundles.push_back(GoodSet{high[0]});
      second_high.push_back(high[1]);
      remaining.Erase(high[0]);
      active[a] = 0;
      reserved = true;
    }
    if (!reserved) break;
  }
  const int num_reserved = static_cast<int>(order.size());

  std::vector<int> rest;
  std::vector<ValuationOracle> surrogate;
  for (int a = 0; a < n - 1; ++a) {
    if (!active[a]) continue;
    rest.push_back(a);
    const std::vector<int> high = high_goods(a, remaining);
    if (high.size() == 1 && kappa[a].Sign() > 0) {
      surrogate.push_back(
          ValuationOracle::Surrogate(inst.valuation(a), high[0], kappa[a]));
    } else {
      surrogate.push_back(inst.valuation(a));
    }
  }

  GoodSet leftover = remaining;
  std::vector<int> sigma(n - 1, n - 1);
  if (!rest.empty()) {
    Partition q;
    try {
      q = subroutine(surrogate, remaining);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      throw Error(ErrorCode::kSubroutineBudgetExceeded, e.what());
    }
    const int r = static_cast<int>(rest.size());
    GoodSet covered;
    bool valid = q.size() == r;
    for (int i = 0; valid && i < r; ++i) {
      valid = q[i].IsSubsetOf(remaining) && !q[i].Intersects(covered);
      covered = covered | q[i];
    }
    if (!valid || covered != remaining) {
      throw Error(ErrorCode::kInternal,
                  "subroutine did not partition the remaining goods");
    }

    const Rat three(3);
    for (int i = 0; i < r; ++i) {
      const int a = rest[i];
      const Rat bar = three * kappa[a];
      if (inst.valuation(a).Value(q[i]) < bar ||
          surrogate[i].Value(q[i]) < bar) {
        return Mms19Result{std::nullopt, a};
      }
    }

    leftover = GoodSet();
    const Rat two(2);
    for (int i = 0; i < r; ++i) {
      const int a = rest[i];
      GoodSet taken;
      GoodSet kept;
      for (int g : q[i].Elements()) {
        taken.Insert(g);
        if (surrogate[i].Value(taken) >= two * kappa[a]) {
          kept = taken.Without(g);
          break;
        }
      }
      order.push_back(a);
      bundles.push_back(kept);
      leftover = leftover | (q[i] - kept);
    }
  }
  bundles.push_back(leftover);

  for (int i = 0; i < num_reserved; ++i) {
    int holder = -1;
    for (int j = 0; j < n; ++j) {
      if (bundles[j].Contains(second_high[i])) holder = j;
    }
    if (holder <= i) {
      throw Error(ErrorCode::kInternal, "backup good is not in a later bundle");
    }
    sigma[i] = holder;
  }
  return Mms19Result{Assemble(n, std::move(bundles), std::move(order),
                              std::move(sigma), Rat(1, 19), thresholds),
                     -1};
}

std::vector<Rat> ExactMmsThresholds(const GoodsInstance& inst) {
  const GoodSet all = GoodSet::FirstN(inst.m());
  std::vector<Rat> mu;
  mu.reserve(inst.num_known());
  for (int a = 0; a < inst.num_known(); ++a) {
    mu.push_back(BruteForceMms(inst.valuation(a), all, inst.n()));
  }
  return mu;
}

MmsSolution ThresholdSearch(const GoodsInstance& inst, int rounds,
                            const MmsSubroutine& subroutine) {
  if (rounds < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "rounds must be >= 0");
  }
  const int known = inst.num_known();
  const GoodSet all = GoodSet::FirstN(inst.m());
  std::vector<Rat> lo(known), hi(known), tolerance(known);
  Rat scale(1);
  for (int i = 0; i < rounds; ++i) scale *= Rat(2);
  for (int a = 0; a < known; ++a) {
    hi[a] = inst.valuation(a).Value(all);
    tolerance[a] = hi[a] / scale;
  }

  Mms19Result best = SecretiveMms19(inst, lo, subroutine);
  if (!best.ok()) {
    throw Error(ErrorCode::kInternal, "zero thresholds were flagged");
  }
  const long long max_runs = static_cast<long long>(known) * (rounds + 1) + 1;
  for (long long run = 0; run < max_runs; ++run) {
    std::vector<Rat> tau(known);
    bool any_wide = false;
    for (int a = 0; a < known; ++a) {
      if (hi[a] - lo[a] > tolerance[a]) {
        any_wide = true;
        tau[a] = (lo[a] + hi[a]) / Rat(2);
      } else {
        tau[a] = lo[a];
      }
    }
    if (!any_wide) break;
    Mms19Result attempt = SecretiveMms19(inst, tau, subroutine);
    if (attempt.ok()) {
      lo = tau;
      best = std::move(attempt);
      continue;
    }
    const int a = attempt.flagged_agent;
    if (tau[a] == lo[a]) {
      // A settled agent was flagged; reopen its interval below.
      hi[a] = lo[a];
      lo[a] = Rat(0);
    } else {
      hi[a] = tau[a];
    }
  }
  return std::move(*best.solution);
}

MmsSolution SecretiveMms19Exact(const GoodsInstance& inst,
                                const MmsSubroutine& subroutine) {
  const std::vector<Rat> mu = ExactMmsThresholds(inst);
  Mms19Result result = SecretiveMms19(inst, mu, subroutine);
  if (!result.ok()) {
    throw Error(ErrorCode::kInternal,
                "agent " + std::to_string(result.flagged_agent) +
                    " flagged at its exact maximin share");
  }
  return std::move(*result.solution);
}

MmsSolution AdditiveHalfMms(const GoodsInstance& inst,
                            std::span<const Rat> thresholds) {
  CheckThresholds(inst, thresholds);
  const int n = inst.n();
  const int m = inst.m();
  std::vector<const std::vector<Rat>*> w(n - 1);
  std::vector<Rat> half(n - 1);
  for (int a = 0; a < n - 1; ++a) {
    const AdditiveValuation* add = inst.valuation(a).additive();
    if (add == nullptr) {
      throw Error(ErrorCode::kInvalidOracleKind,
                  "agent " + std::to_string(a) + " is not additive");
    }
    w[a] = &add->weights;
    half[a] = thresholds[a] / Rat(2);
  }

  std::vector<char> active(n - 1, 1);
  std::vector<int> goods(m);
  for (int g = 0; g < m; ++g) goods[g] = g;
  std::vector<int> order;
  std::vector<GoodSet> bundles;

  while (true) {
    int pick_agent = -1;
    std::size_t pick_pos = 0;
    for (int a = 0; a < n - 1 && pick_agent < 0; ++a) {
      if (!active[a]) continue;
      for (std::size_t p = 0; p < goods.size(); ++p) {
        if ((*w[a])[goods[p]] >= half[a]) {
          pick_agent = a;
          pick_pos = p;
          break;
        }
      }
    }
    if (pick_agent < 0) break;
    order.push_back(pick_agent);
    bundles.push_back(GoodSet{goods[pick_pos]});
    goods.erase(goods.begin() + pick_pos);
    active[pick_agent] = 0;
  }

  std::vector<int> knife_agents;
  for (int a = 0; a < n - 1; ++a) {
    if (active[a]) knife_agents.push_back(a);
  }
  while (!knife_agents.empty()) {
    int winner = -1;
    std::size_t winner_len = 0;
    for (int b : knife_agents) {
      Rat acc;
      std::size_t len = 0;
      while (acc < half[b] && len < goods.size()) acc += (*w[b])[goods[len++]];
      if (acc < half[b]) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "agent " + std::to_string(b) +
                        " cannot reach half its threshold; tau exceeds mu");
      }
      if (winner < 0 || len < winner_len) {
        winner = b;
        winner_len = len;
      }
    }
    GoodSet cut;
    for (std::size_t p = 0; p < winner_len; ++p) cut.Insert(goods[p]);
    goods.erase(goods.begin(), goods.begin() + winner_len);
    knife_agents.erase(
        std::find(knife_agents.begin(), knife_agents.end(), winner));
    for (int b : knife_agents) {
      const Rat value = inst.valuation(b).Value(cut);
      if (value > thresholds[b]) {
        throw Error(
            ErrorCode::kInternal,
            "knife bundle exceeds the threshold of agent " + std::to_string(b));
      }
    }
    order.push_back(winner);
    bundles.push_back(std::move(cut));
  }
  bundles.push_back(GoodSet::FromList(goods));

  std::vector<int> sigma(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    const int a = order[i];
    int j = i + 1;
    while (j < n && inst.valuation(a).Value(bundles[j]) < half[a]) ++j;
    if (j == n) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "no later bundle is worth half the threshold of agent " +
                      std::to_string(a));
    }
    sigma[i] = j;
  }
  return Assemble(n, std::move(bundles), std::move(order), std::move(sigma),
                  Rat(1, 2), thresholds);
}

}  // namespace secretive
