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

#include "secretive/valuation.h"

#include <bit>
#include <random>
#include <string>

#include "secretive/error.h"

namespace secretive {
namespace {

constexpr int kMaxTableGoods = 16;
constexpr int kMaxTabulateGoods = 24;

[[noreturn]] void Invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidInstance, msg);
}

GoodSet FromLocalMask(const std::vector<int>& members, std::uint64_t mask) {
  GoodSet s;
  while (mask != 0) {
    s.Insert(members[std::countr_zero(mask)]);
    mask &= mask - 1;
  }
  return s;
}

GoodSet RandomSubset(std::mt19937_64& rng, int m) {
  GoodSet s;
  std::bernoulli_distribution coin(0.5);
  for (int g = 0; g < m; ++g) {
    if (coin(rng)) s.Insert(g);
  }
  return s;
}

}  // namespace

ValuationOracle ValuationOracle::Additive(std::vector<Rat> weights) {
  for (std::size_t g = 0; g < weights.size(); ++g) {
    if (weights[g].Sign() < 0) {
      Invalid("additive weight of good " + std::to_string(g) + " is negative");
    }
  }
  const int m = static_cast<int>(weights.size());
  return ValuationOracle(AdditiveValuation{std::move(weights)}, m);
}

ValuationOracle ValuationOracle::Table(int num_goods, std::vector<Rat> values) {
  if (num_goods < 0 || num_goods > kMaxTableGoods) {
    Invalid("table valuation supports 0.." + std::to_string(kMaxTableGoods) +
            " goods");
  }
  const std::size_t size = std::size_t{1} << num_goods;
  if (values.size() != size) {
    Invalid("table valuation over " + std::to_string(num_goods) +
            " goods needs " + std::to_string(size) + " values");
  }
  if (!values[0].IsZero()) Invalid("table valuation of the empty set is not 0");
  for (std::size_t mask = 0; mask < size; ++mask) {
    if (values[mask].Sign() < 0) {
      Invalid("table value at mask " + std::to_string(mask) + " is negative");
    }
    for (int g = 0; g < num_goods; ++g) {
      const std::size_t bit = std::size_t{1} << g;
      if ((mask & bit) == 0 && values[mask | bit] < values[mask]) {
        Invalid("table valuation is not monotone at mask " +
                std::to_string(mask) + " + good " + std::to_string(g));
      }
    }
  }
  return ValuationOracle(TableValuation{num_goods, std::move(values)},
                         num_goods);
}

ValuationOracle ValuationOracle::Coverage(
    std::vector<Rat> universe_weights, std::vector<std::vector<int>> covers) {
  for (std::size_t e = 0; e < universe_weights.size(); ++e) {
    if (universe_weights[e].Sign() < 0) {
      Invalid("coverage weight of element " + std::to_string(e) +
              " is negative");
    }
  }
  const int universe = static_cast<int>(universe_weights.size());
  for (std::size_t g = 0; g < covers.size(); ++g) {
    for (int e : covers[g]) {
      if (e < 0 || e >= universe) {
        Invalid("good " + std::to_string(g) + " covers unknown element " +
                std::to_string(e));
      }
    }
  }
  const int m = static_cast<int>(covers.size());
  return ValuationOracle(
      CoverageValuation{std::move(universe_weights), std::move(covers)}, m);
}

ValuationOracle ValuationOracle::Surrogate(ValuationOracle base,
                                           int special_good, Rat cap) {
  if (special_good < 0 || special_good >= base.num_goods()) {
    Invalid("surrogate special good out of range");
  }
  if (cap.Sign() <= 0) Invalid("surrogate cap must be positive");
  const int m = base.num_goods();
  return ValuationOracle(
      SurrogateValuation{
          std::make_shared<const ValuationOracle>(std::move(base)),
          special_good, std::move(cap)},
      m);
}

Rat ValuationOracle::Value(const GoodSet& goods) const {
  if (goods.Bound() > num_goods_) {
    throw Error(ErrorCode::kInvalidSubset,
                "good index " + std::to_string(goods.Bound() - 1) +
                    " out of range for " + std::to_string(num_goods_) +
                    " goods");
  }
  return ValueUnchecked(goods);
}

Rat ValuationOracle::ValueUnchecked(const GoodSet& goods) const {
  struct Visitor {
    const GoodSet& s;

    Rat operator()(const AdditiveValuation& v) const {
      Rat total;
      for (int g : s.Elements()) total += v.weights[g];
      return total;
    }
    Rat operator()(const TableValuation& v) const {
      return v.values[s.ToMask()];
    }
    Rat operator()(const CoverageValuation& v) const {
      std::vector<char> hit(v.universe_weights.size(), 0);
      Rat total;
      for (int g : s.Elements()) {
        for (int e : v.covers[g]) {
          if (!hit[e]) {
            hit[e] = 1;
            total += v.universe_weights[e];
          }
        }
      }
      return total;
    }
    Rat operator()(const SurrogateValuation& v) const {
      if (!s.Contains(v.special_good)) return v.base->ValueUnchecked(s);
      const Rat rest = v.base->ValueUnchecked(s.Without(v.special_good));
      const Rat marginal = v.base->ValueUnchecked(s) - rest;
      return rest + Min(v.cap, marginal);
    }
  };
  return std::visit(Visitor{goods}, repr_);
}

std::vector<Rat> TabulateSubsets(const ValuationOracle& v,
                                 const GoodSet& goods) {
  const std::vector<int> members = goods.Elements();
  const int k = static_cast<int>(members.size());
  if (k > kMaxTabulateGoods) {
    throw Error(ErrorCode::kTooLarge,
                "cannot tabulate " + std::to_string(k) + " goods");
  }
  if (goods.Bound() > v.num_goods()) {
    throw Error(ErrorCode::kInvalidSubset, "tabulated goods out of range");
  }
  const std::uint64_t size = std::uint64_t{1} << k;
  std::vector<Rat> table(size);
  if (const auto* add = v.additive()) {
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      const int low = std::countr_zero(mask);
      table[mask] = table[mask & (mask - 1)] + add->weights[members[low]];
    }
    return table;
  }
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    table[mask] = v.Value(FromLocalMask(members, mask));
  }
  return table;
}

bool IsNonnegativeAndMonotone(const ValuationOracle& v, int exhaustive_limit,
                              int samples, std::uint64_t seed) {
  const int m = v.num_goods();
  if (v.Value(GoodSet{}).Sign() < 0) return false;
  if (m <= exhaustive_limit) {
    const std::vector<Rat> table = TabulateSubsets(v, GoodSet::FirstN(m));
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      if (table[mask].Sign() < 0) return false;
      for (int g = 0; g < m; ++g) {
        const std::uint64_t bit = std::uint64_t{1} << g;
        if ((mask & bit) == 0 && table[mask | bit] < table[mask]) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int i = 0; i < samples; ++i) {
    const GoodSet s = RandomSubset(rng, m);
    const Rat base = v.Value(s);
    if (base.Sign() < 0) return false;
    if (v.Value(s.With(pick(rng))) < base) return false;
  }
  return true;
}

bool IsSubmodular(const ValuationOracle& v, int exhaustive_limit, int samples,
                  std::uint64_t seed) {
  // Local form: f(S+i) + f(S+j) >= f(S+i+j) + f(S) for i, j outside S, which
  // is equivalent to the lattice inequality over all pairs.
  const int m = v.num_goods();
  if (m <= exhaustive_limit) {
    const std::vector<Rat> t = TabulateSubsets(v, GoodSet::FirstN(m));
    for (std::uint64_t s = 0; s < t.size(); ++s) {
      for (int i = 0; i < m; ++i) {
        const std::uint64_t bi = std::uint64_t{1} << i;
        if (s & bi) continue;
        for (int j = i + 1; j < m; ++j) {
          const std::uint64_t bj = std::uint64_t{1} << j;
          if (s & bj) continue;
          if (t[s | bi] + t[s | bj] < t[s | bi | bj] + t[s]) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int n = 0; n < samples; ++n) {
    GoodSet s = RandomSubset(rng, m);
    const int i = pick(rng);
    const int j = pick(rng);
    if (i == j) continue;
    s.Erase(i);
    s.Erase(j);
    if (v.Value(s.With(i)) + v.Value(s.With(j)) <
        v.Value(s.With(i).With(j)) + v.Value(s)) {
      return false;
    }
  }
  return true;
}

}  // namespace secretive
