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
// Set-function valuations over indivisible goods.
//
// A ValuationOracle is an immutable value: copying it is cheap (the surrogate
// form shares its base) and it is safe to evaluate from several threads.
//

#ifndef SECRETIVE_VALUATION_H_
#define SECRETIVE_VALUATION_H_

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "secretive/good_set.h"
#include "secretive/rational.h"

namespace secretive {

class ValuationOracle;

struct AdditiveValuation {
  std::vector<Rat> weights;  // one per good, all >= 0
};

// values[mask] is the value of the set encoded by `mask`.
struct TableValuation {
  int num_goods = 0;
  std::vector<Rat> values;  // size 2^num_goods
};

// Weighted coverage: a bundle is worth the total weight of the universe
// elements covered by at least one of its goods.
struct CoverageValuation {
  std::vector<Rat> universe_weights;
  std::vector<std::vector<int>> covers;  // covers[g] = elements covered by g
};

// Capped-marginal surrogate of a base valuation: the marginal contribution of
// `special_good` is clipped at `cap`; every other set is valued as before.
struct SurrogateValuation {
  std::shared_ptr<const ValuationOracle> base;
  int special_good = 0;
  Rat cap;
};

class ValuationOracle {
 public:
  enum class Kind { kAdditive, kTable, kCoverage, kSurrogate };

  static ValuationOracle Additive(std::vector<Rat> weights);
  static ValuationOracle Table(int num_goods, std::vector<Rat> values);
  static ValuationOracle Coverage(std::vector<Rat> universe_weights,
                                  std::vector<std::vector<int>> covers);
  static ValuationOracle Surrogate(ValuationOracle base, int special_good,
                                   Rat cap);

  Kind kind() const { return static_cast<Kind>(repr_.index()); }
  int num_goods() const { return num_goods_; }

  // Throws Error(kInvalidSubset) when `goods` names an index >= num_goods().
  Rat Value(const GoodSet& goods) const;
  Rat Value(std::initializer_list<int> goods) const {
    return Value(GoodSet(goods));
  }
  Rat SingletonValue(int good) const { return Value(GoodSet{good}); }

  const AdditiveValuation* additive() const {
    return std::get_if<AdditiveValuation>(&repr_);
  }
  const TableValuation* table() const {
    return std::get_if<TableValuation>(&repr_);
  }
  const CoverageValuation* coverage() const {
    return std::get_if<CoverageValuation>(&repr_);
  }
  const SurrogateValuation* surrogate() const {
    return std::get_if<SurrogateValuation>(&repr_);
  }

 private:
  using Repr = std::variant<AdditiveValuation, TableValuation,
                            CoverageValuation, SurrogateValuation>;

  ValuationOracle(Repr repr, int num_goods)
      : repr_(std::move(repr)), num_goods_(num_goods) {}

  Rat ValueUnchecked(const GoodSet& goods) const;

  Repr repr_;
  int num_goods_ = 0;
};

// Values of every subset of `goods`, indexed by a local mask whose bit i
// stands for the i-th smallest member of `goods`. Requires |goods| <= 24.
std::vector<Rat> TabulateSubsets(const ValuationOracle& v,
                                 const GoodSet& goods);

// Structural checks. Exhaustive when num_goods() <= exhaustive_limit; above
// that, `samples` random chains/pairs drawn with `seed` are tested.
bool IsNonnegativeAndMonotone(const ValuationOracle& v,
                              int exhaustive_limit = 12, int samples = 2000,
                              std::uint64_t seed = 1);
bool IsSubmodular(const ValuationOracle& v, int exhaustive_limit = 10,
                  int samples = 2000, std::uint64_t seed = 1);

}  // namespace secretive

#endif  // SECRETIVE_VALUATION_H_
