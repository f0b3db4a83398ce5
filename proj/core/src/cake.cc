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

#include "secretive/cake.h"

#include <algorithm>
#include <string>
#include <utility>

#include "secretive/ef1.h"
#include "secretive/error.h"
#include "secretive/instance.h"
#include "secretive/valuation.h"

namespace secretive {
namespace {

void CheckInterval(const Rat& lo, const Rat& hi) {
  if (lo.Sign() < 0 || hi > Rat(1) || hi < lo) {
    throw Error(ErrorCode::kOutOfRange, "interval [" + lo.ToString() + ", " +
                                            hi.ToString() +
                                            "] is not inside [0, 1]");
  }
}

}  // namespace

CakeValuation CakeValuation::Uniform() {
  return CakeValuation{{Rat(0), Rat(1)}, {Rat(1)}};
}

std::string ValidateCakeValuation(const CakeValuation& v) {
  const auto& b = v.breakpoints;
  if (b.size() < 2) return "need at least two breakpoints";
  if (v.densities.size() + 1 != b.size()) {
    return "need exactly one density per segment";
  }
  if (!b.front().IsZero()) return "first breakpoint must be 0";
  if (b.back() != Rat(1)) return "last breakpoint must be 1";
  Rat total;
  for (std::size_t i = 0; i < v.densities.size(); ++i) {
    if (!(b[i] < b[i + 1])) return "breakpoints must be strictly increasing";
    if (v.densities[i].Sign() < 0) return "densities must be nonnegative";
    total += v.densities[i] * (b[i + 1] - b[i]);
  }
  if (total != Rat(1)) {
    return "valuation of the whole cake is " + total.ToString() + ", not 1";
  }
  return "";
}

CakeInstance::CakeInstance(int n, std::vector<CakeValuation> valuations)
    : n_(n), valuations_(std::move(valuations)) {
  if (n < 2) throw Error(ErrorCode::kInvalidInstance, "need n >= 2");
  if (static_cast<int>(valuations_.size()) != n - 1) {
    throw Error(ErrorCode::kInvalidInstance,
                "expected " + std::to_string(n - 1) + " valuations, got " +
                    std::to_string(valuations_.size()));
  }
  for (int a = 0; a < n - 1; ++a) {
    const std::string problem = ValidateCakeValuation(valuations_[a]);
    if (!problem.empty()) {
      throw Error(ErrorCode::kInvalidInstance,
                  "agent " + std::to_string(a) + ": " + problem);
    }
  }
}

std::string ValidateCakePartition(const CakePartition& p, int n) {
  if (p.size() != n) {
    return "partition has " + std::to_string(p.size()) + " bundles, expected " +
           std::to_string(n);
  }
  std::vector<Interval> all;
  for (int i = 0; i < n; ++i) {
    for (const Interval& iv : p[i]) {
      if (iv.lo.Sign() < 0 || iv.hi > Rat(1) || iv.hi < iv.lo) {
        return "bundle " + std::to_string(i) + " has an invalid interval";
      }
      all.push_back(iv);
    }
  }
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  Rat length;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0 && all[i].lo < all[i - 1].hi) return "intervals overlap";
    length += all[i].hi - all[i].lo;
  }
  if (length != Rat(1)) return "intervals do not cover the cake";
  return "";
}

Rat EvalQuery(const CakeValuation& v, const Rat& lo, const Rat& hi) {
  CheckInterval(lo, hi);
  Rat total;
  for (std::size_t i = 0; i < v.densities.size(); ++i) {
    const Rat& a = v.breakpoints[i];
    const Rat& b = v.breakpoints[i + 1];
    if (b <= lo) continue;
    if (a >= hi) break;
    const Rat left = Max(a, lo);
    const Rat right = Min(b, hi);
    if (!v.densities[i].IsZero()) total += v.densities[i] * (right - left);
  }
  return total;
}

Rat CutQuery(const CakeValuation& v, const Rat& lo, const Rat& hi,
             const Rat& lambda) {
  CheckInterval(lo, hi);
  if (lambda.Sign() <= 0 || lambda > Rat(1)) {
    throw Error(ErrorCode::kInvalidLambda,
                "lambda " + lambda.ToString() + " is not in (0, 1]");
  }
  const Rat whole = EvalQuery(v, lo, hi);
  if (whole.IsZero()) return lo;
  const Rat target = lambda * whole;
  Rat acc;
  for (std::size_t i = 0; i < v.densities.size(); ++i) {
    const Rat& a = v.breakpoints[i];
    const Rat& b = v.breakpoints[i + 1];
    if (b <= lo) continue;
    if (a >= hi) break;
    const Rat& d = v.densities[i];
    if (d.IsZero()) continue;
    const Rat left = Max(a, lo);
    const Rat piece = d * (Min(b, hi) - left);
    if (acc + piece >= target) return left + (target - acc) / d;
    acc += piece;
  }
  throw Error(ErrorCode::kInternal, "cut target not reached");
}

Rat BundleValue(const CakeValuation& v, std::span<const Interval> bundle) {
  Rat total;
  for (const Interval& iv : bundle) total += EvalQuery(v, iv.lo, iv.hi);
  return total;
}

Rat RobertsonWebb::Eval(int agent, const Rat& lo, const Rat& hi) {
  ++eval_queries_;
  return EvalQuery(inst_.valuation(agent), lo, hi);
}

Rat RobertsonWebb::Cut(int agent, const Rat& lo, const Rat& hi,
                       const Rat& lambda) {
  ++cut_queries_;
  return CutQuery(inst_.valuation(agent), lo, hi, lambda);
}

ProportionalSolution SecretiveProportional(const CakeInstance& inst) {
  const int n = inst.n();
  const Rat share(1, n);
  RobertsonWebb rw(inst);
  ProportionalSolution out;

  std::vector<int> remaining(n - 1);
  for (int a = 0; a < n - 1; ++a) remaining[a] = a;
  std::vector<Interval> pieces;
  Rat x;
  while (!remaining.empty()) {
    int winner = -1;
    Rat best;
    for (int a : remaining) {
      const Rat rest = rw.Eval(a, x, Rat(1));
      const Rat c = rw.Cut(a, x, Rat(1), share / rest);
      if (winner < 0 || c < best) {
        winner = a;
        best = c;
      }
    }
    pieces.push_back(Interval{x, best});
    out.order.push_back(winner);
    remaining.erase(std::find(remaining.begin(), remaining.end(), winner));
    x = best;
  }
  pieces.push_back(Interval{x, Rat(1)});

  out.partition.bundles.reserve(n);
  for (const Interval& iv : pieces) out.partition.bundles.push_back({iv});

  out.sigma.sigma.resize(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    int j = i + 1;
    while (j < n && rw.Eval(out.order[i], pieces[j].lo, pieces[j].hi) < share) {
      ++j;
    }
    if (j == n) {
      throw Error(ErrorCode::kInternal,
                  "no later piece is worth 1/n to agent " +
                      std::to_string(out.order[i]));
    }
    out.sigma.sigma[i] = j;
  }
  out.bijections = RelabelAgents(BackupToBijections(out.sigma, n), out.order);
  out.eval_queries = rw.eval_queries();
  out.cut_queries = rw.cut_queries();
  return out;
}

EpsEfSolution SecretiveEpsEf(const CakeInstance& inst, const Rat& eps) {
  if (eps.Sign() <= 0 || eps > Rat(1)) {
    throw Error(ErrorCode::kInvalidEpsilon,
                "eps " + eps.ToString() + " is not in (0, 1]");
  }
  const int n = inst.n();
  RobertsonWebb rw(inst);
  EpsEfSolution out;

  Rat x;
  while (true) {
    bool found = false;
    Rat cut;
    for (int a = 0; a < n - 1; ++a) {
      const Rat rest = rw.Eval(a, x, Rat(1));
      if (rest <= eps) continue;
      const Rat c = rw.Cut(a, x, Rat(1), eps / rest);
      if (!found || c < cut) {
        found = true;
        cut = c;
      }
    }
    if (!found) break;
    out.pieces.push_back(Interval{x, cut});
    x = cut;
  }
  out.pieces.push_back(Interval{x, Rat(1)});

  const int m = static_cast<int>(out.pieces.size());
  std::vector<ValuationOracle> goods;
  goods.reserve(n - 1);
  for (int a = 0; a < n - 1; ++a) {
    std::vector<Rat> w(m);
    for (int p = 0; p < m; ++p) {
      w[p] = rw.Eval(a, out.pieces[p].lo, out.pieces[p].hi);
    }
    goods.push_back(ValuationOracle::Additive(std::move(w)));
  }
  const Ef1Solution ef1 =
      AllocateSecretiveEf1(GoodsInstance(n, m, std::move(goods)));

  out.partition.bundles.resize(n);
  out.piece_bundles.resize(n);
  for (int j = 0; j < n; ++j) {
    for (int p : ef1.partition[j].Elements()) {
      out.piece_bundles[j].push_back(p);
      out.partition.bundles[j].push_back(out.pieces[p]);
    }
  }
  out.bijections = ef1.bijections;
  out.eval_queries = rw.eval_queries();
  out.cut_queries = rw.cut_queries();
  return out;
}

}  // namespace secretive
