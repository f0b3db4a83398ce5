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

#include <benchmark/benchmark.h>

#include "secretive/cake.h"
#include "secretive/ef1.h"
#include "secretive/matching.h"
#include "secretive/mms.h"
#include "secretive/rent.h"
#include "secretive/verify.h"
#include "support/generators.h"

namespace secretive {
namespace {

void BM_MaxWeightPerfectMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Rng rng(1);
  WeightMatrix w(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      w(r, c) = Rat(testing::UniformInt(rng, 0, 1000));
  }
  for (auto _ : state) benchmark::DoNotOptimize(MaxWeightPerfectMatching(w));
}
BENCHMARK(BM_MaxWeightPerfectMatching)->Arg(8)->Arg(32)->Arg(64);

void BM_SolveSecretiveRent(benchmark::State& state) {
  testing::Rng rng(2);
  const RentInstance inst =
      testing::RandomRentInstance(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveSecretiveRent(inst));
}
BENCHMARK(BM_SolveSecretiveRent)->DenseRange(2, 8, 2);

void BM_AllocateSecretiveEf1(benchmark::State& state) {
  testing::Rng rng(3);
  const GoodsInstance inst = testing::RandomGoodsInstance(
      rng, 5, static_cast<int>(state.range(0)), testing::OracleMix::kMixed);
  for (auto _ : state) benchmark::DoNotOptimize(AllocateSecretiveEf1(inst));
}
BENCHMARK(BM_AllocateSecretiveEf1)->Arg(4)->Arg(8)->Arg(12);

void BM_SecretiveProportional(benchmark::State& state) {
  testing::Rng rng(4);
  const CakeInstance inst =
      testing::RandomCakeInstance(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SecretiveProportional(inst));
}
BENCHMARK(BM_SecretiveProportional)->Arg(3)->Arg(6)->Arg(12);

void BM_SecretiveEpsEf(benchmark::State& state) {
  testing::Rng rng(5);
  const CakeInstance inst = testing::RandomCakeInstance(rng, 4);
  const Rat eps(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SecretiveEpsEf(inst, eps));
}
BENCHMARK(BM_SecretiveEpsEf)->Arg(4)->Arg(8)->Arg(16);

void BM_SecretiveMms19Exact(benchmark::State& state) {
  testing::Rng rng(6);
  const GoodsInstance inst =
      testing::RandomGoodsInstance(rng, 3, static_cast<int>(state.range(0)),
                                   testing::OracleMix::kSubmodular);
  for (auto _ : state) benchmark::DoNotOptimize(SecretiveMms19Exact(inst));
}
BENCHMARK(BM_SecretiveMms19Exact)->Arg(6)->Arg(9);

void BM_AdditiveHalfMms(benchmark::State& state) {
  testing::Rng rng(7);
  const GoodsInstance inst = testing::RandomGoodsInstance(
      rng, 4, static_cast<int>(state.range(0)), testing::OracleMix::kAdditive);
  const std::vector<Rat> mu = ExactMmsThresholds(inst);
  for (auto _ : state) benchmark::DoNotOptimize(AdditiveHalfMms(inst, mu));
}
BENCHMARK(BM_AdditiveHalfMms)->Arg(6)->Arg(10);

void BM_CheckSecretive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Rng rng(8);
  const BoolMatrix g = testing::RandomGraph(rng, n - 1, n, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(CheckSecretive(g));
}
BENCHMARK(BM_CheckSecretive)->Arg(6)->Arg(16)->Arg(64);

}  // namespace
}  // namespace secretive

BENCHMARK_MAIN();
