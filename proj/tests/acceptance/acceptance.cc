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

#include "acceptance/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>

#include "secretive/cake.h"
#include "secretive/ef1.h"
#include "secretive/error.h"
#include "secretive/mms.h"
#include "secretive/rent.h"
#include "secretive/valuation.h"
#include "secretive/verify.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace secretive::testing {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure descriptions for the detail line.
class Failures {
 public:
  void Add(std::string what) {
    ++count_;
    if (examples_.size() < 3) examples_.push_back(std::move(what));
  }
  int count() const { return count_; }
  std::string Summary() const {
    std::string out;
    for (const auto& e : examples_) out += "; " + e;
    return out;
  }

 private:
  int count_ = 0;
  std::vector<std::string> examples_;
};

std::string Seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

// ---------------------------------------------------------------------------
// Rent (criteria 1-3).

struct RentRun {
  RentInstance inst;
  std::optional<RentSolution> solution;
};

struct RentStats {
  std::vector<RentRun> runs;
  int verified = 0;
  Failures failures;
  double seconds = 0;
};

RentStats RunRent(std::uint64_t seed) {
  RentStats st;
  Rng rng(seed + 1);
  const auto t0 = Clock::now();
  for (int t = 0; t < 500; ++t) {
    const int n = UniformInt(rng, 2, 5);
    RentRun run{RandomRentInstance(rng, n, 100), std::nullopt};
    try {
      run.solution = SolveSecretiveRent(run.inst);
      const Verdict v = VerifySecretiveRent(run.inst, run.solution->prices);
      if (v.ok) {
        ++st.verified;
      } else {
        st.failures.Add("instance " + std::to_string(t) + " rejected");
      }
    } catch (const Error& e) {
      st.failures.Add("instance " + std::to_string(t) + ": " + e.what());
    }
    st.runs.push_back(std::move(run));
  }
  st.seconds = Since(t0);
  return st;
}

CriterionResult Criterion1(const RentStats& st) {
  CriterionResult r{1, "secretive rent, 500 instances, n 2..5"};
  r.seconds = st.seconds;
  r.pass = st.verified == 500 && st.seconds < 30;
  r.detail = std::to_string(st.verified) + "/500 verified, " +
             Seconds(st.seconds) + " (limit 30 s)" + st.failures.Summary();
  return r;
}

CriterionResult Criterion2(const RentStats& st) {
  CriterionResult r{2, "rent LP optimum equals vertex enumeration, n <= 4"};
  const auto t0 = Clock::now();
  int compared = 0;
  int equal = 0;
  Failures failures;
  for (std::size_t t = 0; t < st.runs.size(); ++t) {
    const RentRun& run = st.runs[t];
    if (run.inst.n() > 4) continue;
    ++compared;
    if (!run.solution) {
      failures.Add("instance " + std::to_string(t) + " has no solution");
      continue;
    }
    const std::optional<Rat> brute =
        VertexEnumerationMin(BuildRentLp(run.inst, run.solution->bijections));
    if (brute && *brute == run.solution->lp_optimum) {
      ++equal;
    } else {
      failures.Add("instance " + std::to_string(t) + ": LP " +
                   run.solution->lp_optimum.ToString() + " vs " +
                   (brute ? brute->ToString() : "infeasible"));
    }
  }
  r.seconds = Since(t0);
  r.pass = compared > 0 && equal == compared;
  r.detail = std::to_string(equal) + "/" + std::to_string(compared) +
             " exact matches" + failures.Summary();
  return r;
}

// ---------------------------------------------------------------------------
// EF1 (criteria 3-4).

struct Ef1Stats {
  int instances = 0;
  int verified = 0;
  long long insertions = 0;
  int no_despised = 0;
  Failures failures;
  double seconds = 0;
};

Ef1Stats RunEf1(std::uint64_t seed) {
  Ef1Stats st;
  Rng rng(seed + 4);
  const auto t0 = Clock::now();
  for (int t = 0; t < 300; ++t) {
    const int n = UniformInt(rng, 2, 5);
    const int m = UniformInt(rng, 0, 12);
    const GoodsInstance inst =
        RandomGoodsInstance(rng, n, m, OracleMix::kMixed);
    ++st.instances;
    Ef1Trace trace;
    try {
      const Ef1Solution s = AllocateSecretiveEf1(inst, &trace);
      st.insertions += static_cast<long long>(trace.despised.size());
      if (static_cast<int>(trace.despised.size()) != m) {
        st.failures.Add("instance " + std::to_string(t) +
                        " skipped an insertion");
      } else if (VerifySecretiveEf1(inst, s.partition).ok) {
        ++st.verified;
      } else {
        st.failures.Add("instance " + std::to_string(t) + " rejected");
      }
    } catch (const Error& e) {
      st.insertions += static_cast<long long>(trace.despised.size());
      if (e.code() == ErrorCode::kNoDespisedBundle) ++st.no_despised;
      st.failures.Add("instance " + std::to_string(t) + ": " + e.what());
    }
  }
  st.seconds = Since(t0);
  return st;
}

CriterionResult Criterion3(const RentStats& rent, const Ef1Stats& ef1) {
  CriterionResult r{3, "despised room and bundle always exist"};
  const auto t0 = Clock::now();
  int scans = 0;
  int missing = 0;
  for (const RentRun& run : rent.runs) {
    if (!run.solution) continue;
    ++scans;
    try {
      FindDespisedRoom(run.inst, run.solution->bijections);
    } catch (const Error&) {
      ++missing;
    }
  }
  r.seconds = Since(t0);
  r.pass = missing == 0 && ef1.no_despised == 0 && scans == 500 &&
           ef1.failures.count() == 0;
  r.detail = std::to_string(scans) + " rent scans with " +
             std::to_string(missing) + " misses; " +
             std::to_string(ef1.insertions) + " EF1 insertions with " +
             std::to_string(ef1.no_despised) + " misses";
  return r;
}

CriterionResult Criterion4(const Ef1Stats& st) {
  CriterionResult r{4, "secretive EF1, 300 instances, n 2..5, m 0..12"};
  r.seconds = st.seconds;
  r.pass = st.verified == 300 && st.seconds < 60;
  r.detail = std::to_string(st.verified) + "/300 verified, " +
             Seconds(st.seconds) + " (limit 60 s)" + st.failures.Summary();
  return r;
}

// ---------------------------------------------------------------------------
// Cake (criteria 5-6).

CriterionResult Criterion5(std::uint64_t seed) {
  CriterionResult r{5, "secretive proportional cake, 200 instances, n 2..6"};
  Rng rng(seed + 5);
  const auto t0 = Clock::now();
  int passed = 0;
  Failures failures;
  for (int t = 0; t < 200; ++t) {
    const int n = UniformInt(rng, 2, 6);
    const CakeInstance inst = RandomCakeInstance(rng, n);
    const std::string tag = "instance " + std::to_string(t);
    try {
      const ProportionalSolution s = SecretiveProportional(inst);
      std::string bad = ValidateCakePartition(s.partition, n);
      for (int j = 0; bad.empty() && j < n; ++j) {
        if (s.partition[j].size() != 1) bad = "bundle is not one interval";
      }
      const Rat share(1, n);
      for (int k = 0; bad.empty() && k < n; ++k) {
        for (int a = 0; a < n - 1; ++a) {
          const int j = s.bijections.pi[k][a];
          if (j == k ||
              BundleValue(inst.valuation(a), s.partition[j]) < share) {
            bad = "agent " + std::to_string(a) + " short for choice " +
                  std::to_string(k);
            break;
          }
        }
      }
      if (bad.empty() && !VerifySecretiveProportional(inst, s.partition).ok) {
        bad = "verifier rejected";
      }
      if (bad.empty()) {
        ++passed;
      } else {
        failures.Add(tag + ": " + bad);
      }
    } catch (const Error& e) {
      failures.Add(tag + ": " + e.what());
    }
  }
  r.seconds = Since(t0);
  r.pass = passed == 200;
  r.detail =
      std::to_string(passed) + "/200 exact and contiguous" + failures.Summary();
  return r;
}

CriterionResult Criterion6(std::uint64_t seed) {
  CriterionResult r{6, "secretive eps-EF cake, 100 instances, eps 1/4 and 1/8"};
  Rng rng(seed + 6);
  const auto t0 = Clock::now();
  int passed = 0;
  Rat worst_envy;
  Failures failures;
  for (int t = 0; t < 100; ++t) {
    const int n = UniformInt(rng, 2, 5);
    const Rat eps = t % 2 == 0 ? Rat(1, 4) : Rat(1, 8);
    const CakeInstance inst = RandomCakeInstance(rng, n);
    const std::string tag = "instance " + std::to_string(t);
    try {
      const EpsEfSolution s = SecretiveEpsEf(inst, eps);
      std::string bad = ValidateCakePartition(s.partition, n);
      // ceil((n-1)/eps) + 1, with 1/eps an integer here.
      const Rat cap = Rat(n - 1) / eps + Rat(1);
      if (bad.empty() && Rat(static_cast<int>(s.pieces.size())) > cap) {
        bad = std::to_string(s.pieces.size()) + " pieces";
      }
      for (int k = 0; bad.empty() && k < n; ++k) {
        for (int a = 0; bad.empty() && a < n - 1; ++a) {
          const CakeValuation& v = inst.valuation(a);
          const Rat own = BundleValue(v, s.partition[s.bijections.pi[k][a]]);
          for (int j = 0; j < n; ++j) {
            const Rat envy = BundleValue(v, s.partition[j]) - own;
            worst_envy = Max(worst_envy, envy);
            if (envy > eps) {
              bad = "agent " + std::to_string(a) + " envies bundle " +
                    std::to_string(j) + " by " + envy.ToString();
              break;
            }
          }
        }
      }
      if (bad.empty() && !VerifySecretiveEpsEf(inst, s.partition, eps).ok) {
        bad = "verifier rejected";
      }
      if (bad.empty()) {
        ++passed;
      } else {
        failures.Add(tag + ": " + bad);
      }
    } catch (const Error& e) {
      failures.Add(tag + ": " + e.what());
    }
  }
  r.seconds = Since(t0);
  r.pass = passed == 100 && r.seconds < 60;
  r.detail = std::to_string(passed) + "/100 within eps (largest envy " +
             worst_envy.ToString() + "), " + Seconds(r.seconds) +
             " (limit 60 s)" + failures.Summary();
  return r;
}

// ---------------------------------------------------------------------------
// Maximin shares (criteria 7-10).

CriterionResult Criterion7(std::uint64_t seed) {
  CriterionResult r{7, "surrogate stays monotone and submodular, 50 bases"};
  Rng rng(seed + 7);
  const auto t0 = Clock::now();
  int clean = 0;
  Failures failures;
  for (int t = 0; t < 50; ++t) {
    const int m = UniformInt(rng, 2, 10);
    ValuationOracle base = RandomSubmodular(rng, m);
    int special = 0;
    Rat top;
    Rat second;
    while (true) {
      std::vector<Rat> single(m);
      for (int g = 0; g < m; ++g) single[g] = base.SingletonValue(g);
      special = static_cast<int>(
          std::max_element(single.begin(), single.end()) - single.begin());
      top = single[special];
      second = Rat(0);
      for (int g = 0; g < m; ++g) {
        if (g != special) second = Max(second, single[g]);
      }
      if (top > second) break;
      base = RandomSubmodular(rng, m);
    }
    const Rat cap = second + (top - second) * Rat(UniformInt(rng, 1, 8), 8);
    const ValuationOracle hat = ValuationOracle::Surrogate(base, special, cap);
    const std::string tag = "base " + std::to_string(t);
    if (!ExhaustivelyMonotone(base) || !ExhaustivelySubmodular(base)) {
      failures.Add(tag + ": generator produced a bad base");
    } else if (!ExhaustivelyMonotone(hat)) {
      failures.Add(tag + ": surrogate not monotone");
    } else if (!ExhaustivelySubmodular(hat)) {
      failures.Add(tag + ": surrogate not submodular");
    } else {
      ++clean;
    }
  }
  r.seconds = Since(t0);
  r.pass = clean == 50;
  r.detail = std::to_string(clean) + "/50 bases with zero violations" +
             failures.Summary();
  return r;
}

// Two-agent coverage instances in which exactly one good is worth tau/19 or
// more and tau <= mu. Such instances need more than twenty goods.
CriterionResult Criterion8(std::uint64_t seed) {
  CriterionResult r{8, "surrogate share at least 9/19 of the maximin share"};
  Rng rng(seed + 8);
  const auto t0 = Clock::now();
  int held = 0;
  int rejected = 0;
  Rat tightest(1);
  Failures failures;
  for (int t = 0; t < 50;) {
    const int m = UniformInt(rng, 22, 24);
    const int special = UniformInt(rng, 0, m - 1);
    // Element 0 is worth a lot and only the special good covers it; every
    // good owns one private element; two shared elements add overlap.
    std::vector<Rat> weights{Rat(UniformInt(rng, 2200, 4000))};
    std::vector<std::vector<int>> covers(m);
    covers[special].push_back(0);
    for (int g = 0; g < m; ++g) {
      weights.emplace_back(UniformInt(rng, 95, 99));
      covers[g].push_back(g + 1);
    }
    for (int e = 0; e < 2; ++e) {
      weights.emplace_back(UniformInt(rng, 1, 3));
      const int id = static_cast<int>(weights.size()) - 1;
      for (int g = 0; g < m; ++g) {
        if (UniformInt(rng, 0, 3) == 0) covers[g].push_back(id);
      }
    }
    const ValuationOracle v =
        ValuationOracle::Coverage(std::move(weights), std::move(covers));
    Rat max_other;
    for (int g = 0; g < m; ++g) {
      if (g != special) max_other = Max(max_other, v.SingletonValue(g));
    }
    const TwoPartShare mu = TwoPartMaximin(*v.coverage(), m);
    // tau is an integer with 19 * max_other < tau <= mu.
    const Rat low = max_other * Rat(19);
    if (!(low + Rat(1) <= mu.value)) {
      ++rejected;
      continue;
    }
    const long long lo = low.raw().get_num().get_si() + 1;
    const long long hi =
        mu.value.raw().get_num().get_si() / mu.value.raw().get_den().get_si();
    const Rat tau(lo + static_cast<long long>(rng() % (hi - lo + 1)));
    const Rat kappa = tau / Rat(19);
    int high = 0;
    for (int g = 0; g < m; ++g) {
      if (v.SingletonValue(g) >= kappa) ++high;
    }
    const std::string tag = "instance " + std::to_string(t);
    ++t;
    if (high != 1 || !(v.SingletonValue(special) >= kappa) || tau > mu.value) {
      failures.Add(tag + ": precondition not met");
      continue;
    }
    const TwoPartShare hat = TwoPartMaximin(*v.coverage(), m, special, kappa);
    // Both parts re-evaluated through the library's oracles.
    const GoodSet all = GoodSet::FirstN(m);
    const ValuationOracle lib_hat =
        ValuationOracle::Surrogate(v, special, kappa);
    const Rat lib_mu = Min(v.Value(mu.part), v.Value(all - mu.part));
    const Rat lib_hat_mu =
        Min(lib_hat.Value(hat.part), lib_hat.Value(all - hat.part));
    if (lib_mu != mu.value || lib_hat_mu != hat.value) {
      failures.Add(tag + ": library oracle disagrees with the brute force");
      continue;
    }
    const Rat ratio = hat.value / mu.value;
    tightest = Min(tightest, ratio);
    if (ratio >= Rat(9, 19)) {
      ++held;
    } else {
      failures.Add(tag + ": ratio " + ratio.ToString());
    }
  }
  r.seconds = Since(t0);
  r.pass = held == 50;
  std::ostringstream os;
  os << held << "/50 hold, smallest ratio " << tightest.ToString() << " ~ "
     << std::setprecision(4) << tightest.ToDouble() << " vs 9/19 ~ 0.4737 ("
     << rejected << " draws resampled, m 22..24)";
  r.detail = os.str() + failures.Summary();
  return r;
}

CriterionResult Criterion9(std::uint64_t seed) {
  CriterionResult r{9, "secretive 1/19-MMS, 100 submodular instances"};
  Rng rng(seed + 9);
  const auto t0 = Clock::now();
  int passed = 0;
  int flags = 0;
  Failures failures;
  for (int t = 0; t < 100; ++t) {
    const int n = UniformInt(rng, 2, 4);
    const int m = UniformInt(rng, 0, 9);
    const GoodsInstance inst =
        RandomGoodsInstance(rng, n, m, OracleMix::kSubmodular);
    const std::string tag = "instance " + std::to_string(t);
    std::vector<Rat> mu;
    for (int a = 0; a < n - 1; ++a) {
      mu.push_back(BruteMms(inst.valuation(a), GoodSet::FirstN(m), n));
    }
    try {
      if (ExactMmsThresholds(inst) != mu) {
        failures.Add(tag + ": maximin shares disagree with the oracle");
        continue;
      }
      const Mms19Result run = SecretiveMms19(inst, mu);
      if (!run.ok()) {
        ++flags;
        failures.Add(tag + ": agent " + std::to_string(run.flagged_agent) +
                     " flagged at its maximin share");
        continue;
      }
      if (VerifySecretiveMms(inst, run.solution->partition, Rat(1, 19), mu)
              .ok) {
        ++passed;
      } else {
        failures.Add(tag + " rejected");
      }
    } catch (const Error& e) {
      failures.Add(tag + ": " + e.what());
    }
  }
  r.seconds = Since(t0);
  r.pass = passed == 100 && flags == 0 && r.seconds < 300;
  r.detail = std::to_string(passed) + "/100 verified, " +
             std::to_string(flags) + " flags, " + Seconds(r.seconds) +
             " (limit 300 s)" + failures.Summary();
  return r;
}

CriterionResult Criterion10(std::uint64_t seed) {
  CriterionResult r{10, "secretive 1/2-MMS, 200 additive instances"};
  Rng rng(seed + 10);
  const auto t0 = Clock::now();
  int passed = 0;
  int assertions = 0;
  Failures failures;
  for (int t = 0; t < 200; ++t) {
    const int n = UniformInt(rng, 2, 4);
    const int m = UniformInt(rng, 0, 10);
    const GoodsInstance inst =
        RandomGoodsInstance(rng, n, m, OracleMix::kAdditive);
    const std::string tag = "instance " + std::to_string(t);
    std::vector<Rat> mu;
    for (int a = 0; a < n - 1; ++a) {
      mu.push_back(BruteMms(inst.valuation(a), GoodSet::FirstN(m), n));
    }
    try {
      const MmsSolution s = AdditiveHalfMms(inst, mu);
      if (VerifySecretiveMms(inst, s.partition, Rat(1, 2), mu).ok) {
        ++passed;
      } else {
        failures.Add(tag + " rejected");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInternal) ++assertions;
      failures.Add(tag + ": " + e.what());
    }
  }
  r.seconds = Since(t0);
  r.pass = passed == 200 && assertions == 0;
  r.detail = std::to_string(passed) + "/200 verified, knife assertion fired " +
             std::to_string(assertions) + " times" + failures.Summary();
  return r;
}

// ---------------------------------------------------------------------------
// Framework equivalence (criterion 11).

struct GraphTally {
  long long graphs = 0;
  long long secretive = 0;
  long long disagreements = 0;
};

void CheckGraph(const BoolMatrix& g, GraphTally& tally) {
  const bool fast = CheckSecretive(g).ok;
  ++tally.graphs;
  if (fast) ++tally.secretive;
  if (fast != HallPlusOne(g)) ++tally.disagreements;
}

void FillGraph(BoolMatrix& g, const std::vector<std::uint32_t>& rows) {
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) g(r, c) = rows[r] >> c & 1;
  }
}

// Every (n-1) x n graph.
void AllGraphs(int n, GraphTally& tally) {
  BoolMatrix g(n - 1, n, 0);
  const int bits = (n - 1) * n;
  std::vector<std::uint32_t> rows(n - 1);
  for (std::uint32_t code = 0; code < (1u << bits); ++code) {
    for (int r = 0; r < n - 1; ++r) rows[r] = code >> (r * n) & ((1u << n) - 1);
    FillGraph(g, rows);
    CheckGraph(g, tally);
  }
}

// One representative of every graph up to relabeling agents and bundles:
// rows in nondecreasing order and column degrees nonincreasing. Both
// properties are invariant under these relabelings.
void RepresentativeGraphs(int n, GraphTally& tally) {
  BoolMatrix g(n - 1, n, 0);
  std::vector<std::uint32_t> rows(n - 1, 0);
  const std::uint32_t limit = 1u << n;
  while (true) {
    bool degrees_ok = true;
    int prev = n;
    for (int c = 0; c < n && degrees_ok; ++c) {
      int d = 0;
      for (std::uint32_t row : rows) d += row >> c & 1;
      degrees_ok = d <= prev;
      prev = d;
    }
    if (degrees_ok) {
      FillGraph(g, rows);
      CheckGraph(g, tally);
    }
    int i = n - 2;
    while (i >= 0 && rows[i] == limit - 1) --i;
    if (i < 0) break;
    ++rows[i];
    for (int j = i + 1; j < n - 1; ++j) rows[j] = rows[i];
  }
}

CriterionResult Criterion11(std::uint64_t seed) {
  CriterionResult r{11, "matching check equals Hall-plus-one, n <= 6"};
  const auto t0 = Clock::now();
  GraphTally small;
  for (int n = 2; n <= 5; ++n) AllGraphs(n, small);
  GraphTally six;
  RepresentativeGraphs(6, six);
  GraphTally sampled;
  Rng rng(seed + 11);
  for (int t = 0; t < 100000; ++t) {
    CheckGraph(RandomGraph(rng, 5, 6, 0.3 + 0.1 * UniformInt(rng, 0, 6)),
               sampled);
  }
  r.seconds = Since(t0);
  const long long disagreements =
      small.disagreements + six.disagreements + sampled.disagreements;
  r.pass = disagreements == 0;
  r.detail =
      "all " + std::to_string(small.graphs) + " graphs for n 2..5, " +
      std::to_string(six.graphs) +
      " canonical n = 6 graphs covering every relabeling class, " +
      std::to_string(sampled.graphs) + " random n = 6 graphs; " +
      std::to_string(disagreements) + " disagreements (" +
      std::to_string(small.secretive + six.secretive + sampled.secretive) +
      " secretive)";
  return r;
}

}  // namespace

std::string FormatResult(const CriterionResult& r) {
  return std::string(r.pass ? "[PASS]" : "[FAIL]") + " criterion " +
         std::to_string(r.id) + " (" + r.title + "): " + r.detail + " [" +
         Seconds(r.seconds) + "]";
}

std::vector<CriterionResult> RunAcceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  auto wanted = [&](int id) {
    return options.only.empty() ||
           std::find(options.only.begin(), options.only.end(), id) !=
               options.only.end();
  };
  std::vector<CriterionResult> results;
  auto report = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  const std::uint64_t seed = options.seed;

  std::optional<RentStats> rent;
  if (wanted(1) || wanted(2) || wanted(3)) rent = RunRent(seed);
  std::optional<Ef1Stats> ef1;
  if (wanted(3) || wanted(4)) ef1 = RunEf1(seed);

  if (wanted(1)) report(Criterion1(*rent));
  if (wanted(2)) report(Criterion2(*rent));
  if (wanted(3)) report(Criterion3(*rent, *ef1));
  if (wanted(4)) report(Criterion4(*ef1));
  if (wanted(5)) report(Criterion5(seed));
  if (wanted(6)) report(Criterion6(seed));
  if (wanted(7)) report(Criterion7(seed));
  if (wanted(8)) report(Criterion8(seed));
  if (wanted(9)) report(Criterion9(seed));
  if (wanted(10)) report(Criterion10(seed));
  if (wanted(11)) report(Criterion11(seed));
  return results;
}

}  // namespace secretive::testing
