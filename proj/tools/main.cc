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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance/acceptance.h"
#include "io.h"
#include "secretive/cake.h"
#include "secretive/ef1.h"
#include "secretive/error.h"
#include "secretive/mms.h"
#include "secretive/rent.h"
#include "secretive/verify.h"

namespace secretive {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

// Input problems: bad files, bad JSON, schema violations, usage errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::Instance LoadInstance(const std::string& path) {
  try {
    return io::ParseInstance(io::ParseText(ReadFile(path)));
  } catch (const io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

io::SolutionFile LoadSolution(const std::string& path) {
  try {
    return io::ParseSolution(io::ParseText(ReadFile(path)));
  } catch (const io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <typename T>
const T& Expect(const io::Instance& inst, const char* type,
                const std::string& path) {
  const T* p = std::get_if<T>(&inst);
  if (p == nullptr) {
    throw InputError(path + ": /type: expected a " + std::string(type) +
                     " instance");
  }
  return *p;
}

void Write(const io::SolutionFile& s, const std::string& out) {
  const std::string text = io::EmitSolution(s).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError(out + ": cannot write file");
  f << text;
}

io::Json RatList(const std::vector<Rat>& xs) {
  io::Json out = io::Json::array();
  for (const Rat& x : xs) out.push_back(io::EmitRat(x));
  return out;
}

io::SolutionFile RunRent(const RentInstance& inst) {
  const RentSolution r = SolveSecretiveRent(inst);
  io::SolutionFile s;
  s.kind = "rent";
  s.n = inst.n();
  s.prices = r.prices.prices;
  s.bijections = r.bijections;
  s.meta["lp_optimum"] = io::EmitRat(r.lp_optimum);
  return s;
}

io::SolutionFile RunEf1(const GoodsInstance& inst) {
  const Ef1Solution r = AllocateSecretiveEf1(inst);
  io::SolutionFile s;
  s.kind = "ef1";
  s.n = inst.n();
  s.partition = r.partition;
  s.bijections = r.bijections;
  return s;
}

io::SolutionFile RunCakeProp(const CakeInstance& inst) {
  const ProportionalSolution r = SecretiveProportional(inst);
  io::SolutionFile s;
  s.kind = "cake-prop";
  s.n = inst.n();
  s.cake_partition = r.partition;
  s.order = r.order;
  s.sigma = r.sigma.sigma;
  s.bijections = r.bijections;
  s.meta["eval_queries"] = r.eval_queries;
  s.meta["cut_queries"] = r.cut_queries;
  return s;
}

io::SolutionFile RunCakeEf(const CakeInstance& inst, const Rat& eps) {
  const EpsEfSolution r = SecretiveEpsEf(inst, eps);
  io::SolutionFile s;
  s.kind = "cake-ef";
  s.n = inst.n();
  s.cake_partition = r.partition;
  s.pieces = r.pieces;
  s.bijections = r.bijections;
  s.eps = eps;
  s.meta["piece_bundles"] = r.piece_bundles;
  s.meta["eval_queries"] = r.eval_queries;
  s.meta["cut_queries"] = r.cut_queries;
  return s;
}

io::SolutionFile RunMms(const GoodsInstance& inst, int ratio,
                        const std::string& mode, int rounds) {
  MmsSolution r;
  if (ratio == 2) {
    if (mode != "exact") {
      throw InputError("--thresholds search is only available with --ratio 19");
    }
    r = AdditiveHalfMms(inst, ExactMmsThresholds(inst));
  } else if (mode == "exact") {
    r = SecretiveMms19Exact(inst);
  } else {
    r = ThresholdSearch(inst, rounds);
  }
  io::SolutionFile s;
  s.kind = "mms";
  s.n = inst.n();
  s.partition = r.partition;
  s.order = r.order;
  s.sigma = r.sigma.sigma;
  s.bijections = r.bijections;
  s.ratio = r.ratio;
  s.meta["thresholds"] = RatList(r.thresholds);
  s.meta["mode"] = mode;
  if (mode == "search") s.meta["rounds"] = rounds;
  return s;
}

std::string Describe(const Verdict& v) {
  if (!v.problem.empty()) return "invalid solution: " + v.problem;
  if (v.ok) return "secretive";
  std::string subset;
  for (int a : *v.failing_subset) {
    subset += (subset.empty() ? "" : ", ") + std::to_string(a);
  }
  return "not secretive: no fair matching when the secretive agent takes "
         "bundle " +
         std::to_string(*v.failing_choice) + "; agents {" + subset +
         "} have too few acceptable bundles";
}

int RunVerify(const std::string& instance_path,
              const std::string& solution_path) {
  const io::Instance inst = LoadInstance(instance_path);
  const io::SolutionFile s = LoadSolution(solution_path);
  Verdict verdict;
  FairnessGraph graph;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InputError(solution_path + ": " + what);
  };
  if (s.kind == "rent") {
    const auto& r = Expect<RentInstance>(inst, "rent", instance_path);
    need(s.n == r.n(), "/n: does not match the instance");
    const PriceVector p{*s.prices};
    verdict = VerifySecretiveRent(r, p);
    if (verdict.problem.empty()) graph = RentFairnessGraph(r, p);
  } else if (s.kind == "ef1" || s.kind == "mms") {
    const auto& g = Expect<GoodsInstance>(inst, "goods", instance_path);
    need(s.n == g.n(), "/n: does not match the instance");
    if (s.kind == "ef1") {
      verdict = VerifySecretiveEf1(g, *s.partition);
      if (verdict.problem.empty()) graph = Ef1FairnessGraph(g, *s.partition);
    } else {
      const std::vector<Rat> mu = ExactMmsThresholds(g);
      verdict = VerifySecretiveMms(g, *s.partition, *s.ratio, mu);
      if (verdict.problem.empty()) {
        graph = MmsFairnessGraph(g, *s.partition, *s.ratio, mu);
      }
    }
  } else {
    const auto& c = Expect<CakeInstance>(inst, "cake", instance_path);
    need(s.n == c.n(), "/n: does not match the instance");
    if (s.kind == "cake-prop") {
      verdict = VerifySecretiveProportional(c, *s.cake_partition);
      if (verdict.problem.empty()) {
        graph = ProportionalFairnessGraph(c, *s.cake_partition);
      }
    } else {
      verdict = VerifySecretiveEpsEf(c, *s.cake_partition, *s.eps);
      if (verdict.problem.empty()) {
        graph = EpsEfFairnessGraph(c, *s.cake_partition, *s.eps);
      }
    }
  }
  std::cout << s.kind << ": " << Describe(verdict) << "\n";
  if (!verdict.ok) return kExitRejected;
  if (!FamilyRespectsGraph(graph, s.bijections)) {
    std::cout << s.kind
              << ": the listed bijections use unfair edges (a valid family "
                 "exists)\n";
    return kExitRejected;
  }
  std::cout << s.kind << ": listed bijections are fair for every choice\n";
  return kExitOk;
}

int RunSelftest(std::uint64_t seed, const std::vector<int>& only) {
  testing::AcceptanceOptions options;
  options.seed = seed;
  options.only = only;
  int failed = 0;
  const auto results =
      testing::RunAcceptance(options, [&](const testing::CriterionResult& r) {
        std::cout << testing::FormatResult(r) << std::endl;
        if (!r.pass) ++failed;
      });
  std::cout << results.size() - failed << "/" << results.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? kExitOk : kExitRejected;
}

int Main(int argc, char** argv) {
  CLI::App app{"Fair division with a secretive agent"};
  app.require_subcommand(1);

  std::string instance;
  std::string out;
  auto add_solver = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("instance", instance, "Instance JSON file")->required();
    sub->add_option("-o,--out", out,
                    "Write the solution here (default stdout)");
    return sub;
  };
  CLI::App* rent = add_solver("rent", "Envy-free rent division");
  CLI::App* ef1 = add_solver("ef1", "EF1 allocation of indivisible goods");
  CLI::App* prop = add_solver("cake-prop", "Proportional cake division");
  CLI::App* cake_ef = add_solver("cake-ef", "eps-envy-free cake division");
  std::string eps_text;
  cake_ef->add_option("--eps", eps_text, "Envy bound, e.g. 1/4")->required();
  CLI::App* mms = add_solver("mms", "Approximate maximin-share allocation");
  int ratio = 19;
  std::string mode = "exact";
  int rounds = 40;
  mms->add_option("--ratio", ratio,
                  "19 for 1/19 (submodular), 2 for 1/2 (additive)")
      ->check(CLI::IsMember({19, 2}));
  mms->add_option("--thresholds", mode, "exact (brute force) or search")
      ->check(CLI::IsMember({"exact", "search"}));
  mms->add_option("--rounds", rounds, "Bisection rounds in search mode")
      ->check(CLI::Range(0, 200));

  CLI::App* verify = app.add_subcommand("verify", "Check a solution file");
  std::string solution;
  verify->add_option("--instance", instance, "Instance JSON file")->required();
  verify->add_option("--solution", solution, "Solution JSON file")->required();

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the acceptance suite");
  std::uint64_t seed = testing::AcceptanceOptions{}.seed;
  std::vector<int> only;
  selftest->add_option("--seed", seed, "Seed for the random instances");
  selftest->add_option("--only", only, "Run only these criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify) return RunVerify(instance, solution);
    if (*selftest) return RunSelftest(seed, only);

    const io::Instance inst = LoadInstance(instance);
    io::SolutionFile s;
    if (*rent) {
      s = RunRent(Expect<RentInstance>(inst, "rent", instance));
    } else if (*ef1) {
      s = RunEf1(Expect<GoodsInstance>(inst, "goods", instance));
    } else if (*prop) {
      s = RunCakeProp(Expect<CakeInstance>(inst, "cake", instance));
    } else if (*cake_ef) {
      Rat eps;
      try {
        eps = Rat::Parse(eps_text);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--eps: ") + e.what());
      }
      s = RunCakeEf(Expect<CakeInstance>(inst, "cake", instance), eps);
    } else if (*mms) {
      s = RunMms(Expect<GoodsInstance>(inst, "goods", instance), ratio, mode,
                 rounds);
    }
    Write(s, out);
    return kExitOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace
}  // namespace secretive

int main(int argc, char** argv) { return secretive::Main(argc, argv); }
