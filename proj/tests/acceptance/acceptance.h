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
// The acceptance suite: one check per criterion, each printed as a single
// pass/fail line. Shared by acceptance_test and `secretive selftest`.
//

#ifndef SECRETIVE_TESTING_ACCEPTANCE_H_
#define SECRETIVE_TESTING_ACCEPTANCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace secretive::testing {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20261016;
  std::vector<int> only;  // empty runs every criterion
};

// "[PASS] criterion 4 (title): detail [1.23 s]"
std::string FormatResult(const CriterionResult& r);

// Runs the selected criteria in order, reporting each as soon as it is done.
std::vector<CriterionResult> RunAcceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace secretive::testing

#endif  // SECRETIVE_TESTING_ACCEPTANCE_H_
