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
// JSON encoding of instances and solutions for the command-line tool.
// Rationals are written as strings ("3", "-1/2") and read from either
// strings or JSON integers. See docs/formats.md.
//

#ifndef SECRETIVE_TOOLS_IO_H_
#define SECRETIVE_TOOLS_IO_H_

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "secretive/allocation.h"
#include "secretive/cake.h"
#include "secretive/instance.h"
#include "secretive/rational.h"

namespace secretive::io {

using Json = nlohmann::json;

// Malformed input. `where` is a JSON pointer ("/valuations/0/weights") or a
// "line L, column C" position for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

using Instance = std::variant<RentInstance, GoodsInstance, CakeInstance>;

// Parses JSON text, reporting syntax errors by line and column.
Json ParseText(std::string_view text);

Instance ParseInstance(const Json& j);
Json EmitInstance(const Instance& inst);

struct SolutionFile {
  std::string kind;  // rent | ef1 | cake-prop | cake-ef | mms
  int n = 0;
  std::optional<std::vector<Rat>> prices;       // rent
  std::optional<Partition> partition;           // ef1, mms
  std::optional<CakePartition> cake_partition;  // cake-prop, cake-ef
  std::optional<std::vector<Interval>> pieces;  // cake-ef
  std::optional<std::vector<int>> order;
  std::optional<std::vector<int>> sigma;
  BijectionFamily bijections;
  std::optional<Rat> eps;
  std::optional<Rat> ratio;
  Json meta = Json::object();

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

SolutionFile ParseSolution(const Json& j);
Json EmitSolution(const SolutionFile& s);

Json EmitRat(const Rat& x);

}  // namespace secretive::io

#endif  // SECRETIVE_TOOLS_IO_H_
