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

#ifndef SECRETIVE_GOOD_SET_H_
#define SECRETIVE_GOOD_SET_H_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace secretive {

// A finite set of good indices (0-based). Stored as a bitset with no
// trailing zero words, so equal sets compare equal word-for-word.
class GoodSet {
 public:
  GoodSet() = default;
  GoodSet(std::initializer_list<int> goods);

  static GoodSet FromMask(std::uint64_t mask);
  static GoodSet FromList(std::span<const int> goods);
  // {0, 1, ..., m-1}.
  static GoodSet FirstN(int m);

  bool Contains(int g) const;
  void Insert(int g);
  void Erase(int g);

  GoodSet With(int g) const;
  GoodSet Without(int g) const;

  bool Empty() const { return words_.empty(); }
  int Size() const;
  // One past the largest member; 0 for the empty set.
  int Bound() const;
  // Members in ascending order.
  std::vector<int> Elements() const;

  // Requires Bound() <= 64.
  std::uint64_t ToMask() const;

  bool IsSubsetOf(const GoodSet& other) const;
  bool Intersects(const GoodSet& other) const;

  friend GoodSet operator|(const GoodSet& a, const GoodSet& b);
  friend GoodSet operator&(const GoodSet& a, const GoodSet& b);
  // Set difference.
  friend GoodSet operator-(const GoodSet& a, const GoodSet& b);
  friend bool operator==(const GoodSet& a, const GoodSet& b) = default;

  std::size_t Hash() const;

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

}  // namespace secretive

template <>
struct std::hash<secretive::GoodSet> {
  std::size_t operator()(const secretive::GoodSet& s) const { return s.Hash(); }
};

#endif  // SECRETIVE_GOOD_SET_H_
