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

#include "secretive/good_set.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace secretive {
namespace {

constexpr int kWordBits = 64;

void CheckIndex(int g) {
  if (g < 0) throw std::out_of_range("negative good index");
}

}  // namespace

GoodSet::GoodSet(std::initializer_list<int> goods) {
  for (int g : goods) Insert(g);
}

GoodSet GoodSet::FromMask(std::uint64_t mask) {
  GoodSet s;
  if (mask != 0) s.words_.push_back(mask);
  return s;
}

GoodSet GoodSet::FromList(std::span<const int> goods) {
  GoodSet s;
  for (int g : goods) s.Insert(g);
  return s;
}

GoodSet GoodSet::FirstN(int m) {
  GoodSet s;
  if (m <= 0) return s;
  s.words_.assign((m + kWordBits - 1) / kWordBits, ~std::uint64_t{0});
  const int rem = m % kWordBits;
  if (rem != 0) s.words_.back() = (std::uint64_t{1} << rem) - 1;
  return s;
}

bool GoodSet::Contains(int g) const {
  if (g < 0) return false;
  const std::size_t w = g / kWordBits;
  return w < words_.size() && ((words_[w] >> (g % kWordBits)) & 1U);
}

void GoodSet::Insert(int g) {
  CheckIndex(g);
  const std::size_t w = g / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (g % kWordBits);
}

void GoodSet::Erase(int g) {
  if (!Contains(g)) return;
  words_[g / kWordBits] &= ~(std::uint64_t{1} << (g % kWordBits));
  Trim();
}

GoodSet GoodSet::With(int g) const {
  GoodSet s = *this;
  s.Insert(g);
  return s;
}

GoodSet GoodSet::Without(int g) const {
  GoodSet s = *this;
  s.Erase(g);
  return s;
}

int GoodSet::Size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

int GoodSet::Bound() const {
  if (words_.empty()) return 0;
  return static_cast<int>(words_.size() - 1) * kWordBits +
         (kWordBits - std::countl_zero(words_.back()));
}

std::vector<int> GoodSet::Elements() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w) * kWordBits + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t GoodSet::ToMask() const {
  if (words_.size() > 1) throw std::out_of_range("GoodSet exceeds 64 goods");
  return words_.empty() ? 0 : words_[0];
}

bool GoodSet::IsSubsetOf(const GoodSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool GoodSet::Intersects(const GoodSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

GoodSet operator|(const GoodSet& a, const GoodSet& b) {
  GoodSet s = a.words_.size() >= b.words_.size() ? a : b;
  const GoodSet& small = a.words_.size() >= b.words_.size() ? b : a;
  for (std::size_t w = 0; w < small.words_.size(); ++w) {
    s.words_[w] |= small.words_[w];
  }
  return s;
}

GoodSet operator&(const GoodSet& a, const GoodSet& b) {
  GoodSet s;
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  s.words_.resize(n);
  for (std::size_t w = 0; w < n; ++w) s.words_[w] = a.words_[w] & b.words_[w];
  s.Trim();
  return s;
}

GoodSet operator-(const GoodSet& a, const GoodSet& b) {
  GoodSet s = a;
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < n; ++w) s.words_[w] &= ~b.words_[w];
  s.Trim();
  return s;
}

std::size_t GoodSet::Hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w);
    h *= 0x100000001b3ULL;
  }
  return h;
}

void GoodSet::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace secretive
