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

#ifndef SECRETIVE_RATIONAL_H_
#define SECRETIVE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace secretive {

// Exact arbitrary-precision rational. Always canonical (lowest terms,
// positive denominator); no operation ever rounds.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}   // NOLINT(runtime/explicit)
  Rat(long v) : q_(v) {}  // NOLINT(runtime/explicit)
  Rat(long long v);       // NOLINT(runtime/explicit)
  Rat(long long num, long long den);
  explicit Rat(mpq_class q);

  // Accepts "p", "-p", "p/q". Whitespace is not allowed. Throws
  // std::invalid_argument on malformed input or a zero denominator.
  static Rat Parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;
  double ToDouble() const { return q_.get_d(); }

  bool IsZero() const { return sgn(q_) == 0; }
  int Sign() const { return sgn(q_); }
  bool IsInteger() const;

  const mpq_class& raw() const { return q_; }

  Rat& operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
  }
  // Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t Hash() const;

 private:
  mpq_class q_;
};

Rat Abs(const Rat& r);
const Rat& Min(const Rat& a, const Rat& b);
const Rat& Max(const Rat& a, const Rat& b);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace secretive

template <>
struct std::hash<secretive::Rat> {
  std::size_t operator()(const secretive::Rat& r) const { return r.Hash(); }
};

#endif  // SECRETIVE_RATIONAL_H_
