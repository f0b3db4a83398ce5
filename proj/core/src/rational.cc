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

#include "secretive/rational.h"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace secretive {
namespace {

static_assert(sizeof(long) == sizeof(long long),
              "Rat assumes an LP64 platform");

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long long v) : q_(static_cast<long>(v)) {}

Rat::Rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)),
                 mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view("1")
                             : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw std::invalid_argument("not a rational: \"" + std::string(text) +
                                "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) +
                                "\"");
  }
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::ToString() const { return q_.get_str(10); }

bool Rat::IsInteger() const { return q_.get_den() == 1; }

Rat& Rat::operator/=(const Rat& o) {
  if (o.IsZero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rat::Hash() const {
  // Low limbs of numerator and denominator are enough to spread buckets.
  const std::size_t n = mpz_get_ui(q_.get_num_mpz_t());
  const std::size_t d = mpz_get_ui(q_.get_den_mpz_t());
  return n * 0x9e3779b97f4a7c15ULL ^ (d + (n << 6) + (n >> 2)) ^
         static_cast<std::size_t>(Sign() < 0);
}

Rat Abs(const Rat& r) { return r.Sign() < 0 ? -r : r; }
const Rat& Min(const Rat& a, const Rat& b) { return b < a ? b : a; }
const Rat& Max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

}  // namespace secretive
