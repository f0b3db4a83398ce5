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

#include "io.h"

#include <algorithm>
#include <string>
#include <utility>

#include "secretive/error.h"

namespace secretive::io {
namespace {

std::string Child(const std::string& path, const std::string& key) {
  return path + "/" + key;
}

std::string Child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ParseError(path.empty() ? "/" : path, what);
}

const Json& Field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) Fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(Child(path, key), "missing field");
  return *it;
}

const Json* OptionalField(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

const Json& Array(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  return j;
}

int Int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) Fail(path, "integer out of range");
  return static_cast<int>(v);
}

Rat ParseRat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) {
    Fail(path, "expected a rational as an integer or a \"p/q\" string");
  }
  try {
    return Rat::Parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
}

std::vector<Rat> RatArray(const Json& j, const std::string& path) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < Array(j, path).size(); ++i) {
    out.push_back(ParseRat(j[i], Child(path, i)));
  }
  return out;
}

std::vector<int> IntArray(const Json& j, const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < Array(j, path).size(); ++i) {
    out.push_back(Int(j[i], Child(path, i)));
  }
  return out;
}

void ExpectSize(const Json& j, const std::string& path, std::size_t size) {
  if (j.size() != size) {
    Fail(path, "expected " + std::to_string(size) + " entries, got " +
                   std::to_string(j.size()));
  }
}

Json RatArrayJson(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const Rat& x : xs) out.push_back(EmitRat(x));
  return out;
}

Json IntervalJson(const Interval& iv) {
  return Json::array({EmitRat(iv.lo), EmitRat(iv.hi)});
}

Interval ParseInterval(const Json& j, const std::string& path) {
  ExpectSize(Array(j, path), path, 2);
  Interval iv{ParseRat(j[0], Child(path, 0)), ParseRat(j[1], Child(path, 1))};
  if (iv.hi < iv.lo) Fail(path, "interval end precedes its start");
  return iv;
}

std::vector<Interval> IntervalArray(const Json& j, const std::string& path) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < Array(j, path).size(); ++i) {
    out.push_back(ParseInterval(j[i], Child(path, i)));
  }
  return out;
}

ValuationOracle ParseValuation(const Json& j, const std::string& path, int m) {
  const Json& kind_json = Field(j, path, "kind");
  if (!kind_json.is_string()) Fail(Child(path, "kind"), "expected a string");
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "additive") {
      const std::string p = Child(path, "weights");
      const Json& w = Array(Field(j, path, "weights"), p);
      ExpectSize(w, p, m);
      return ValuationOracle::Additive(RatArray(w, p));
    }
    if (kind == "table") {
      const std::string p = Child(path, "values");
      const Json& v = Array(Field(j, path, "values"), p);
      if (m > 16) Fail(p, "table valuations support at most 16 goods");
      ExpectSize(v, p, std::size_t{1} << m);
      return ValuationOracle::Table(m, RatArray(v, p));
    }
    if (kind == "coverage") {
      const std::string pw = Child(path, "universe_weights");
      std::vector<Rat> weights =
          RatArray(Field(j, path, "universe_weights"), pw);
      const std::string pc = Child(path, "covers");
      const Json& c = Array(Field(j, path, "covers"), pc);
      ExpectSize(c, pc, m);
      std::vector<std::vector<int>> covers;
      for (std::size_t g = 0; g < c.size(); ++g) {
        covers.push_back(IntArray(c[g], Child(pc, g)));
      }
      return ValuationOracle::Coverage(std::move(weights), std::move(covers));
    }
  } catch (const Error& e) {
    Fail(path, e.what());
  }
  Fail(Child(path, "kind"), "unknown valuation kind \"" + kind +
                                "\" (expected additive, table or coverage)");
}

Json EmitValuation(const ValuationOracle& v) {
  if (const auto* a = v.additive()) {
    return {{"kind", "additive"}, {"weights", RatArrayJson(a->weights)}};
  }
  if (const auto* t = v.table()) {
    return {{"kind", "table"}, {"values", RatArrayJson(t->values)}};
  }
  if (const auto* c = v.coverage()) {
    return {{"kind", "coverage"},
            {"universe_weights", RatArrayJson(c->universe_weights)},
            {"covers", c->covers}};
  }
  throw Error(ErrorCode::kInvalidOracleKind,
              "surrogate valuations have no file encoding");
}

CakeValuation ParseCakeValuation(const Json& j, const std::string& path) {
  CakeValuation v{
      RatArray(Field(j, path, "breakpoints"), Child(path, "breakpoints")),
      RatArray(Field(j, path, "densities"), Child(path, "densities"))};
  const std::string problem = ValidateCakeValuation(v);
  if (!problem.empty()) Fail(path, problem);
  return v;
}

int ParseN(const Json& j) {
  const int n = Int(Field(j, "", "n"), "/n");
  if (n < 2) Fail("/n", "need at least two agents");
  return n;
}

std::string TypeOf(const Json& j) {
  const Json& t = Field(j, "", "type");
  if (!t.is_string()) Fail("/type", "expected a string");
  return t.get<std::string>();
}

}  // namespace

Json ParseText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Locate the byte offset reported by the parser.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(
        "line " + std::to_string(line) + ", column " + std::to_string(column),
        "invalid JSON");
  }
}

Instance ParseInstance(const Json& j) {
  if (!j.is_object()) Fail("", "expected an object");
  const std::string type = TypeOf(j);
  if (type == "rent") {
    const int n = ParseN(j);
    const Json& rows = Array(Field(j, "", "base_values"), "/base_values");
    ExpectSize(rows, "/base_values", n - 1);
    std::vector<std::vector<Rat>> base;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const std::string p = Child("/base_values", a);
      ExpectSize(Array(rows[a], p), p, n);
      base.push_back(RatArray(rows[a], p));
    }
    return RentInstance(std::move(base));
  }
  if (type == "goods") {
    const int n = ParseN(j);
    const int m = Int(Field(j, "", "m"), "/m");
    if (m < 0 || m > 64) Fail("/m", "expected 0..64 goods");
    const Json& vals = Array(Field(j, "", "valuations"), "/valuations");
    ExpectSize(vals, "/valuations", n - 1);
    std::vector<ValuationOracle> oracles;
    for (std::size_t a = 0; a < vals.size(); ++a) {
      oracles.push_back(ParseValuation(vals[a], Child("/valuations", a), m));
    }
    try {
      return GoodsInstance(n, m, std::move(oracles));
    } catch (const Error& e) {
      Fail("/valuations", e.what());
    }
  }
  if (type == "cake") {
    const int n = ParseN(j);
    const Json& vals = Array(Field(j, "", "valuations"), "/valuations");
    ExpectSize(vals, "/valuations", n - 1);
    std::vector<CakeValuation> cake;
    for (std::size_t a = 0; a < vals.size(); ++a) {
      cake.push_back(ParseCakeValuation(vals[a], Child("/valuations", a)));
    }
    return CakeInstance(n, std::move(cake));
  }
  Fail("/type",
       "unknown instance type \"" + type + "\" (expected rent, goods or cake)");
}

Json EmitInstance(const Instance& inst) {
  if (const auto* r = std::get_if<RentInstance>(&inst)) {
    Json rows = Json::array();
    for (int a = 0; a < r->num_known(); ++a) {
      Json row = Json::array();
      for (int c = 0; c < r->n(); ++c) row.push_back(EmitRat(r->base(a, c)));
      rows.push_back(std::move(row));
    }
    return {{"type", "rent"}, {"n", r->n()}, {"base_values", std::move(rows)}};
  }
  if (const auto* g = std::get_if<GoodsInstance>(&inst)) {
    Json vals = Json::array();
    for (const auto& v : g->valuations()) vals.push_back(EmitValuation(v));
    return {{"type", "goods"},
            {"n", g->n()},
            {"m", g->m()},
            {"valuations", std::move(vals)}};
  }
  const auto& c = std::get<CakeInstance>(inst);
  Json vals = Json::array();
  for (const auto& v : c.valuations()) {
    vals.push_back({{"breakpoints", RatArrayJson(v.breakpoints)},
                    {"densities", RatArrayJson(v.densities)}});
  }
  return {{"type", "cake"}, {"n", c.n()}, {"valuations", std::move(vals)}};
}

Json EmitRat(const Rat& x) { return x.ToString(); }

SolutionFile ParseSolution(const Json& j) {
  if (!j.is_object()) Fail("", "expected an object");
  SolutionFile s;
  const Json& kind = Field(j, "", "kind");
  if (!kind.is_string()) Fail("/kind", "expected a string");
  s.kind = kind.get<std::string>();
  static const char* kKinds[] = {"rent", "ef1", "cake-prop", "cake-ef", "mms"};
  if (std::find(std::begin(kKinds), std::end(kKinds), s.kind) ==
      std::end(kKinds)) {
    Fail("/kind", "unknown solution kind \"" + s.kind + "\"");
  }
  s.n = ParseN(j);
  const bool cake = s.kind == "cake-prop" || s.kind == "cake-ef";

  if (s.kind == "rent") {
    s.prices = RatArray(Field(j, "", "prices"), "/prices");
    ExpectSize(j["prices"], "/prices", s.n);
  } else {
    const Json& p = Array(Field(j, "", "partition"), "/partition");
    ExpectSize(p, "/partition", s.n);
    if (cake) {
      CakePartition cp;
      for (std::size_t i = 0; i < p.size(); ++i) {
        cp.bundles.push_back(IntervalArray(p[i], Child("/partition", i)));
      }
      s.cake_partition = std::move(cp);
    } else {
      Partition gp;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const std::string path = Child("/partition", i);
        std::vector<int> goods = IntArray(p[i], path);
        for (int g : goods) {
          if (g < 0 || g >= 64) Fail(path, "good index out of range");
        }
        gp.bundles.push_back(GoodSet::FromList(goods));
      }
      s.partition = std::move(gp);
    }
  }
  if (const Json* x = OptionalField(j, "pieces")) {
    s.pieces = IntervalArray(*x, "/pieces");
  }
  if (const Json* x = OptionalField(j, "order")) {
    s.order = IntArray(*x, "/order");
  }
  if (const Json* x = OptionalField(j, "sigma")) {
    s.sigma = IntArray(*x, "/sigma");
  }
  const Json& bij = Array(Field(j, "", "bijections"), "/bijections");
  for (std::size_t k = 0; k < bij.size(); ++k) {
    s.bijections.pi.push_back(IntArray(bij[k], Child("/bijections", k)));
  }
  const std::string bad = ValidateBijectionFamily(s.bijections, s.n);
  if (!bad.empty()) Fail("/bijections", bad);
  if (const Json* x = OptionalField(j, "eps")) s.eps = ParseRat(*x, "/eps");
  if (const Json* x = OptionalField(j, "ratio"))
    s.ratio = ParseRat(*x, "/ratio");
  if (s.kind == "cake-ef" && !s.eps) Fail("/eps", "missing field");
  if (s.kind == "mms" && !s.ratio) Fail("/ratio", "missing field");
  if (const Json* x = OptionalField(j, "meta")) {
    if (!x->is_object()) Fail("/meta", "expected an object");
    s.meta = *x;
  }
  return s;
}

Json EmitSolution(const SolutionFile& s) {
  Json j = {{"kind", s.kind}, {"n", s.n}};
  if (s.prices) j["prices"] = RatArrayJson(*s.prices);
  if (s.partition) {
    Json p = Json::array();
    for (const GoodSet& b : s.partition->bundles) p.push_back(b.Elements());
    j["partition"] = std::move(p);
  }
  if (s.cake_partition) {
    Json p = Json::array();
    for (const CakeBundle& b : s.cake_partition->bundles) {
      Json bundle = Json::array();
      for (const Interval& iv : b) bundle.push_back(IntervalJson(iv));
      p.push_back(std::move(bundle));
    }
    j["partition"] = std::move(p);
  }
  if (s.pieces) {
    Json p = Json::array();
    for (const Interval& iv : *s.pieces) p.push_back(IntervalJson(iv));
    j["pieces"] = std::move(p);
  }
  if (s.order) j["order"] = *s.order;
  if (s.sigma) j["sigma"] = *s.sigma;
  j["bijections"] = s.bijections.pi;
  if (s.eps) j["eps"] = EmitRat(*s.eps);
  if (s.ratio) j["ratio"] = EmitRat(*s.ratio);
  j["meta"] = s.meta;
  return j;
}

}  // namespace secretive::io
