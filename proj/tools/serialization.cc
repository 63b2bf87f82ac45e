// Copyright 2023 The Authors.
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

#include "serialization.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "mcone/errors.h"

namespace mcone::cli {

namespace {

[[noreturn]] void Fail(const std::string& what) { throw ParseError(what); }

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object()) Fail(std::string("expected an object holding \"") + key + "\"");
  auto it = json.find(key);
  if (it == json.end()) Fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int IntField(const Json& json, const char* key) {
  const Json& v = Field(json, key);
  if (!v.is_number_integer()) Fail(std::string("field \"") + key + "\" must be an integer");
  const auto x = v.get<int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    Fail(std::string("field \"") + key + "\" is out of range");
  }
  return static_cast<int>(x);
}

const Json& ArrayField(const Json& json, const char* key) {
  const Json& v = Field(json, key);
  if (!v.is_array()) Fail(std::string("field \"") + key + "\" must be an array");
  return v;
}

void ExpectKind(const Json& json, const char* kind) {
  if (json.is_object() && json.contains("kind")) {
    const Json& k = json["kind"];
    if (!k.is_string() || k.get<std::string>() != kind) {
      Fail(std::string("expected a document of kind \"") + kind + "\"");
    }
  }
}

Subset SubsetFromJson(const Json& json, const std::map<std::string, int>& ids) {
  if (!json.is_array()) Fail("a set must be an array of element names");
  Subset out;
  for (const Json& item : json) {
    std::string name;
    if (item.is_string()) {
      name = item.get<std::string>();
    } else if (item.is_number_integer()) {
      name = std::to_string(item.get<int64_t>());
    } else {
      Fail("set members must be element names");
    }
    auto it = ids.find(name);
    if (it == ids.end()) {
      throw ValidationError("element \"" + name + "\" is not in the ground set");
    }
    out = out.With(it->second);
  }
  return out;
}

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    size_t line = 1;
    size_t column = 1;
    const size_t end = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + e.what());
  }
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

MatroidDocument ParseMatroidDocument(const Json& json) {
  MatroidDocument doc;
  if (!json.is_object()) Fail("a matroid document must be an object");
  if (json.contains("name")) {
    if (!json["name"].is_string()) Fail("\"name\" must be a string");
    doc.name = json["name"].get<std::string>();
  }
  for (const Json& item : ArrayField(json, "ground_set")) {
    if (item.is_string()) {
      doc.ground_set.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      doc.ground_set.push_back(std::to_string(item.get<int64_t>()));
    } else {
      Fail("ground-set entries must be names");
    }
  }
  if (static_cast<int>(doc.ground_set.size()) > kMaxGroundSetSize) {
    throw GroundSetTooLarge("at most 64 elements are supported");
  }
  std::map<std::string, int> ids;
  for (size_t i = 0; i < doc.ground_set.size(); ++i) {
    if (!ids.emplace(doc.ground_set[i], static_cast<int>(i)).second) {
      throw ValidationError("element name \"" + doc.ground_set[i] + "\" repeats");
    }
  }
  const bool has_flats = json.contains("cyclic_flats");
  const bool has_bases = json.contains("bases");
  if (has_flats == has_bases) {
    Fail("exactly one of \"cyclic_flats\" and \"bases\" is required");
  }
  if (has_flats) {
    doc.cyclic_flats.emplace();
    for (const Json& z : ArrayField(json, "cyclic_flats")) {
      doc.cyclic_flats->push_back({SubsetFromJson(Field(z, "set"), ids), IntField(z, "rank")});
    }
  } else {
    doc.bases.emplace();
    for (const Json& b : ArrayField(json, "bases")) {
      doc.bases->push_back(SubsetFromJson(b, ids));
    }
  }
  return doc;
}

Matroid BuildMatroid(const MatroidDocument& doc) {
  const int n = static_cast<int>(doc.ground_set.size());
  if (doc.cyclic_flats) {
    return Matroid::FromCyclicFlats(n, *doc.cyclic_flats, doc.ground_set);
  }
  return Matroid::FromBases(n, *doc.bases, doc.ground_set);
}

Matroid MatroidFromJson(const Json& json) {
  return BuildMatroid(ParseMatroidDocument(json));
}

Json SubsetToJson(Subset s, const std::vector<std::string>& names) {
  Json out = Json::array();
  s.ForEach([&](int e) { out.push_back(names[e]); });
  return out;
}

Json MatroidToJson(const Matroid& m, const std::optional<std::string>& name) {
  Json out;
  if (name) out["name"] = *name;
  out["ground_set"] = m.names();
  Json flats = Json::array();
  for (const CyclicFlat& z : m.cyclic_flats()) {
    flats.push_back({{"set", SubsetToJson(z.set, m.names())}, {"rank", z.rank}});
  }
  out["cyclic_flats"] = std::move(flats);
  return out;
}

Configuration ConfigurationFromJson(const Json& json) {
  ExpectKind(json, "config");
  const Json& nodes = ArrayField(json, "nodes");
  const int count = static_cast<int>(nodes.size());
  Configuration c;
  c.size.assign(count, -1);
  c.rho.assign(count, -1);
  std::vector<char> seen(count, 0);
  for (const Json& node : nodes) {
    const int id = IntField(node, "id");
    if (id < 0 || id >= count || seen[id]) {
      throw ValidationError("node ids must be 0..N-1 without repeats");
    }
    seen[id] = 1;
    c.size[id] = IntField(node, "size");
    c.rho[id] = IntField(node, "rank");
    if (c.size[id] < 0 || c.rho[id] < 0) {
      throw ValidationError("node sizes and ranks must be nonnegative");
    }
  }
  for (const Json& cover : ArrayField(json, "covers")) {
    if (!cover.is_array() || cover.size() != 2 || !cover[0].is_number_integer() ||
        !cover[1].is_number_integer()) {
      Fail("a cover is a pair of node ids");
    }
    const int lower = cover[0].get<int>();
    const int upper = cover[1].get<int>();
    if (lower < 0 || lower >= count || upper < 0 || upper >= count) {
      throw ValidationError("cover refers to an unknown node");
    }
    c.covers.push_back({lower, upper});
  }
  std::sort(c.covers.begin(), c.covers.end());
  if (json.contains("coloops")) c.coloops = IntField(json, "coloops");
  CheckConfiguration(c);
  return c;
}

Json ConfigurationToJson(const Configuration& c) {
  Json out;
  out["kind"] = "config";
  Json nodes = Json::array();
  for (int v = 0; v < c.num_nodes(); ++v) {
    nodes.push_back({{"id", v}, {"size", c.size[v]}, {"rank", c.rho[v]}});
  }
  out["nodes"] = std::move(nodes);
  Json covers = Json::array();
  for (const auto& [lower, upper] : c.covers) covers.push_back({lower, upper});
  out["covers"] = std::move(covers);
  out["coloops"] = c.coloops;
  return out;
}

Json CountToJson(const Count& c) {
  if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max()) {
    return c.convert_to<int64_t>();
  }
  return c.str();
}

Count CountFromJson(const Json& json) {
  if (json.is_number_integer()) {
    if (json.is_number_unsigned()) return Count(json.get<uint64_t>());
    return Count(json.get<int64_t>());
  }
  if (json.is_string()) {
    const std::string s = json.get<std::string>();
    const size_t digits_from = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == digits_from ||
        s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      Fail("\"" + s + "\" is not an integer");
    }
    return Count(s);
  }
  Fail("a count must be an integer or a decimal string");
}

Json GInvariantToJson(const GInvariant& g) {
  Json counts = Json::object();
  for (const auto& [seq, count] : g.counts) counts[seq] = CountToJson(count);
  return {{"kind", "g"}, {"n", g.n}, {"k", g.k}, {"counts", std::move(counts)}};
}

GInvariant GInvariantFromJson(const Json& json) {
  ExpectKind(json, "g");
  GInvariant g;
  g.n = IntField(json, "n");
  g.k = IntField(json, "k");
  const Json& counts = Field(json, "counts");
  if (!counts.is_object()) Fail("\"counts\" must be an object");
  for (const auto& [seq, count] : counts.items()) g.counts[seq] = CountFromJson(count);
  return g;
}

Json CatenaryToJson(const CatenaryData& cat) {
  Json counts = Json::array();
  for (const auto& [a, count] : cat.counts) {
    counts.push_back({{"composition", a}, {"count", CountToJson(count)}});
  }
  return {{"kind", "catenary"}, {"n", cat.n}, {"k", cat.k}, {"counts", std::move(counts)}};
}

CatenaryData CatenaryFromJson(const Json& json) {
  ExpectKind(json, "catenary");
  CatenaryData cat;
  cat.n = IntField(json, "n");
  cat.k = IntField(json, "k");
  for (const Json& entry : ArrayField(json, "counts")) {
    Composition a;
    for (const Json& part : ArrayField(entry, "composition")) {
      if (!part.is_number_integer()) Fail("composition parts must be integers");
      a.push_back(part.get<int>());
    }
    cat.counts[a] += CountFromJson(Field(entry, "count"));
  }
  return cat;
}

Json TutteToJson(const TuttePolynomial& t) {
  Json coefficients = Json::array();
  for (const auto& [exponents, c] : t.coefficients) {
    coefficients.push_back(
        {{"x", exponents.first}, {"y", exponents.second}, {"c", CountToJson(c)}});
  }
  return {{"kind", "tutte"}, {"coefficients", std::move(coefficients)}};
}

TuttePolynomial TutteFromJson(const Json& json) {
  ExpectKind(json, "tutte");
  TuttePolynomial t;
  for (const Json& entry : ArrayField(json, "coefficients")) {
    t.coefficients[{IntField(entry, "x"), IntField(entry, "y")}] +=
        CountFromJson(Field(entry, "c"));
  }
  std::erase_if(t.coefficients, [](const auto& kv) { return kv.second == 0; });
  return t;
}

Json CharacteristicToJson(const Polynomial& p) {
  Json coefficients = Json::array();
  for (const Count& c : p.coefficients) coefficients.push_back(CountToJson(c));
  return {{"kind", "characteristic"}, {"coefficients", std::move(coefficients)}};
}

Polynomial CharacteristicFromJson(const Json& json) {
  ExpectKind(json, "characteristic");
  Polynomial p;
  for (const Json& c : ArrayField(json, "coefficients")) {
    p.coefficients.push_back(CountFromJson(c));
  }
  return p;
}

Json SrcToJson(const SrcData& src) {
  Json counts = Json::array();
  for (const auto& [key, count] : src.counts) {
    counts.push_back(
        {{"s", key[0]}, {"t", key[1]}, {"c", key[2]}, {"count", CountToJson(count)}});
  }
  return {{"kind", "src"}, {"counts", std::move(counts)}};
}

SrcData SrcFromJson(const Json& json) {
  ExpectKind(json, "src");
  SrcData src;
  for (const Json& entry : ArrayField(json, "counts")) {
    src.counts[{IntField(entry, "s"), IntField(entry, "t"), IntField(entry, "c")}] +=
        CountFromJson(Field(entry, "count"));
  }
  return src;
}

Json CertificateToJson(const Certificate& cert) {
  Json legs = Json::array();
  for (const CertificateLeg& leg : cert.legs) {
    legs.push_back({{"claim", leg.claim},
                    {"method", leg.method},
                    {"pass", leg.pass},
                    {"witness", leg.witness}});
  }
  return {{"m", cert.m}, {"pass", cert.AllPass()}, {"legs", std::move(legs)}};
}

}  // namespace mcone::cli
