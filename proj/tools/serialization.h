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

// Canonical JSON documents for matroids, configurations, invariants, and
// certificates. Object keys are sorted, sets are listed in element order,
// cyclic flats in canonical order, and integers beyond 64 bits are written
// as decimal strings, so equal values serialize to equal bytes.

#ifndef MCONE_TOOLS_SERIALIZATION_H_
#define MCONE_TOOLS_SERIALIZATION_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcone/invariants.h"
#include "mcone/matroid.h"
#include "mcone/transfer.h"
#include "mcone/zlattice.h"

namespace mcone::cli {

using Json = nlohmann::json;

// Parses JSON text; throws ParseError carrying the line and column.
Json ParseJson(const std::string& text);
// Two-space indented, newline terminated.
std::string Dump(const Json& json);

// A matroid document before validation.
struct MatroidDocument {
  std::optional<std::string> name;
  std::vector<std::string> ground_set;
  std::optional<std::vector<CyclicFlat>> cyclic_flats;
  std::optional<std::vector<Subset>> bases;
};

MatroidDocument ParseMatroidDocument(const Json& json);
// Validates through Matroid::FromCyclicFlats or Matroid::FromBases.
Matroid BuildMatroid(const MatroidDocument& doc);
Matroid MatroidFromJson(const Json& json);
Json MatroidToJson(const Matroid& m, const std::optional<std::string>& name = {});

Json SubsetToJson(Subset s, const std::vector<std::string>& names);

Configuration ConfigurationFromJson(const Json& json);
Json ConfigurationToJson(const Configuration& c);

Json CountToJson(const Count& c);
Count CountFromJson(const Json& json);

Json GInvariantToJson(const GInvariant& g);
GInvariant GInvariantFromJson(const Json& json);
Json CatenaryToJson(const CatenaryData& cat);
CatenaryData CatenaryFromJson(const Json& json);
Json TutteToJson(const TuttePolynomial& t);
TuttePolynomial TutteFromJson(const Json& json);
Json CharacteristicToJson(const Polynomial& p);
Polynomial CharacteristicFromJson(const Json& json);
Json SrcToJson(const SrcData& src);
SrcData SrcFromJson(const Json& json);

Json CertificateToJson(const Certificate& cert);

}  // namespace mcone::cli

#endif  // MCONE_TOOLS_SERIALIZATION_H_
