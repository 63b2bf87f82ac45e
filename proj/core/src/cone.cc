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

#include "mcone/cone.h"

#include <algorithm>

#include "mcone/errors.h"

namespace mcone {

const char* VariantName(ConeVariant kind) {
  switch (kind) {
    case ConeVariant::kFull:
      return "full";
    case ConeVariant::kTipless:
      return "tipless";
    case ConeVariant::kBaseless:
      return "baseless";
    case ConeVariant::kTiplessBaseless:
      return "tipless-baseless";
  }
  return "?";
}

std::optional<ConeVariant> ParseVariant(const std::string& name) {
  if (name == "full") return ConeVariant::kFull;
  if (name == "tipless") return ConeVariant::kTipless;
  if (name == "baseless") return ConeVariant::kBaseless;
  if (name == "tipless-baseless" || name == "tipless_baseless") {
    return ConeVariant::kTiplessBaseless;
  }
  return std::nullopt;
}

ConeElement ConeMatroid::Element(int id) const {
  if (id < n_) return {ConeElement::Tag::kBase, id, 0};
  if (id == tip()) return {ConeElement::Tag::kTip, -1, 0};
  const int offset = id - n_;
  return {ConeElement::Tag::kFiber, offset / m_, offset % m_ + 1};
}

Subset ConeMatroid::FiberSet(int e) const {
  return Subset::FromBits(((uint64_t{1} << m_) - 1) << (n_ + e * m_));
}

Subset ConeMatroid::Fibers() const {
  return Subset::Full(tip()) - BaseSet();
}

Subset ConeMatroid::Q(Subset s) const {
  Subset out = s.With(tip());
  s.ForEach([&](int e) { out |= FiberSet(e); });
  return out;
}

Subset ConeMatroid::P(Subset s) const {
  Subset out = s & BaseSet();
  (s & Fibers()).ForEach([&](int x) { out = out.With((x - n_) / m_); });
  return out;
}

bool ConeMatroid::IsFlat(Subset f) const {
  const Subset base = f & BaseSet();
  if (f.Contains(tip())) return f == Q(base) && source_.IsFlat(base);
  if (!source_.IsFlat(base)) return false;
  for (int e = 0; e < n_; ++e) {
    if ((f & FiberSet(e).With(e)).Size() > 1) return false;
  }
  const Subset lifted = P(f & Fibers());
  return source_.Rank(base | lifted) == source_.Rank(base) + lifted.Size();
}

Subset ConeMatroid::VariantDeletion(ConeVariant kind) const {
  switch (kind) {
    case ConeVariant::kFull:
      return Subset();
    case ConeVariant::kTipless:
      return TipSet();
    case ConeVariant::kBaseless:
      return BaseSet();
    case ConeVariant::kTiplessBaseless:
      return BaseSet() | TipSet();
  }
  return Subset();
}

Matroid ConeMatroid::Variant(ConeVariant kind) const {
  if (kind == ConeVariant::kFull) return cone_;
  return cone_.Delete(VariantDeletion(kind));
}

ConeMatroid FreeMCone(const Matroid& source, int m, bool validate) {
  if (!source.IsLoopless()) throw SourceHasLoops();
  if (m < 1) throw ValidationError("cone multiplicity m must be positive");
  const int n = source.size();
  const long total = static_cast<long>(m + 1) * n + 1;
  if (total > kMaxGroundSetSize) {
    throw GroundSetTooLarge("the cone would have " + std::to_string(total) +
                            " elements; at most 64 are supported");
  }
  // A scratch cone to get at q() before the matroid exists.
  ConeMatroid shape(source, source, m);
  std::vector<CyclicFlat> family = source.cyclic_flats();
  const FlatLattice flats = source.Flats();
  for (size_t i = 0; i < flats.levels.size(); ++i) {
    for (Subset f : flats.levels[i]) {
      if (f.Empty()) continue;
      family.push_back({shape.Q(f), static_cast<int>(i) + 1});
    }
  }
  std::vector<std::string> names = source.names();
  for (int e = 0; e < n; ++e) {
    for (int j = 1; j <= m; ++j) {
      names.push_back(source.names()[e] + "#" + std::to_string(j));
    }
  }
  names.push_back("@tip");
  Matroid cone = Matroid::FromCyclicFlats(static_cast<int>(total),
                                          std::move(family), std::move(names),
                                          validate);
  return ConeMatroid(source, std::move(cone), m);
}

Matroid HiggsLift(const Matroid& m) {
  return Matroid::FromRankOracle(
      m.size(),
      [&](Subset x) { return std::min(m.Rank(x) + 1, x.Size()); },
      m.names());
}

}  // namespace mcone
