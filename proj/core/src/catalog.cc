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

#include "mcone/catalog.h"

#include <algorithm>
#include <map>

#include "mcone/errors.h"

namespace mcone {

Matroid TwoDisjointLines() {
  return Matroid::FromCyclicFlats(6, {{Subset(), 0},
                                      {Subset::Of({0, 1, 2}), 2},
                                      {Subset::Of({3, 4, 5}), 2},
                                      {Subset::Full(6), 3}});
}

Matroid TwoMeetingLines() {
  return Matroid::FromCyclicFlats(6, {{Subset(), 0},
                                      {Subset::Of({0, 1, 2}), 2},
                                      {Subset::Of({0, 3, 4}), 2},
                                      {Subset::Full(6), 3}});
}

Matroid DoubledPointK4() {
  // Points 0..5; point 5 is doubled.
  return RankThreeFromLines(
      6,
      {Subset::Of({0, 1, 2}), Subset::Of({0, 3, 5}), Subset::Of({1, 4, 5}),
       Subset::Of({2, 3, 4})},
      {1, 1, 1, 1, 1, 2});
}

Matroid DoubledPointTwoLines() {
  // Points 0..5; point 5 is doubled.
  return RankThreeFromLines(6, {Subset::Of({0, 1, 2, 3}), Subset::Of({0, 4, 5})},
                            {1, 1, 1, 1, 1, 2});
}

Matroid ParallelClasses(int k, const std::vector<int>& class_sizes) {
  std::vector<int> class_of;
  for (size_t i = 0; i < class_sizes.size(); ++i) {
    if (class_sizes[i] < 1) throw ValidationError("empty parallel class");
    class_of.insert(class_of.end(), class_sizes[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(class_of.size());
  if (n > kMaxGroundSetSize) throw GroundSetTooLarge("too many elements");
  return Matroid::FromRankOracle(n, [&](Subset x) {
    Subset hit;
    x.ForEach([&](int e) { hit = hit.With(class_of[e]); });
    return std::min(k, hit.Size());
  });
}

Matroid SparsePaving(int n, int k, const std::vector<Subset>& circuit_hyperplanes) {
  std::vector<CyclicFlat> family{{Subset(), 0}};
  for (Subset h : circuit_hyperplanes) family.push_back({h, k - 1});
  if (k < n) family.push_back({Subset::Full(n), k});
  return Matroid::FromCyclicFlats(n, std::move(family));
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxGroundSetSize) throw GroundSetTooLarge("direct sum too large");
  const Subset low = Subset::Full(a.size());
  std::vector<std::string> names = a.names();
  for (const std::string& name : b.names()) {
    names.push_back(std::find(names.begin(), names.end(), name) == names.end()
                        ? name
                        : name + "'");
  }
  return Matroid::FromRankOracle(
      n,
      [&](Subset x) {
        return a.Rank(x & low) +
               b.Rank(Subset::FromBits((x - low).bits() >> a.size()));
      },
      std::move(names));
}

Matroid RankThreeFromLines(int num_points, const std::vector<Subset>& lines,
                           const std::vector<int>& class_sizes) {
  if (static_cast<int>(class_sizes.size()) != num_points) {
    throw ValidationError("one class size per point is needed");
  }
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].Size() < 3 || !lines[i].IsSubsetOf(Subset::Full(num_points))) {
      throw ValidationError("a line needs at least three of the points");
    }
    for (size_t j = 0; j < i; ++j) {
      if ((lines[i] & lines[j]).Size() > 1) {
        throw ValidationError("two lines share two points");
      }
    }
  }
  std::vector<int> point_of;
  for (int i = 0; i < num_points; ++i) {
    if (class_sizes[i] < 1) throw ValidationError("empty parallel class");
    point_of.insert(point_of.end(), class_sizes[i], i);
  }
  const int n = static_cast<int>(point_of.size());
  if (n > kMaxGroundSetSize) throw GroundSetTooLarge("too many elements");
  return Matroid::FromRankOracle(n, [&](Subset x) {
    Subset hit;
    x.ForEach([&](int e) { hit = hit.With(point_of[e]); });
    if (hit.Size() <= 2) return hit.Size();
    for (Subset line : lines) {
      if (hit.IsSubsetOf(line)) return 2;
    }
    return 3;
  });
}

std::vector<NamedMatroid> SmallLooplessCatalog() {
  std::vector<NamedMatroid> out;
  for (auto [k, n] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}, {2, 4}, {3, 4},
           {2, 5}, {3, 5}, {3, 6}, {4, 6}}) {
    out.push_back({"U" + std::to_string(k) + "," + std::to_string(n),
                   Matroid::Uniform(k, n)});
  }
  out.push_back({"rank 2, classes 2+1", ParallelClasses(2, {2, 1})});
  out.push_back({"rank 2, classes 2+2", ParallelClasses(2, {2, 2})});
  out.push_back({"rank 2, classes 3+1+1", ParallelClasses(2, {3, 1, 1})});
  out.push_back({"rank 2, classes 2+2+2", ParallelClasses(2, {2, 2, 2})});
  out.push_back({"rank 3, classes 2+1+1", ParallelClasses(3, {2, 1, 1})});
  out.push_back({"rank 3, classes 2+2+1+1", ParallelClasses(3, {2, 2, 1, 1})});
  out.push_back({"two disjoint lines", TwoDisjointLines()});
  out.push_back({"two meeting lines", TwoMeetingLines()});
  out.push_back({"M(K4)", SparsePaving(6, 3,
                                       {Subset::Of({0, 1, 2}), Subset::Of({0, 3, 4}),
                                        Subset::Of({1, 3, 5}), Subset::Of({2, 4, 5})})});
  out.push_back({"rank 3, one 3-point line on 5",
                 SparsePaving(5, 3, {Subset::Of({0, 1, 2})})});
  out.push_back({"rank 4, two 4-point circuit-hyperplanes",
                 SparsePaving(6, 4, {Subset::Of({0, 1, 2, 3}), Subset::Of({2, 3, 4, 5})})});
  out.push_back({"U2,3 + coloop", DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(1, 1))});
  out.push_back({"U2,4 + coloop", DirectSum(Matroid::Uniform(2, 4), Matroid::Uniform(1, 1))});
  out.push_back({"U2,3 + U2,3", DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(2, 3))});
  return out;
}

namespace {

// Degree sequence and sorted line sizes; equal for isomorphic line sets.
std::vector<int> LineSignature(int num_points, const std::vector<Subset>& lines) {
  std::vector<int> degree(num_points, 0);
  std::vector<int> sizes;
  for (Subset line : lines) {
    sizes.push_back(line.Size());
    line.ForEach([&](int p) { ++degree[p]; });
  }
  std::sort(degree.begin(), degree.end());
  std::sort(sizes.begin(), sizes.end());
  degree.push_back(-1);
  degree.insert(degree.end(), sizes.begin(), sizes.end());
  return degree;
}

}  // namespace

std::vector<std::vector<Subset>> SimpleRankThreeLineSets(int num_points) {
  std::vector<std::vector<Subset>> out;
  if (num_points < 3) return out;
  std::vector<Subset> candidates;
  for (uint64_t bits = 0; bits < (uint64_t{1} << num_points); ++bits) {
    const Subset s = Subset::FromBits(bits);
    if (s.Size() >= 3 && s.Size() < num_points) candidates.push_back(s);
  }
  std::sort(candidates.begin(), candidates.end(), CanonicalLess);
  std::map<std::vector<int>, std::vector<size_t>> by_signature;
  std::vector<Matroid> representatives;
  std::vector<Subset> chosen;
  const std::vector<int> ones(num_points, 1);
  auto consider = [&] {
    auto& bucket = by_signature[LineSignature(num_points, chosen)];
    const Matroid m = RankThreeFromLines(num_points, chosen, ones);
    for (size_t index : bucket) {
      if (FindIsomorphism(m, representatives[index])) return;
    }
    bucket.push_back(representatives.size());
    representatives.push_back(m);
    out.push_back(chosen);
  };
  // Lines are added in canonical order; a new line may share at most one
  // point with each chosen line.
  auto extend = [&](auto&& self, size_t start) -> void {
    consider();
    for (size_t i = start; i < candidates.size(); ++i) {
      bool fits = true;
      for (Subset line : chosen) fits = fits && (line & candidates[i]).Size() <= 1;
      if (!fits) continue;
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Matroid> LooplessRankThree(int n) {
  std::vector<Matroid> out;
  for (int points = 3; points <= n; ++points) {
    const auto line_sets = SimpleRankThreeLineSets(points);
    // Compositions of n into `points` positive parts.
    std::vector<int> sizes(points, 1);
    sizes.back() = n - points + 1;
    auto emit = [&](auto&& self, int index, int remaining) -> void {
      if (index == points - 1) {
        sizes[index] = remaining;
        for (const auto& lines : line_sets) {
          out.push_back(RankThreeFromLines(points, lines, sizes));
        }
        return;
      }
      for (int s = 1; s <= remaining - (points - 1 - index); ++s) {
        sizes[index] = s;
        self(self, index + 1, remaining - s);
      }
    };
    emit(emit, 0, n);
  }
  return out;
}

}  // namespace mcone
