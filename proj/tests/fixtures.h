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

// Test matroids given by explicit basis lists, written from their textbook
// definitions, plus shorthand for the running examples.

#ifndef MCONE_TESTS_FIXTURES_H_
#define MCONE_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "mcone/matroid.h"

namespace mcone::testing {

struct BasesFixture {
  std::string name;
  int n = 0;
  std::vector<Subset> bases;
};

// Elements named "1".."n" are ids 0..n-1.
inline Subset Set(std::initializer_list<int> one_based) {
  Subset s;
  for (int e : one_based) s = s.With(e - 1);
  return s;
}

inline std::vector<Subset> KSubsets(int n, int k) {
  std::vector<Subset> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    if (Subset::FromBits(bits).Size() == k) out.push_back(Subset::FromBits(bits));
  }
  return out;
}

// All k-subsets of [n] except the listed circuit-hyperplanes.
inline std::vector<Subset> KSubsetsExcept(int n, int k,
                                          const std::vector<Subset>& removed) {
  std::vector<Subset> out;
  for (Subset b : KSubsets(n, k)) {
    bool keep = true;
    for (Subset r : removed) keep = keep && b != r;
    if (keep) out.push_back(b);
  }
  return out;
}

// Rank-k sets picking at most one element per class; class_of[e] < 0 marks a
// loop.
inline std::vector<Subset> Transversal(int n, int k,
                                       const std::vector<int>& class_of) {
  std::vector<Subset> out;
  for (Subset b : KSubsets(n, k)) {
    std::vector<int> seen;
    bool ok = true;
    b.ForEach([&](int e) {
      if (class_of[e] < 0) ok = false;
      for (int c : seen) ok = ok && c != class_of[e];
      seen.push_back(class_of[e]);
    });
    if (ok) out.push_back(b);
  }
  return out;
}

// Spanning trees of a graph on `vertices` vertices.
inline std::vector<Subset> SpanningTrees(
    int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<Subset> out;
  for (Subset b : KSubsets(n, vertices - 1)) {
    std::vector<int> parent(vertices);
    for (int v = 0; v < vertices; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    bool acyclic = true;
    b.ForEach([&](int e) {
      const int x = find(edges[e].first);
      const int y = find(edges[e].second);
      if (x == y) acyclic = false;
      parent[x] = y;
    });
    if (acyclic) out.push_back(b);
  }
  return out;
}

inline std::vector<Subset> M1Bases() {
  return KSubsetsExcept(6, 3, {Set({1, 2, 3}), Set({4, 5, 6})});
}

inline std::vector<Subset> M2Bases() {
  return KSubsetsExcept(6, 3, {Set({1, 2, 3}), Set({1, 4, 5})});
}

inline std::vector<BasesFixture> BasesFixtures() {
  std::vector<BasesFixture> out;
  out.push_back({"U0,0", 0, {Subset()}});
  out.push_back({"U1,1", 1, {Set({1})}});
  out.push_back({"U2,3", 3, KSubsets(3, 2)});
  out.push_back({"U2,4", 4, KSubsets(4, 2)});
  out.push_back({"U3,5", 5, KSubsets(5, 3)});
  out.push_back({"U0,2", 2, {Subset()}});
  out.push_back({"M1", 6, M1Bases()});
  out.push_back({"M2", 6, M2Bases()});
  out.push_back({"parallel pair and point", 3, Transversal(3, 2, {0, 0, 1})});
  out.push_back({"loop and U2,3", 4, Transversal(4, 2, {0, 1, 2, -1})});
  out.push_back({"rank 2, classes 2+2+1", 5,
                 Transversal(5, 2, {0, 0, 1, 1, 2})});
  out.push_back({"M(K4)", 6,
                 SpanningTrees(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                   {2, 3}})});
  out.push_back({"M(K4) with a doubled edge", 7,
                 SpanningTrees(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                   {2, 3}, {2, 3}})});
  out.push_back({"square with a diagonal", 5,
                 SpanningTrees(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})});
  out.push_back({"rank 3 on 7, triangle of lines", 7,
                 KSubsetsExcept(7, 3, {Set({1, 2, 3}), Set({3, 4, 5}),
                                       Set({5, 6, 1})})});
  out.push_back({"rank 4 on 8, two circuit-hyperplanes", 8,
                 KSubsetsExcept(8, 4, {Set({1, 2, 3, 4}), Set({5, 6, 7, 8})})});
  return out;
}

}  // namespace mcone::testing

#endif  // MCONE_TESTS_FIXTURES_H_
