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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "fixtures.h"
#include "mcone/errors.h"
#include "oracles.h"

namespace mcone {
namespace {

using ::mcone::testing::Set;

// Least sorted line list over all relabelings of the points.
std::vector<uint64_t> CanonicalLines(int points, const std::vector<Subset>& lines) {
  std::vector<int> perm(points);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint64_t> best;
  do {
    std::vector<uint64_t> mapped;
    for (Subset l : lines) mapped.push_back(MapSubset(l, perm).bits());
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of families of >= 3-point proper subsets meeting
// pairwise in at most one point.
size_t CountLineSetClasses(int points) {
  std::vector<Subset> candidates;
  for (uint64_t bits = 0; bits < (uint64_t{1} << points); ++bits) {
    const Subset s = Subset::FromBits(bits);
    if (s.Size() >= 3 && s.Size() < points) candidates.push_back(s);
  }
  std::set<std::vector<uint64_t>> classes;
  std::vector<Subset> chosen;
  std::function<void(size_t)> extend = [&](size_t start) {
    classes.insert(CanonicalLines(points, chosen));
    for (size_t i = start; i < candidates.size(); ++i) {
      bool fits = true;
      for (Subset l : chosen) fits = fits && (l & candidates[i]).Size() <= 1;
      if (!fits) continue;
      chosen.push_back(candidates[i]);
      extend(i + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return classes.size();
}

TEST(CatalogTest, RunningExamples) {
  const Matroid m1 = TwoDisjointLines();
  const Matroid m2 = TwoMeetingLines();
  EXPECT_EQ(m1, Matroid::FromBases(6, testing::M1Bases()));
  EXPECT_EQ(m2, Matroid::FromBases(6, testing::M2Bases()));
}

TEST(CatalogTest, Constructions) {
  EXPECT_EQ(ParallelClasses(2, {2, 1}),
            Matroid::FromBases(3, testing::Transversal(3, 2, {0, 0, 1})));
  EXPECT_EQ(SparsePaving(6, 3, {Set({1, 2, 3}), Set({4, 5, 6})}), TwoDisjointLines());
  const Matroid sum = DirectSum(Matroid::Uniform(2, 3), Matroid::Uniform(1, 1));
  EXPECT_EQ(sum.size(), 4);
  EXPECT_EQ(sum.rank(), 3);
  EXPECT_EQ(sum.Coloops(), Set({4}));
  EXPECT_EQ(RankThreeFromLines(6, {Set({1, 2, 3}), Set({4, 5, 6})}, {1, 1, 1, 1, 1, 1}),
            TwoDisjointLines());
  EXPECT_THROW(RankThreeFromLines(4, {Set({1, 2, 3}), Set({1, 2, 4})}, {1, 1, 1, 1}),
               ValidationError);
}

TEST(CatalogTest, DoubledPointExamples) {
  const Matroid k4 = DoubledPointK4();
  const Matroid lines = DoubledPointTwoLines();
  EXPECT_EQ(k4.size(), 7);
  EXPECT_EQ(lines.size(), 7);
  EXPECT_EQ(k4.rank(), 3);
  EXPECT_EQ(lines.rank(), 3);
  EXPECT_TRUE(k4.IsLoopless());
  EXPECT_TRUE(lines.IsLoopless());
  // One parallel pair each.
  EXPECT_EQ(k4.FlatsOfRank(1).size(), 6u);
  EXPECT_EQ(lines.FlatsOfRank(1).size(), 6u);
}

TEST(CatalogTest, SmallCatalogShape) {
  const auto catalog = SmallLooplessCatalog();
  EXPECT_GE(catalog.size(), 20u);
  std::set<std::string> names;
  for (const auto& named : catalog) {
    names.insert(named.name);
    EXPECT_TRUE(named.matroid.IsLoopless()) << named.name;
    EXPECT_LE(named.matroid.size(), 6) << named.name;
  }
  EXPECT_EQ(names.size(), catalog.size());
  for (size_t i = 0; i < catalog.size(); ++i) {
    for (size_t j = i + 1; j < catalog.size(); ++j) {
      EXPECT_FALSE(FindIsomorphism(catalog[i].matroid, catalog[j].matroid))
          << catalog[i].name << " " << catalog[j].name;
    }
  }
}

TEST(CatalogTest, LineSetClassesMatchBruteForce) {
  for (int points = 3; points <= 6; ++points) {
    EXPECT_EQ(SimpleRankThreeLineSets(points).size(), CountLineSetClasses(points))
        << points;
  }
}

// Every loopless rank-3 catalog matroid on six elements shows up.
TEST(CatalogTest, LooplessRankThreeCoversCatalog) {
  const auto all = LooplessRankThree(6);
  for (const Matroid& m : all) {
    EXPECT_EQ(m.size(), 6);
    EXPECT_EQ(m.rank(), 3);
    EXPECT_TRUE(m.IsLoopless());
  }
  for (const auto& named : SmallLooplessCatalog()) {
    if (named.matroid.size() != 6 || named.matroid.rank() != 3) continue;
    bool found = false;
    for (const Matroid& m : all) {
      found = found || FindIsomorphism(m, named.matroid).has_value();
    }
    EXPECT_TRUE(found) << named.name;
  }
}

}  // namespace
}  // namespace mcone
