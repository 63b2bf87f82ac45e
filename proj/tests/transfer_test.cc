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

#include "mcone/transfer.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fixtures.h"
#include "mcone/catalog.h"
#include "mcone/errors.h"
#include "oracles.h"

namespace mcone {
namespace {

using ::mcone::testing::BasesFixtures;

constexpr ConeVariant kAllKinds[] = {ConeVariant::kFull, ConeVariant::kTipless,
                                     ConeVariant::kBaseless,
                                     ConeVariant::kTiplessBaseless};

bool FlagLess(const Flag& a, const Flag& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      CanonicalLess);
}

std::vector<NamedMatroid> SourcesUpTo(int n) {
  std::vector<NamedMatroid> out;
  for (auto& named : SmallLooplessCatalog()) {
    if (named.matroid.size() <= n) out.push_back(named);
  }
  return out;
}

TEST(FlagBijectionTest, PointExamples) {
  const ConeMatroid q = FreeMCone(Matroid::Uniform(1, 1), 1);
  const int fiber = q.Fiber(0, 1);
  const Subset all = q.matroid().ground_set();
  const FlagTuple with_fiber{{Subset(), Subset::Of({0})}, 1, Subset::Of({1}), {fiber}};
  EXPECT_EQ(FlagBijection(q, with_fiber),
            (Flag{Subset(), Subset::Of({fiber}), all}));
  const FlagTuple tip_first{{Subset(), Subset::Of({0})}, 0, Subset(), {}};
  EXPECT_EQ(FlagBijection(q, tip_first), (Flag{Subset(), q.TipSet(), all}));
  EXPECT_EQ(FlagBijectionInverse(q, FlagBijection(q, with_fiber)), with_fiber);
  EXPECT_EQ(EnumerateFlagTuples(q).size(), 3u);
}

TEST(FlagBijectionTest, RejectsBadTuples) {
  const ConeMatroid q = FreeMCone(TwoDisjointLines(), 1);
  const Flag flag = Flags(q.source()).front();
  // A base element where a fiber is needed.
  EXPECT_THROW(FlagBijection(q, FlagTuple{flag, 1, Subset::Of({1}), {0}}),
               InvalidTuple);
  // C not inside [h].
  EXPECT_THROW(FlagBijection(q, FlagTuple{flag, 1, Subset::Of({2}), {}}),
               InvalidTuple);
  // Fiber over an element outside X_1 - X_0.
  int wrong = flag[1].Min() == 0 ? q.Fiber(5, 1) : q.Fiber(0, 1);
  EXPECT_THROW(FlagBijection(q, FlagTuple{flag, 1, Subset::Of({1}), {wrong}}),
               InvalidTuple);
  EXPECT_THROW(FlagBijectionInverse(q, Flag{Subset()}), InvalidTuple);
}

TEST(FlagBijectionTest, BijectiveWithMatchingCompositions) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& named : SourcesUpTo(m == 1 ? 6 : 5)) {
      SCOPED_TRACE(named.name + " m=" + std::to_string(m));
      const ConeMatroid q = FreeMCone(named.matroid, m);
      const auto tuples = EnumerateFlagTuples(q);
      std::vector<Flag> images;
      for (const FlagTuple& t : tuples) {
        const Flag f = FlagBijection(q, t);
        images.push_back(f);
        ASSERT_EQ(FlagBijectionInverse(q, f), t);
        ASSERT_EQ(CompositionOf(f),
                  ConeComposition(CompositionOf(t.flag), t.h, t.steps, m,
                                  ConeVariant::kFull));
      }
      std::sort(images.begin(), images.end(), FlagLess);
      EXPECT_EQ(std::adjacent_find(images.begin(), images.end()), images.end());
      auto flags = Flags(q.matroid());
      std::sort(flags.begin(), flags.end(), FlagLess);
      EXPECT_EQ(images, flags);
    }
  }
}

TEST(CatenaryOfConeTest, PointExample) {
  CatenaryData point;
  point.n = 1;
  point.k = 1;
  point.counts = {{{0, 1}, 1}};
  const CatenaryData cone = CatenaryOfCone(point, 1, ConeVariant::kFull);
  EXPECT_EQ(cone.n, 3);
  EXPECT_EQ(cone.k, 2);
  EXPECT_EQ(cone.counts, (std::map<Composition, Count>{{{0, 1, 2}, 3}}));
}

TEST(CatenaryOfConeTest, FreeMatroidSpecialCase) {
  for (int k = 1; k <= 4; ++k) {
    const CatenaryData cat = ComputeCatenaryData(Matroid::Uniform(k, k));
    EXPECT_EQ(CatenaryOfCone(cat, 1, ConeVariant::kTiplessBaseless), cat);
  }
}

TEST(CatenaryOfConeTest, RejectsMalformedInput) {
  CatenaryData bad;
  bad.n = 3;
  bad.k = 2;
  bad.counts = {{{0, 0, 3}, 1}};
  EXPECT_THROW(CatenaryOfCone(bad, 1, ConeVariant::kFull), MalformedCatenary);
  CatenaryData sum;
  sum.n = 3;
  sum.k = 2;
  sum.counts = {{{0, 1, 1}, 1}};
  EXPECT_THROW(CatenaryOfCone(sum, 1, ConeVariant::kFull), MalformedCatenary);
  EXPECT_THROW(CatenaryOfCone(ComputeCatenaryData(TwoDisjointLines()), 0,
                              ConeVariant::kFull),
               ValidationError);
}

TEST(CatenaryOfConeTest, MatchesEnumerationForAllKinds) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& named : SourcesUpTo(6)) {
      const CatenaryData source = ComputeCatenaryData(named.matroid);
      const ConeMatroid q = FreeMCone(named.matroid, m);
      for (ConeVariant kind : kAllKinds) {
        EXPECT_EQ(CatenaryOfCone(source, m, kind),
                  ComputeCatenaryData(q.Variant(kind)))
            << named.name << " m=" << m << " " << VariantName(kind);
      }
    }
  }
}

TEST(CatenaryOfConeTest, TwoLinesPairsAgreeForAllKinds) {
  const CatenaryData a = ComputeCatenaryData(TwoDisjointLines());
  const CatenaryData b = ComputeCatenaryData(TwoMeetingLines());
  for (int m = 1; m <= 2; ++m) {
    for (ConeVariant kind : kAllKinds) {
      EXPECT_EQ(CatenaryOfCone(a, m, kind), CatenaryOfCone(b, m, kind));
    }
  }
}

TEST(TutteOfConeTest, PointExample) {
  const TuttePolynomial t =
      TutteOfConeFromSrc(ComputeSrcData(Matroid::Uniform(1, 1)), 1, ConeVariant::kFull);
  EXPECT_EQ(t, ComputeTutte(Matroid::Uniform(2, 3)));
}

TEST(TutteOfConeTest, RejectsMalformedInput) {
  SrcData bad;
  bad.counts = {{{1, 2, 0}, 1}};
  EXPECT_THROW(TutteOfConeFromSrc(bad, 1, ConeVariant::kFull), MalformedSrc);
  SrcData total;
  total.counts = {{{0, 0, 0}, 1}, {{1, 1, 1}, 2}};
  EXPECT_THROW(TutteOfConeFromSrc(total, 1, ConeVariant::kFull), MalformedSrc);
}

TEST(TutteOfConeTest, MatchesDirectTutteForAllKinds) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& named : SourcesUpTo(m == 1 ? 6 : 5)) {
      const SrcData src = ComputeSrcData(named.matroid);
      const ConeMatroid q = FreeMCone(named.matroid, m);
      for (ConeVariant kind : kAllKinds) {
        EXPECT_EQ(TutteOfConeFromSrc(src, m, kind), ComputeTutte(q.Variant(kind)))
            << named.name << " m=" << m << " " << VariantName(kind);
      }
    }
  }
}

// Counts the permutations whose first s elements have rank t and whose
// positions s-c+1..s all raise the rank.
Count PermutationClassByEnumeration(const Matroid& m, int s, int t, int c) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Count total = 0;
  do {
    Subset prefix;
    int ones = 0;
    bool tail = true;
    for (int i = 0; i < s; ++i) {
      const int before = m.Rank(prefix);
      prefix = prefix.With(perm[i]);
      const bool up = m.Rank(prefix) > before;
      ones += up;
      if (i >= s - c && !up) tail = false;
    }
    if (ones == t && tail) total += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(SrcFromGTest, PermutationClassSizesMatchEnumeration) {
  for (const Matroid& m : {TwoDisjointLines(), Matroid::Uniform(2, 4),
                           ParallelClasses(2, {2, 1})}) {
    const GInvariant g = ComputeGInvariant(m);
    for (int s = 0; s <= m.size(); ++s) {
      for (int t = 0; t <= std::min(s, m.rank()); ++t) {
        for (int c = 0; c <= t; ++c) {
          EXPECT_EQ(PermutationClassSize(g, s, t, c),
                    PermutationClassByEnumeration(m, s, t, c))
              << s << " " << t << " " << c;
        }
      }
    }
  }
}

TEST(SrcFromGTest, Examples) {
  const SrcData point = SrcFromG(ComputeGInvariant(Matroid::Uniform(1, 1)));
  EXPECT_EQ(point.counts, (std::map<SrcKey, Count>{{{0, 0, 0}, 1}, {{1, 1, 1}, 1}}));
  EXPECT_EQ(SrcFromG(ComputeGInvariant(TwoDisjointLines())),
            ComputeSrcData(TwoDisjointLines()));
}

TEST(SrcFromGTest, MatchesSubsetScanOnFixtures) {
  for (const auto& f : BasesFixtures()) {
    const Matroid m = Matroid::FromBases(f.n, f.bases);
    EXPECT_EQ(SrcFromG(ComputeGInvariant(m)),
              oracle::SrcByScan(f.n, oracle::RankOf(m)))
        << f.name;
  }
  for (const auto& named : SmallLooplessCatalog()) {
    EXPECT_EQ(SrcFromG(ComputeGInvariant(named.matroid)),
              ComputeSrcData(named.matroid))
        << named.name;
  }
}

TEST(SrcFromGTest, CorruptedInputIsInconsistent) {
  GInvariant g = ComputeGInvariant(TwoDisjointLines());
  g.counts["110100"] += 1;
  EXPECT_THROW(SrcFromG(g), InconsistentSystem);
}

TEST(ReconstructTest, MinimumMultiplicities) {
  EXPECT_EQ(MinReconstructionM(ConeVariant::kFull), 1);
  EXPECT_EQ(MinReconstructionM(ConeVariant::kTipless), 2);
  EXPECT_EQ(MinReconstructionM(ConeVariant::kBaseless), 2);
  EXPECT_EQ(MinReconstructionM(ConeVariant::kTiplessBaseless), 3);
}

TEST(ReconstructTest, Examples) {
  const Matroid m1 = TwoDisjointLines();
  const Matroid full = ReconstructFromConeConfig(
      ComputeConfiguration(FreeMCone(m1, 1).matroid()), ConeVariant::kFull, 1);
  EXPECT_TRUE(FindIsomorphism(full, m1).has_value());
  const Matroid m2 = TwoMeetingLines();
  const Matroid tipless = ReconstructFromConeConfig(
      ComputeConfiguration(FreeMCone(m2, 2).Variant(ConeVariant::kTipless)),
      ConeVariant::kTipless, 2);
  EXPECT_TRUE(FindIsomorphism(tipless, m2).has_value());
  const Matroid point = ReconstructFromConeConfig(
      ComputeConfiguration(Matroid::Uniform(2, 3)), ConeVariant::kFull, 1);
  EXPECT_EQ(point, Matroid::Uniform(1, 1));
}

TEST(ReconstructTest, RejectsMultiplicitiesBelowTheBound) {
  const ConeMatroid q = FreeMCone(TwoDisjointLines(), 1);
  for (ConeVariant kind : {ConeVariant::kTipless, ConeVariant::kBaseless,
                           ConeVariant::kTiplessBaseless}) {
    EXPECT_THROW(
        ReconstructFromConeConfig(ComputeConfiguration(q.Variant(kind)), kind, 1),
        ValidationError);
  }
  EXPECT_THROW(ReconstructFromConeConfig(ComputeConfiguration(q.matroid()),
                                         ConeVariant::kFull, 0),
               ValidationError);
}

TEST(ReconstructTest, RejectsNonConeConfigurations) {
  EXPECT_THROW(ReconstructFromConeConfig(ComputeConfiguration(TwoDisjointLines()),
                                         ConeVariant::kFull, 1),
               NotAConeConfiguration);
}

// M1 and M2 separate the variant configurations only above the bounds.
TEST(ReconstructTest, TwoLinesPairShowsBoundsAreNeeded) {
  auto same = [](int m, ConeVariant kind) {
    return ConfigurationsEqual(
        ComputeConfiguration(FreeMCone(TwoDisjointLines(), m).Variant(kind)),
        ComputeConfiguration(FreeMCone(TwoMeetingLines(), m).Variant(kind)));
  };
  EXPECT_TRUE(same(1, ConeVariant::kTipless));
  EXPECT_TRUE(same(1, ConeVariant::kBaseless));
  EXPECT_TRUE(same(2, ConeVariant::kTiplessBaseless));
  EXPECT_FALSE(same(1, ConeVariant::kFull));
  EXPECT_FALSE(same(2, ConeVariant::kTipless));
  EXPECT_FALSE(same(2, ConeVariant::kBaseless));
  EXPECT_FALSE(same(3, ConeVariant::kTiplessBaseless));
}

TEST(ReconstructTest, RoundTripOnCatalog) {
  for (const auto& named : SmallLooplessCatalog()) {
    for (ConeVariant kind : kAllKinds) {
      const int low = MinReconstructionM(kind);
      for (int m = low; m <= low + 1; ++m) {
        const Configuration config =
            ComputeConfiguration(FreeMCone(named.matroid, m).Variant(kind));
        const Matroid back = ReconstructFromConeConfig(config, kind, m);
        EXPECT_TRUE(FindIsomorphism(back, named.matroid).has_value())
            << named.name << " m=" << m << " " << VariantName(kind);
      }
    }
  }
}

TEST(CertifyPairTest, Examples) {
  const Certificate one = CertifyPair(TwoDisjointLines(), TwoMeetingLines(), 1);
  ASSERT_EQ(one.legs.size(), 4u);
  EXPECT_TRUE(one.AllPass());
  const Certificate self = CertifyPair(TwoDisjointLines(), TwoDisjointLines(), 1);
  EXPECT_FALSE(self.legs[0].pass);
  EXPECT_FALSE(self.AllPass());
}

TEST(CertifyPairTest, SecondMultiplicity) {
  const Certificate two = CertifyPair(TwoDisjointLines(), TwoMeetingLines(), 2);
  EXPECT_EQ(two.m, 2);
  EXPECT_TRUE(two.AllPass());
}

}  // namespace
}  // namespace mcone
