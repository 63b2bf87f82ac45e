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

// Brute-force reference computations used only by tests. Each works from a
// rank function (or a list of bases) by definition and shares no code with
// the library algorithms it checks.

#ifndef MCONE_TESTS_ORACLES_H_
#define MCONE_TESTS_ORACLES_H_

#include <functional>
#include <vector>

#include "mcone/invariants.h"
#include "mcone/matroid.h"

namespace mcone::oracle {

using RankFn = std::function<int(Subset)>;

// r(X) = max |X n B| over the bases.
RankFn RankFromBases(std::vector<Subset> bases);

// Every basis, by scanning all subsets for maximal independent sets of the
// rank function.
std::vector<Subset> BasesByScan(int n, const RankFn& rank);

// Sets equal to their closure with no coloops, each with its rank.
std::vector<CyclicFlat> CyclicFlatsByScan(int n, const RankFn& rank);

// All flats of rank i.
std::vector<Subset> FlatsOfRankByScan(int n, const RankFn& rank, int i);

// Every maximal chain of flats, by scanning subsets.
std::vector<Flag> FlagsByScan(int n, const RankFn& rank);

// Rank sequences over all n! orderings.
GInvariant GInvariantByPermutations(int n, const RankFn& rank);

// Deletion-contraction recursion.
TuttePolynomial TutteByDeletionContraction(int n, const RankFn& rank);

// Size, rank and coloop count of every subset.
SrcData SrcByScan(int n, const RankFn& rank);

// Composition counts of the flags found by FlagsByScan.
CatenaryData CatenaryByScan(int n, const RankFn& rank);

// True if phi preserves the rank of every subset.
bool PreservesRank(int n, const RankFn& a, const RankFn& b, const std::vector<int>& phi);

RankFn RankOf(const Matroid& m);

}  // namespace mcone::oracle

#endif  // MCONE_TESTS_ORACLES_H_
