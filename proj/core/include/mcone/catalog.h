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

// Small named matroids and generators for rank-3 matroids given by their
// nontrivial lines.

#ifndef MCONE_CATALOG_H_
#define MCONE_CATALOG_H_

#include <string>
#include <vector>

#include "mcone/matroid.h"

namespace mcone {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// Rank 3 on 6 points with two disjoint 3-point lines {1,2,3} and {4,5,6}.
Matroid TwoDisjointLines();
// Rank 3 on 6 points with 3-point lines {1,2,3} and {1,4,5}.
Matroid TwoMeetingLines();

// M(K4) with one point doubled: 7 elements, rank 3.
Matroid DoubledPointK4();
// A 4-point line and a 3-point line through a common point, with a doubled
// point on the 3-point line: 7 elements, rank 3.
Matroid DoubledPointTwoLines();

// Truncation to rank k of the matroid whose parallel classes have the given
// sizes and are otherwise independent.
Matroid ParallelClasses(int k, const std::vector<int>& class_sizes);

// Rank-k sparse paving matroid on [n] with the given circuit-hyperplanes.
Matroid SparsePaving(int n, int k, const std::vector<Subset>& circuit_hyperplanes);

Matroid DirectSum(const Matroid& a, const Matroid& b);

// Rank-3 matroid whose simplification has `num_points` points and the given
// nontrivial lines (sets of at least three points); point i is replaced by
// class_sizes[i] parallel elements. Elements are numbered class by class.
Matroid RankThreeFromLines(int num_points, const std::vector<Subset>& lines,
                           const std::vector<int>& class_sizes);

// Loopless fixtures with at most 6 elements, including uniform,
// parallel-class, sparse paving, and coloop cases.
std::vector<NamedMatroid> SmallLooplessCatalog();

// One representative of every isomorphism class of simple rank-3 matroids
// on `num_points` points, given by the nontrivial lines.
std::vector<std::vector<Subset>> SimpleRankThreeLineSets(int num_points);

// Loopless rank-3 matroids on n elements covering every isomorphism class,
// possibly with repeats.
std::vector<Matroid> LooplessRankThree(int n);

}  // namespace mcone

#endif  // MCONE_CATALOG_H_
