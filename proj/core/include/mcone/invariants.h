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

// Matroid invariants computed straight from their definitions: the
// G-invariant (rank sequences over all orderings), catenary data (flag
// compositions), the Tutte and characteristic polynomials, and the
// size-rank-coloop data.

#ifndef MCONE_INVARIANTS_H_
#define MCONE_INVARIANTS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcone/matroid.h"

namespace mcone {

using Count = boost::multiprecision::cpp_int;

// Bounds on exhaustive enumerations and the worker count for subset scans.
struct Limits {
  uint64_t max_subsets = uint64_t{1} << 25;
  uint64_t max_perms = 3628800;  // 10!
  int threads = 1;
};

// Multiset of rank sequences. Keys are (n, k)-sequences written as strings
// of '0' and '1'.
struct GInvariant {
  int n = 0;
  int k = 0;
  std::map<std::string, Count> counts;

  bool operator==(const GInvariant&) const = default;
};

using Composition = std::vector<int>;

// nu(M; a) for every (n, k)-composition a = (a_0, ..., a_k) with a nonzero
// count.
struct CatenaryData {
  int n = 0;
  int k = 0;
  std::map<Composition, Count> counts;

  Count NumFlags() const;
  bool operator==(const CatenaryData&) const = default;
};

// Nonzero coefficients of x^i y^j.
struct TuttePolynomial {
  std::map<std::pair<int, int>, Count> coefficients;

  Count Evaluate(const Count& x, const Count& y) const;
  bool operator==(const TuttePolynomial&) const = default;
};

// Dense univariate polynomial; coefficient i belongs to x^i.
struct Polynomial {
  std::vector<Count> coefficients;

  bool operator==(const Polynomial&) const = default;
};

// (size, rank, coloops) triple.
using SrcKey = std::array<int, 3>;

struct SrcData {
  std::map<SrcKey, Count> counts;

  // Largest subset size, i.e. the ground-set size.
  int GroundSize() const;
  bool operator==(const SrcData&) const = default;
};

using Flag = std::vector<Subset>;

// Throws GroundSetTooLarge if n! exceeds limits.max_perms.
GInvariant ComputeGInvariant(const Matroid& m, const Limits& limits = {});

CatenaryData ComputeCatenaryData(const Matroid& m);

// Subset expansion; throws GroundSetTooLarge if 2^n exceeds
// limits.max_subsets.
TuttePolynomial ComputeTutte(const Matroid& m, const Limits& limits = {});

// chi(M; x) = (-1)^r T(M; 1 - x, 0).
Polynomial Characteristic(const TuttePolynomial& tutte, int rank);
Polynomial ComputeCharacteristic(const Matroid& m, const Limits& limits = {});

SrcData ComputeSrcData(const Matroid& m, const Limits& limits = {});

// Composition (|X_0|, |X_1 - X_0|, ...) of a chain of sets.
Composition CompositionOf(const Flag& flag);

// Depth-first walk over all flags; the callback sees each flag once.
void ForEachFlag(const Matroid& m, const std::function<void(const Flag&)>& visit);
std::vector<Flag> Flags(const Matroid& m);

// Flags of M \ s, obtained as the non-collapsing flags of M with s removed,
// written in the element ids of m.Delete(s). Throws AllCollapse when the
// deletion has smaller rank.
std::vector<Flag> FlagsOfDeletion(const Matroid& m, Subset s);

// Expands sum_{i,j} counts[i][j] (x-1)^i (y-1)^j into the monomial basis.
// The key is (i, j) = (corank, nullity).
TuttePolynomial TutteFromCorankNullity(
    const std::map<std::pair<int, int>, Count>& counts);

Count Binomial(int n, int k);
Count Factorial(int n);

}  // namespace mcone

#endif  // MCONE_INVARIANTS_H_
