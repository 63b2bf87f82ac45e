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

#ifndef MCONE_MATROID_H_
#define MCONE_MATROID_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcone/subset.h"

namespace mcone {

struct CyclicFlat {
  Subset set;
  int rank = 0;

  bool operator==(const CyclicFlat&) const = default;
};

// Sorts by CanonicalLess on the sets.
void SortCanonically(std::vector<CyclicFlat>& family);
void SortCanonically(std::vector<Subset>& sets);

// All flats of a matroid, grouped by rank, with the cover relation between
// consecutive ranks. Each level is sorted canonically.
struct FlatLattice {
  std::vector<std::vector<Subset>> levels;
  // up[i][j] lists indices into levels[i + 1] of the flats covering
  // levels[i][j].
  std::vector<std::vector<std::vector<int>>> up;

  int rank() const { return static_cast<int>(levels.size()) - 1; }
  size_t NumFlats() const;
};

// Builds the flat lattice of any closure operator on [n].
FlatLattice BuildFlatLattice(int n, const std::function<Subset(Subset)>& closure);

// A matroid on {0, ..., n-1}, stored as its cyclic flats and their ranks.
// Everything else (rank, closure, flats) is derived from that family.
class Matroid {
 public:
  // Validates the family against the cyclic-flat axioms; throws
  // AxiomViolation on failure and ValidationError on malformed input.
  // `check_axioms = false` skips only the axiom check, for families that
  // are correct by construction.
  static Matroid FromCyclicFlats(int n, std::vector<CyclicFlat> family,
                                 std::vector<std::string> names = {},
                                 bool check_axioms = true);
  // Throws NotABasisSystem if the bases fail the exchange axiom.
  static Matroid FromBases(int n, std::span<const Subset> bases,
                           std::vector<std::string> names = {});
  // Extracts the cyclic flats of the matroid whose rank function is `rank`.
  // The oracle is trusted to be a matroid rank function; the resulting
  // family is still validated.
  static Matroid FromRankOracle(int n, const std::function<int(Subset)>& rank,
                                std::vector<std::string> names = {});

  // Uniform matroid U_{k,n}.
  static Matroid Uniform(int k, int n);

  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground_set() const { return Subset::Full(n_); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<CyclicFlat>& cyclic_flats() const { return cyclic_flats_; }

  // r(X) = min over cyclic flats Z of r(Z) + |X - Z|.
  int Rank(Subset x) const;
  bool IsIndependent(Subset x) const { return Rank(x) == x.Size(); }
  Subset Closure(Subset x) const;
  bool IsFlat(Subset x) const { return Closure(x) == x; }
  // Elements of x whose removal lowers the rank of x.
  Subset ColoopsOf(Subset x) const;
  bool IsCyclic(Subset x) const { return ColoopsOf(x).Empty(); }

  Subset Loops() const { return cyclic_flats_.front().set; }
  bool IsLoopless() const { return Loops().Empty(); }
  // Coloops of the whole matroid.
  Subset Coloops() const { return ground_set() - cyclic_flats_.back().set; }

  FlatLattice Flats() const;
  std::vector<Subset> FlatsOfRank(int i) const;
  // Enumerates every basis; meant for small ground sets.
  std::vector<Subset> Bases() const;

  // The deletion keeps the surviving elements in their original order and
  // renumbers them consecutively.
  Matroid Delete(Subset d) const;
  Matroid Restrict(Subset x) const { return Delete(ground_set() - x); }

  // Same matroid with element i renamed to names[i].
  Matroid WithNames(std::vector<std::string> names) const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && cyclic_flats_ == other.cyclic_flats_;
  }

 private:
  Matroid() = default;
  static std::vector<std::string> DefaultNames(int n);

  int n_ = 0;
  int rank_ = 0;
  std::vector<std::string> names_;
  std::vector<CyclicFlat> cyclic_flats_;
};

// Isomorphism search is exponential; beyond this size it refuses.
inline constexpr int kMaxIsomorphismSize = 10;

// Returns a bijection phi (phi[e] is the image of e) carrying the cyclic
// flats of `a` with their ranks onto those of `b`, or nullopt.
// Throws GroundSetTooLarge above `max_size` elements.
std::optional<std::vector<int>> FindIsomorphism(
    const Matroid& a, const Matroid& b, int max_size = kMaxIsomorphismSize);

// Image of a set under an element map.
Subset MapSubset(Subset x, std::span<const int> phi);

}  // namespace mcone

#endif  // MCONE_MATROID_H_
