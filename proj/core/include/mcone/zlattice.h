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

// Lattices of cyclic flats: the axiom validator, configurations and their
// comparison up to labeled-lattice isomorphism.

#ifndef MCONE_ZLATTICE_H_
#define MCONE_ZLATTICE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcone/errors.h"
#include "mcone/matroid.h"

namespace mcone {

// The cyclic flats of `m` found by scanning its flats for coloop-free ones.
// Matroid::cyclic_flats() holds the same family; this recomputation is the
// independent route used to cross-check it.
std::vector<CyclicFlat> ScanCyclicFlats(const Matroid& m);

enum class Z3Mode { kAllPairs, kIncomparablePairs };

struct AxiomReport {
  bool ok = true;
  Axiom axiom = Axiom::kZ0;
  Subset first;
  Subset second;
  std::string detail;
};

// Checks (Z0) lattice, (Z1) bottom has rank 0, (Z2) strict rank and nullity
// growth along proper inclusions and (Z3) the submodular inequality with the
// nullity correction. Axioms are checked in that order and pairs in index
// order, so the first violation reported is deterministic.
AxiomReport ValidateAxioms(int n, const std::vector<CyclicFlat>& family,
                           Z3Mode mode = Z3Mode::kAllPairs);

// A finite lattice given by its cover relation, with the order, joins and
// meets precomputed.
class Lattice {
 public:
  // Throws ValidationError if the covers do not describe a lattice.
  Lattice(int num_nodes, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool Leq(int x, int y) const { return leq_[x][y]; }
  bool Less(int x, int y) const { return x != y && leq_[x][y]; }
  int Join(int x, int y) const { return join_[x][y]; }
  int Meet(int x, int y) const { return meet_[x][y]; }
  const std::vector<int>& Down(int x) const { return down_[x]; }
  const std::vector<int>& Up(int x) const { return up_[x]; }

 private:
  int n_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> up_;
};

// The abstract lattice of cyclic flats labeled by size and rank.
struct Configuration {
  std::vector<int> size;
  std::vector<int> rho;
  // (lower, upper) node pairs, sorted.
  std::vector<std::pair<int, int>> covers;
  // Coloops of the source matroid; not part of the labeled lattice.
  int coloops = 0;

  int num_nodes() const { return static_cast<int>(size.size()); }
  bool operator==(const Configuration&) const = default;
};

// Throws ValidationError unless the covers form a lattice on which size
// and rho strictly increase along covers and rho(bottom) = 0.
void CheckConfiguration(const Configuration& c);

// The configuration of `m`, renumbered into canonical order.
Configuration ComputeConfiguration(const Matroid& m);

// Certificate of the labeled lattice up to isomorphism: two configurations
// are isomorphic iff their forms are equal.
std::vector<int> CanonicalForm(const Configuration& c);

// Renumbers the nodes so that isomorphic configurations become identical.
Configuration Canonicalize(const Configuration& c);

bool ConfigurationsEqual(const Configuration& a, const Configuration& b);

}  // namespace mcone

#endif  // MCONE_ZLATTICE_H_
