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

// Direct checks of the cyclic-flat axioms and of labeled-lattice
// isomorphism, written from the definitions for use as test references.

#ifndef MCONE_TESTS_ZLATTICE_ORACLES_H_
#define MCONE_TESTS_ZLATTICE_ORACLES_H_

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mcone/errors.h"
#include "mcone/matroid.h"
#include "mcone/zlattice.h"

namespace mcone::testing {

// Least member containing x (join) or largest member inside x (meet), if
// unique.
inline std::optional<size_t> LeastAbove(const std::vector<CyclicFlat>& f,
                                        Subset x) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (!x.IsSubsetOf(f[i].set)) continue;
    bool least = true;
    for (const CyclicFlat& z : f) {
      if (x.IsSubsetOf(z.set) && !f[i].set.IsSubsetOf(z.set)) least = false;
    }
    if (least) return i;
  }
  return std::nullopt;
}

inline std::optional<size_t> GreatestBelow(const std::vector<CyclicFlat>& f,
                                           Subset x) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (!f[i].set.IsSubsetOf(x)) continue;
    bool greatest = true;
    for (const CyclicFlat& z : f) {
      if (z.set.IsSubsetOf(x) && !z.set.IsSubsetOf(f[i].set)) greatest = false;
    }
    if (greatest) return i;
  }
  return std::nullopt;
}

inline bool Z3Fails(const std::vector<CyclicFlat>& f, const CyclicFlat& x,
                    const CyclicFlat& y) {
  const auto join = LeastAbove(f, x.set | y.set);
  const auto meet = GreatestBelow(f, x.set & y.set);
  if (!join || !meet) return false;
  const int extra = ((x.set & y.set) - f[*meet].set).Size();
  return f[*join].rank + f[*meet].rank + extra > x.rank + y.rank;
}

inline bool Z2Fails(const CyclicFlat& x, const CyclicFlat& y) {
  if (!x.set.IsProperSubsetOf(y.set)) return false;
  const int gap = y.rank - x.rank;
  return gap <= 0 || gap >= (y.set - x.set).Size();
}

// Lowest-numbered axiom the family violates, or none.
inline std::optional<Axiom> FirstViolatedAxiom(
    int n, const std::vector<CyclicFlat>& f) {
  if (f.empty()) return Axiom::kZ0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (!f[i].set.IsSubsetOf(Subset::Full(n))) return Axiom::kZ0;
    for (size_t j = 0; j < f.size(); ++j) {
      if (i != j && f[i].set == f[j].set) return Axiom::kZ0;
      if (!LeastAbove(f, f[i].set | f[j].set) ||
          !GreatestBelow(f, f[i].set & f[j].set)) {
        return Axiom::kZ0;
      }
    }
  }
  if (f[*LeastAbove(f, Subset())].rank != 0) return Axiom::kZ1;
  for (const CyclicFlat& x : f) {
    for (const CyclicFlat& y : f) {
      if (Z2Fails(x, y)) return Axiom::kZ2;
    }
  }
  for (const CyclicFlat& x : f) {
    for (const CyclicFlat& y : f) {
      if (Z3Fails(f, x, y)) return Axiom::kZ3;
    }
  }
  return std::nullopt;
}

// True if the pair (first, second) witnesses a violation of `axiom`.
inline bool ViolatesAxiom(const std::vector<CyclicFlat>& f, Axiom axiom,
                          Subset first, Subset second) {
  const CyclicFlat* x = nullptr;
  const CyclicFlat* y = nullptr;
  for (const CyclicFlat& z : f) {
    if (z.set == first) x = &z;
    if (z.set == second) y = &z;
  }
  switch (axiom) {
    case Axiom::kZ0:
      return !LeastAbove(f, first | second) || !GreatestBelow(f, first & second);
    case Axiom::kZ1:
      return x != nullptr && x == &f[*LeastAbove(f, Subset())] && x->rank != 0;
    case Axiom::kZ2:
      return x != nullptr && y != nullptr && Z2Fails(*x, *y);
    case Axiom::kZ3:
      return x != nullptr && y != nullptr && Z3Fails(f, *x, *y);
  }
  return false;
}

// Backtracking search for a bijection of nodes that keeps (size, rho)
// labels and the cover relation.
inline bool LabeledIsomorphic(const Configuration& a, const Configuration& b) {
  const int n = a.num_nodes();
  if (n != b.num_nodes() || a.covers.size() != b.covers.size()) return false;
  const std::set<std::pair<int, int>> cover_a(a.covers.begin(), a.covers.end());
  const std::set<std::pair<int, int>> cover_b(b.covers.begin(), b.covers.end());
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.size[v] != b.size[w] || a.rho[v] != b.rho[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = cover_a.contains({u, v}) == cover_b.contains({phi[u], w}) &&
             cover_a.contains({v, u}) == cover_b.contains({w, phi[u]});
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = true;
      if (place(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace mcone::testing

#endif  // MCONE_TESTS_ZLATTICE_ORACLES_H_
