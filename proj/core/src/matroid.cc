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

#include "mcone/matroid.h"

#include <algorithm>
#include <climits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "mcone/errors.h"
#include "mcone/zlattice.h"

namespace mcone {

const char* AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kZ0:
      return "Z0";
    case Axiom::kZ1:
      return "Z1";
    case Axiom::kZ2:
      return "Z2";
    case Axiom::kZ3:
      return "Z3";
  }
  return "?";
}

void SortCanonically(std::vector<CyclicFlat>& family) {
  std::sort(family.begin(), family.end(),
            [](const CyclicFlat& a, const CyclicFlat& b) {
              return CanonicalLess(a.set, b.set);
            });
}

void SortCanonically(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess);
}

size_t FlatLattice::NumFlats() const {
  size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

FlatLattice BuildFlatLattice(int n,
                             const std::function<Subset(Subset)>& closure) {
  const Subset ground = Subset::Full(n);
  std::vector<std::vector<Subset>> levels{{closure(Subset())}};
  std::vector<std::vector<std::vector<Subset>>> up_sets;
  while (true) {
    const auto& current = levels.back();
    std::vector<std::vector<Subset>> covers(current.size());
    std::unordered_set<Subset> next;
    for (size_t i = 0; i < current.size(); ++i) {
      // The flats covering F partition E - F.
      Subset remaining = ground - current[i];
      while (!remaining.Empty()) {
        const Subset cover = closure(current[i].With(remaining.Min()));
        remaining -= cover;
        covers[i].push_back(cover);
        next.insert(cover);
      }
    }
    up_sets.push_back(std::move(covers));
    if (next.empty()) break;
    std::vector<Subset> level(next.begin(), next.end());
    SortCanonically(level);
    levels.push_back(std::move(level));
  }

  FlatLattice lattice;
  lattice.up.resize(levels.size());
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    std::unordered_map<Subset, int> index;
    for (size_t j = 0; j < levels[i + 1].size(); ++j) {
      index.emplace(levels[i + 1][j], static_cast<int>(j));
    }
    lattice.up[i].resize(levels[i].size());
    for (size_t j = 0; j < levels[i].size(); ++j) {
      for (Subset cover : up_sets[i][j]) {
        lattice.up[i][j].push_back(index.at(cover));
      }
      std::sort(lattice.up[i][j].begin(), lattice.up[i][j].end());
    }
  }
  lattice.up.back().resize(levels.back().size());
  lattice.levels = std::move(levels);
  return lattice;
}

std::vector<std::string> Matroid::DefaultNames(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

Matroid Matroid::FromCyclicFlats(int n, std::vector<CyclicFlat> family,
                                 std::vector<std::string> names,
                                 bool check_axioms) {
  if (n < 0 || n > kMaxGroundSetSize) {
    throw ValidationError("ground set size " + std::to_string(n) +
                          " outside [0, 64]");
  }
  const Subset ground = Subset::Full(n);
  for (const CyclicFlat& z : family) {
    if (!z.set.IsSubsetOf(ground)) {
      throw ValidationError("cyclic flat has elements outside the ground set");
    }
    if (z.rank < 0) {
      throw ValidationError("cyclic flat has negative rank " +
                            std::to_string(z.rank));
    }
  }
  if (names.empty()) names = DefaultNames(n);
  if (static_cast<int>(names.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " element names");
  }
  if (std::unordered_set<std::string>(names.begin(), names.end()).size() !=
      names.size()) {
    throw ValidationError("element names must be unique");
  }
  SortCanonically(family);
  if (check_axioms) {
    const AxiomReport report = ValidateAxioms(n, family);
    if (!report.ok) {
      throw AxiomViolation(report.axiom, report.first, report.second,
                           report.detail);
    }
  } else if (family.empty()) {
    throw ValidationError("empty cyclic-flat family");
  }
  Matroid m;
  m.n_ = n;
  m.names_ = std::move(names);
  m.cyclic_flats_ = std::move(family);
  m.rank_ = m.Rank(ground);
  return m;
}

Matroid Matroid::FromRankOracle(int n, const std::function<int(Subset)>& rank,
                                std::vector<std::string> names) {
  const Subset ground = Subset::Full(n);
  auto closure = [&](Subset x) {
    const int r = rank(x);
    Subset out = x;
    (ground - x).ForEach([&](int e) {
      if (rank(x.With(e)) == r) out = out.With(e);
    });
    return out;
  };
  const FlatLattice flats = BuildFlatLattice(n, closure);
  std::vector<CyclicFlat> family;
  for (size_t i = 0; i < flats.levels.size(); ++i) {
    for (Subset f : flats.levels[i]) {
      bool cyclic = true;
      f.ForEach([&](int e) {
        if (cyclic && rank(f.Without(e)) < static_cast<int>(i)) cyclic = false;
      });
      if (cyclic) family.push_back({f, static_cast<int>(i)});
    }
  }
  return FromCyclicFlats(n, std::move(family), std::move(names));
}

Matroid Matroid::FromBases(int n, std::span<const Subset> bases,
                           std::vector<std::string> names) {
  if (n < 0 || n > kMaxGroundSetSize) {
    throw ValidationError("ground set size outside [0, 64]");
  }
  if (bases.empty()) throw NotABasisSystem({}, {}, "no bases given");
  const Subset ground = Subset::Full(n);
  std::unordered_set<Subset> lookup(bases.begin(), bases.end());
  const int k = bases.front().Size();
  for (Subset b : bases) {
    if (!b.IsSubsetOf(ground)) {
      throw NotABasisSystem(b, b, "basis has elements outside the ground set");
    }
    if (b.Size() != k) {
      throw NotABasisSystem(bases.front(), b, "bases differ in size");
    }
  }
  for (Subset b1 : lookup) {
    for (Subset b2 : lookup) {
      (b1 - b2).ForEach([&](int x) {
        bool found = false;
        (b2 - b1).ForEach([&](int y) {
          if (!found && lookup.contains(b1.Without(x).With(y))) found = true;
        });
        if (!found) {
          throw NotABasisSystem(b1, b2, "basis exchange fails");
        }
      });
    }
  }
  std::vector<Subset> unique(lookup.begin(), lookup.end());
  auto rank = [&](Subset x) {
    int best = 0;
    for (Subset b : unique) best = std::max(best, (x & b).Size());
    return best;
  };
  return FromRankOracle(n, rank, std::move(names));
}

Matroid Matroid::Uniform(int k, int n) {
  if (k < 0 || k > n) throw ValidationError("uniform matroid needs 0 <= k <= n");
  const Subset ground = Subset::Full(n);
  std::vector<CyclicFlat> family;
  if (k == n) {
    family.push_back({Subset(), 0});
  } else if (k == 0) {
    family.push_back({ground, 0});
  } else {
    family = {{Subset(), 0}, {ground, k}};
  }
  return FromCyclicFlats(n, std::move(family));
}

int Matroid::Rank(Subset x) const {
  int best = INT_MAX;
  for (const CyclicFlat& z : cyclic_flats_) {
    best = std::min(best, z.rank + (x - z.set).Size());
  }
  return best;
}

Subset Matroid::Closure(Subset x) const {
  // e lies in cl(X) iff some minimizer of r(Z) + |X - Z| contains e.
  const int r = Rank(x);
  Subset out = x;
  for (const CyclicFlat& z : cyclic_flats_) {
    if (z.rank + (x - z.set).Size() == r) out |= z.set;
  }
  return out;
}

Subset Matroid::ColoopsOf(Subset x) const {
  // e in X is a coloop of M|X iff some minimizer misses e.
  const int r = Rank(x);
  Subset common = x;
  for (const CyclicFlat& z : cyclic_flats_) {
    if (z.rank + (x - z.set).Size() == r) common &= z.set;
  }
  return x - common;
}

FlatLattice Matroid::Flats() const {
  return BuildFlatLattice(n_, [this](Subset x) { return Closure(x); });
}

std::vector<Subset> Matroid::FlatsOfRank(int i) const {
  FlatLattice lattice = Flats();
  if (i < 0 || i > lattice.rank()) return {};
  return std::move(lattice.levels[i]);
}

std::vector<Subset> Matroid::Bases() const {
  std::vector<Subset> out;
  if (rank_ == 0) return {Subset()};
  if (n_ >= 63) throw GroundSetTooLarge("basis enumeration needs n < 63");
  // Gosper's hack over all rank_-subsets.
  uint64_t x = (uint64_t{1} << rank_) - 1;
  const uint64_t limit = uint64_t{1} << n_;
  while (x < limit) {
    const Subset s = Subset::FromBits(x);
    if (IsIndependent(s)) out.push_back(s);
    const uint64_t c = x & (~x + 1);
    const uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

Matroid Matroid::Delete(Subset d) const {
  d &= ground_set();
  const Subset keep = ground_set() - d;
  std::vector<CyclicFlat> family;
  std::unordered_set<Subset> seen;
  // Cyclic flats of M \ D are the sets Z - D, Z cyclic in M, that stay
  // cyclic.
  for (const CyclicFlat& z : cyclic_flats_) {
    const Subset g = z.set - d;
    if (!IsCyclic(g)) continue;
    const Subset packed = Compress(g, keep);
    if (seen.insert(packed).second) family.push_back({packed, Rank(g)});
  }
  std::vector<std::string> names;
  keep.ForEach([&](int e) { names.push_back(names_[e]); });
  return FromCyclicFlats(keep.Size(), std::move(family), std::move(names));
}

Matroid Matroid::WithNames(std::vector<std::string> names) const {
  return FromCyclicFlats(n_, cyclic_flats_, std::move(names));
}

Subset MapSubset(Subset x, std::span<const int> phi) {
  Subset out;
  x.ForEach([&](int e) { out = out.With(phi[e]); });
  return out;
}

namespace {

using Label = std::pair<int, int>;  // (size, rank)

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Matroid& a, const Matroid& b) : a_(a), b_(b) {
    const int n = a.size();
    signature_a_ = Signatures(a);
    signature_b_ = Signatures(b);
    phi_.assign(n, -1);
    // Most constrained elements first.
    order_.resize(n);
    for (int e = 0; e < n; ++e) order_[e] = e;
    std::vector<int> choices(n, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (signature_a_[x] == signature_b_[y]) ++choices[x];
      }
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return choices[x] < choices[y]; });
    for (const CyclicFlat& w : b.cyclic_flats()) targets_.insert(w.set);
  }

  bool Run() { return Extend(0, Subset(), Subset()); }
  const std::vector<int>& phi() const { return phi_; }

 private:
  static std::vector<std::vector<Label>> Signatures(const Matroid& m) {
    std::vector<std::vector<Label>> sig(m.size());
    for (const CyclicFlat& z : m.cyclic_flats()) {
      z.set.ForEach([&](int e) { sig[e].push_back({z.set.Size(), z.rank}); });
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  }

  // Every cyclic flat of `a`, restricted to the mapped elements, must match
  // the trace of some equally labeled cyclic flat of `b`.
  bool Consistent(Subset domain, Subset image) const {
    for (const CyclicFlat& z : a_.cyclic_flats()) {
      const Subset mapped = MapSubset(z.set & domain, phi_);
      bool found = false;
      for (const CyclicFlat& w : b_.cyclic_flats()) {
        if (w.rank == z.rank && w.set.Size() == z.set.Size() &&
            (w.set & image) == mapped) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool Extend(int depth, Subset domain, Subset image) {
    if (depth == a_.size()) {
      for (const CyclicFlat& z : a_.cyclic_flats()) {
        if (!targets_.contains(MapSubset(z.set, phi_))) return false;
        if (b_.Rank(MapSubset(z.set, phi_)) != z.rank) return false;
      }
      return true;
    }
    const int x = order_[depth];
    for (int y = 0; y < b_.size(); ++y) {
      if (image.Contains(y) || signature_a_[x] != signature_b_[y]) continue;
      phi_[x] = y;
      const Subset d = domain.With(x);
      const Subset i = image.With(y);
      if (Consistent(d, i) && Extend(depth + 1, d, i)) return true;
      phi_[x] = -1;
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  std::vector<std::vector<Label>> signature_a_;
  std::vector<std::vector<Label>> signature_b_;
  std::vector<int> order_;
  std::vector<int> phi_;
  std::unordered_set<Subset> targets_;
};

std::vector<Label> Labels(const Matroid& m) {
  std::vector<Label> labels;
  for (const CyclicFlat& z : m.cyclic_flats()) {
    labels.push_back({z.set.Size(), z.rank});
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

std::optional<std::vector<int>> FindIsomorphism(const Matroid& a,
                                                const Matroid& b,
                                                int max_size) {
  if (a.size() > max_size || b.size() > max_size) {
    throw GroundSetTooLarge("isomorphism search is limited to " +
                            std::to_string(max_size) + " elements");
  }
  if (a.size() != b.size() || a.rank() != b.rank() ||
      Labels(a) != Labels(b)) {
    return std::nullopt;
  }
  IsomorphismSearch search(a, b);
  if (!search.Run()) return std::nullopt;
  return search.phi();
}

}  // namespace mcone
