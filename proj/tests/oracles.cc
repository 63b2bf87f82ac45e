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

#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace mcone::oracle {
namespace {

bool IsFlatByDefinition(int n, const RankFn& rank, Subset x) {
  const int r = rank(x);
  for (int e = 0; e < n; ++e) {
    if (!x.Contains(e) && rank(x.With(e)) == r) return false;
  }
  return true;
}

int CountColoops(const RankFn& rank, Subset x) {
  const int r = rank(x);
  int c = 0;
  x.ForEach([&](int e) {
    if (rank(x.Without(e)) < r) ++c;
  });
  return c;
}

bool LessBySizeThenElements(Subset a, Subset b) {
  if (a.Size() != b.Size()) return a.Size() < b.Size();
  return a.Elements() < b.Elements();
}

using Poly = std::map<std::pair<int, int>, Count>;

Poly Shift(const Poly& p, int dx, int dy) {
  Poly out;
  for (const auto& [key, c] : p) out[{key.first + dx, key.second + dy}] += c;
  return out;
}

Poly Add(Poly a, const Poly& b) {
  for (const auto& [key, c] : b) a[key] += c;
  return a;
}

// Tutte polynomial of the minor with contracted set `contracted` and
// remaining elements `rest`.
Poly DeletionContraction(const RankFn& rank, Subset contracted, Subset rest) {
  if (rest.Empty()) return {{{0, 0}, Count(1)}};
  const int e = rest.Min();
  const Subset others = rest.Without(e);
  const int base = rank(contracted);
  const bool loop = rank(contracted.With(e)) == base;
  const bool coloop =
      rank(contracted | others) < rank(contracted | rest);
  if (loop) return Shift(DeletionContraction(rank, contracted, others), 0, 1);
  if (coloop) {
    return Shift(DeletionContraction(rank, contracted.With(e), others), 1, 0);
  }
  return Add(DeletionContraction(rank, contracted, others),
             DeletionContraction(rank, contracted.With(e), others));
}

}  // namespace

RankFn RankFromBases(std::vector<Subset> bases) {
  return [bases = std::move(bases)](Subset x) {
    int best = 0;
    for (Subset b : bases) best = std::max(best, (x & b).Size());
    return best;
  };
}

RankFn RankOf(const Matroid& m) {
  return [&m](Subset x) { return m.Rank(x); };
}

std::vector<Subset> BasesByScan(int n, const RankFn& rank) {
  const int k = rank(Subset::Full(n));
  std::vector<Subset> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const Subset x = Subset::FromBits(bits);
    if (x.Size() == k && rank(x) == k) out.push_back(x);
  }
  return out;
}

std::vector<CyclicFlat> CyclicFlatsByScan(int n, const RankFn& rank) {
  std::vector<CyclicFlat> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const Subset x = Subset::FromBits(bits);
    if (IsFlatByDefinition(n, rank, x) && CountColoops(rank, x) == 0) {
      out.push_back({x, rank(x)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CyclicFlat& a, const CyclicFlat& b) {
              return LessBySizeThenElements(a.set, b.set);
            });
  return out;
}

std::vector<Subset> FlatsOfRankByScan(int n, const RankFn& rank, int i) {
  std::vector<Subset> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const Subset x = Subset::FromBits(bits);
    if (rank(x) == i && IsFlatByDefinition(n, rank, x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), LessBySizeThenElements);
  return out;
}

std::vector<Flag> FlagsByScan(int n, const RankFn& rank) {
  const int k = rank(Subset::Full(n));
  std::vector<std::vector<Subset>> levels;
  for (int i = 0; i <= k; ++i) levels.push_back(FlatsOfRankByScan(n, rank, i));
  std::vector<Flag> out;
  Flag current;
  std::function<void(int)> extend = [&](int i) {
    if (i > k) {
      out.push_back(current);
      return;
    }
    for (Subset f : levels[i]) {
      if (i > 0 && !current.back().IsProperSubsetOf(f)) continue;
      current.push_back(f);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

CatenaryData CatenaryByScan(int n, const RankFn& rank) {
  CatenaryData out;
  out.n = n;
  out.k = rank(Subset::Full(n));
  for (const Flag& flag : FlagsByScan(n, rank)) {
    Composition a;
    a.push_back(flag[0].Size());
    for (size_t i = 1; i < flag.size(); ++i) {
      a.push_back((flag[i] - flag[i - 1]).Size());
    }
    out.counts[a] += 1;
  }
  return out;
}

GInvariant GInvariantByPermutations(int n, const RankFn& rank) {
  GInvariant out;
  out.n = n;
  out.k = rank(Subset::Full(n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::string seq;
    Subset prefix;
    int r = 0;
    for (int e : perm) {
      prefix = prefix.With(e);
      const int next = rank(prefix);
      seq.push_back(next > r ? '1' : '0');
      r = next;
    }
    out.counts[seq] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TuttePolynomial TutteByDeletionContraction(int n, const RankFn& rank) {
  TuttePolynomial out;
  out.coefficients = DeletionContraction(rank, Subset(), Subset::Full(n));
  return out;
}

SrcData SrcByScan(int n, const RankFn& rank) {
  SrcData out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const Subset x = Subset::FromBits(bits);
    out.counts[{x.Size(), rank(x), CountColoops(rank, x)}] += 1;
  }
  return out;
}

bool PreservesRank(int n, const RankFn& a, const RankFn& b,
                   const std::vector<int>& phi) {
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    const Subset x = Subset::FromBits(bits);
    Subset image;
    x.ForEach([&](int e) { image = image.With(phi[e]); });
    if (a(x) != b(image)) return false;
  }
  return true;
}

}  // namespace mcone::oracle
