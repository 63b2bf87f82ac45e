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

#include "mcone/invariants.h"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "mcone/errors.h"

namespace mcone {

Count Binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  Count out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Count Factorial(int n) {
  Count out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Count CatenaryData::NumFlags() const {
  Count total = 0;
  for (const auto& [composition, count] : counts) total += count;
  return total;
}

Count TuttePolynomial::Evaluate(const Count& x, const Count& y) const {
  Count total = 0;
  for (const auto& [exponents, c] : coefficients) {
    total += c * boost::multiprecision::pow(x, exponents.first) *
             boost::multiprecision::pow(y, exponents.second);
  }
  return total;
}

int SrcData::GroundSize() const {
  int n = 0;
  for (const auto& [key, count] : counts) n = std::max(n, key[0]);
  return n;
}

namespace {

void CheckSubsetBound(int n, const Limits& limits) {
  if (n >= 63 || (uint64_t{1} << n) > limits.max_subsets) {
    throw GroundSetTooLarge("2^" + std::to_string(n) +
                            " subsets exceed the subset bound " +
                            std::to_string(limits.max_subsets));
  }
}

// Runs visit(begin, end, worker) over a partition of [0, 2^n) into
// `workers` ranges.
template <typename Visit>
void ForEachSubsetRange(int n, int workers, Visit&& visit) {
  const uint64_t total = uint64_t{1} << n;
  if (workers <= 1) {
    visit(uint64_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  const uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const uint64_t begin = chunk * w;
    const uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&visit, begin, end, w] { visit(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

// At most one worker per 1024 subsets.
int WorkerCount(int n, int threads) {
  const uint64_t total = uint64_t{1} << n;
  const uint64_t cap = std::max<uint64_t>(1, total / 1024);
  return static_cast<int>(
      std::clamp<uint64_t>(static_cast<uint64_t>(std::max(threads, 1)), 1, cap));
}

}  // namespace

GInvariant ComputeGInvariant(const Matroid& m, const Limits& limits) {
  const int n = m.size();
  if (n > 20 || Factorial(n) > limits.max_perms) {
    throw GroundSetTooLarge(std::to_string(n) +
                            "! permutations exceed the permutation bound " +
                            std::to_string(limits.max_perms));
  }
  // layer[S] maps a rank sequence of an ordering of S (bit i = i-th step)
  // to the number of orderings producing it.
  using Sequences = std::unordered_map<uint64_t, Count>;
  std::unordered_map<Subset, Sequences> layer;
  layer[Subset()][0] = 1;
  for (int step = 0; step < n; ++step) {
    std::unordered_map<Subset, Sequences> next;
    for (const auto& [s, sequences] : layer) {
      const int r = m.Rank(s);
      (m.ground_set() - s).ForEach([&](int e) {
        const Subset t = s.With(e);
        const uint64_t bit = static_cast<uint64_t>(m.Rank(t) - r) << step;
        Sequences& target = next[t];
        for (const auto& [seq, count] : sequences) target[seq | bit] += count;
      });
    }
    layer = std::move(next);
  }
  GInvariant g;
  g.n = n;
  g.k = m.rank();
  for (const auto& [seq, count] : layer[m.ground_set()]) {
    std::string key(n, '0');
    for (int i = 0; i < n; ++i) {
      if ((seq >> i) & 1) key[i] = '1';
    }
    g.counts[key] += count;
  }
  return g;
}

CatenaryData ComputeCatenaryData(const Matroid& m) {
  const FlatLattice flats = m.Flats();
  using Partial = std::map<Composition, Count>;
  std::vector<Partial> current(1);
  current[0][{flats.levels[0][0].Size()}] = 1;
  for (int i = 0; i < flats.rank(); ++i) {
    std::vector<Partial> next(flats.levels[i + 1].size());
    for (size_t j = 0; j < flats.levels[i].size(); ++j) {
      const Subset lower = flats.levels[i][j];
      for (int u : flats.up[i][j]) {
        const int step = (flats.levels[i + 1][u] - lower).Size();
        for (const auto& [prefix, count] : current[j]) {
          Composition extended = prefix;
          extended.push_back(step);
          next[u][extended] += count;
        }
      }
    }
    current = std::move(next);
  }
  CatenaryData out;
  out.n = m.size();
  out.k = m.rank();
  out.counts = std::move(current[0]);
  return out;
}

TuttePolynomial TutteFromCorankNullity(
    const std::map<std::pair<int, int>, Count>& counts) {
  TuttePolynomial t;
  for (const auto& [key, count] : counts) {
    const auto [i, j] = key;
    for (int a = 0; a <= i; ++a) {
      const Count xa = Binomial(i, a) * ((i - a) % 2 ? -1 : 1);
      for (int b = 0; b <= j; ++b) {
        const Count yb = Binomial(j, b) * ((j - b) % 2 ? -1 : 1);
        t.coefficients[{a, b}] += count * xa * yb;
      }
    }
  }
  std::erase_if(t.coefficients, [](const auto& kv) { return kv.second == 0; });
  return t;
}

TuttePolynomial ComputeTutte(const Matroid& m, const Limits& limits) {
  const int n = m.size();
  CheckSubsetBound(n, limits);
  const int k = m.rank();
  const int width = n - k + 1;
  const int workers = WorkerCount(n, limits.threads);
  std::vector<std::vector<uint64_t>> partial(
      workers, std::vector<uint64_t>((k + 1) * width, 0));
  ForEachSubsetRange(n, workers, [&](uint64_t begin, uint64_t end, int w) {
    auto& table = partial[w];
    for (uint64_t bits = begin; bits < end; ++bits) {
      const Subset a = Subset::FromBits(bits);
      const int r = m.Rank(a);
      ++table[(k - r) * width + (a.Size() - r)];
    }
  });
  std::map<std::pair<int, int>, Count> counts;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j < width; ++j) {
      Count c = 0;
      for (const auto& table : partial) c += table[i * width + j];
      if (c != 0) counts[{i, j}] = c;
    }
  }
  return TutteFromCorankNullity(counts);
}

Polynomial Characteristic(const TuttePolynomial& tutte, int rank) {
  Polynomial chi;
  chi.coefficients.assign(rank + 1, 0);
  for (const auto& [exponents, c] : tutte.coefficients) {
    if (exponents.second != 0) continue;
    const int i = exponents.first;
    // (1 - x)^i.
    for (int a = 0; a <= i; ++a) {
      if (a >= static_cast<int>(chi.coefficients.size())) {
        chi.coefficients.resize(a + 1, 0);
      }
      chi.coefficients[a] += c * Binomial(i, a) * (a % 2 ? -1 : 1);
    }
  }
  if (rank % 2) {
    for (Count& c : chi.coefficients) c = -c;
  }
  while (chi.coefficients.size() > 1 && chi.coefficients.back() == 0) {
    chi.coefficients.pop_back();
  }
  return chi;
}

Polynomial ComputeCharacteristic(const Matroid& m, const Limits& limits) {
  return Characteristic(ComputeTutte(m, limits), m.rank());
}

SrcData ComputeSrcData(const Matroid& m, const Limits& limits) {
  const int n = m.size();
  CheckSubsetBound(n, limits);
  const int stride = n + 1;
  const int workers = WorkerCount(n, limits.threads);
  std::vector<std::vector<uint64_t>> partial(
      workers, std::vector<uint64_t>(stride * stride * stride, 0));
  ForEachSubsetRange(n, workers, [&](uint64_t begin, uint64_t end, int w) {
    auto& table = partial[w];
    for (uint64_t bits = begin; bits < end; ++bits) {
      const Subset s = Subset::FromBits(bits);
      const int r = m.Rank(s);
      const int c = m.ColoopsOf(s).Size();
      ++table[(s.Size() * stride + r) * stride + c];
    }
  });
  SrcData src;
  for (int s = 0; s <= n; ++s) {
    for (int t = 0; t <= s; ++t) {
      for (int c = 0; c <= t; ++c) {
        Count total = 0;
        for (const auto& table : partial) {
          total += table[(s * stride + t) * stride + c];
        }
        if (total != 0) src.counts[{s, t, c}] = total;
      }
    }
  }
  return src;
}

Composition CompositionOf(const Flag& flag) {
  Composition out;
  if (flag.empty()) return out;
  out.push_back(flag[0].Size());
  for (size_t i = 1; i < flag.size(); ++i) {
    out.push_back((flag[i] - flag[i - 1]).Size());
  }
  return out;
}

void ForEachFlag(const Matroid& m,
                 const std::function<void(const Flag&)>& visit) {
  const FlatLattice flats = m.Flats();
  Flag chain{flats.levels[0][0]};
  std::function<void(int, int)> walk = [&](int level, int index) {
    if (level == flats.rank()) {
      visit(chain);
      return;
    }
    for (int u : flats.up[level][index]) {
      chain.push_back(flats.levels[level + 1][u]);
      walk(level + 1, u);
      chain.pop_back();
    }
  };
  walk(0, 0);
}

std::vector<Flag> Flags(const Matroid& m) {
  std::vector<Flag> out;
  ForEachFlag(m, [&](const Flag& f) { out.push_back(f); });
  return out;
}

std::vector<Flag> FlagsOfDeletion(const Matroid& m, Subset s) {
  s &= m.ground_set();
  const Subset keep = m.ground_set() - s;
  if (m.Rank(keep) < m.rank()) {
    throw AllCollapse("deleting the set lowers the rank from " +
                      std::to_string(m.rank()) + " to " +
                      std::to_string(m.Rank(keep)));
  }
  std::vector<Flag> out;
  ForEachFlag(m, [&](const Flag& flag) {
    Flag image;
    for (Subset y : flag) {
      const Subset packed = Compress(y - s, keep);
      if (!image.empty() && image.back() == packed) return;  // collapses
      image.push_back(packed);
    }
    out.push_back(std::move(image));
  });
  return out;
}

}  // namespace mcone
