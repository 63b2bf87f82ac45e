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

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mcone/errors.h"

namespace mcone {

namespace {

std::string CompositionString(const Composition& a) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
  out << ")";
  return out.str();
}

// Members of [h] in increasing order, split into C and D.
void SplitSteps(int h, Subset steps, std::vector<int>& c, std::vector<int>& d) {
  c.clear();
  d.clear();
  for (int i = 1; i <= h; ++i) (steps.Contains(i) ? c : d).push_back(i);
}

}  // namespace

void CheckFlagTuple(const ConeMatroid& q, const FlagTuple& t) {
  const Matroid& m = q.source();
  const int k = m.rank();
  if (static_cast<int>(t.flag.size()) != k + 1) {
    throw InvalidTuple("flag of M must have rank(M) + 1 members");
  }
  for (int i = 0; i <= k; ++i) {
    const Subset x = t.flag[i];
    if (!x.IsSubsetOf(m.ground_set()) || !m.IsFlat(x) || m.Rank(x) != i ||
        (i > 0 && !t.flag[i - 1].IsProperSubsetOf(x))) {
      throw InvalidTuple("member " + std::to_string(i) +
                         " of the flag is not a rank-" + std::to_string(i) +
                         " flat extending the previous one");
    }
  }
  if (t.h < 0 || t.h > k) throw InvalidTuple("h outside [0, rank(M)]");
  if (!t.steps.IsSubsetOf(Subset::Full(t.h + 1).Without(0))) {
    throw InvalidTuple("C is not a subset of [h]");
  }
  const int size_c = t.steps.Size();
  if (static_cast<int>(t.fibers.size()) != size_c) {
    throw InvalidTuple("one fiber element is needed per member of C");
  }
  for (int j = 1; j <= size_c; ++j) {
    const int x = t.fibers[j - 1];
    if (x < 0 || x >= q.matroid().size() ||
        q.Element(x).tag != ConeElement::Tag::kFiber) {
      throw InvalidTuple("e_" + std::to_string(j) + " is not a fiber element");
    }
    const int level = t.h - size_c + j;
    const int e = q.Element(x).base;
    if (!(t.flag[level] - t.flag[level - 1]).Contains(e)) {
      throw InvalidTuple("p(e_" + std::to_string(j) + ") is not in X_" +
                         std::to_string(level) + " - X_" +
                         std::to_string(level - 1));
    }
  }
}

Flag FlagBijection(const ConeMatroid& q, const FlagTuple& t) {
  CheckFlagTuple(q, t);
  const int k = q.source().rank();
  std::vector<int> c_steps;
  std::vector<int> d_steps;
  SplitSteps(t.h, t.steps, c_steps, d_steps);
  Flag out{Subset()};
  size_t next_c = 0;
  size_t next_d = 0;
  for (int i = 1; i <= t.h; ++i) {
    if (next_c < c_steps.size() && c_steps[next_c] == i) {
      out.push_back(out.back().With(t.fibers[next_c]));
      ++next_c;
    } else {
      ++next_d;
      out.push_back(out.back() | t.flag[next_d]);
    }
  }
  for (int i = t.h + 1; i <= k + 1; ++i) out.push_back(q.Q(t.flag[i - 1]));
  return out;
}

FlagTuple FlagBijectionInverse(const ConeMatroid& q, const Flag& flag) {
  const Matroid& source = q.source();
  const int k = source.rank();
  const Matroid& cone = q.matroid();
  if (static_cast<int>(flag.size()) != k + 2) {
    throw InvalidTuple("a flag of the cone has rank(M) + 2 members");
  }
  for (int i = 0; i <= k + 1; ++i) {
    if (!flag[i].IsSubsetOf(cone.ground_set()) || !cone.IsFlat(flag[i]) ||
        cone.Rank(flag[i]) != i ||
        (i > 0 && !flag[i - 1].IsProperSubsetOf(flag[i]))) {
      throw InvalidTuple("not a flag of the cone at member " +
                         std::to_string(i));
    }
  }
  const Subset base = q.BaseSet();
  const Subset fibers = q.Fibers();
  FlagTuple t;
  t.h = 0;
  while (t.h + 1 <= k + 1 && !flag[t.h + 1].Contains(q.tip())) ++t.h;
  t.flag.assign(k + 1, Subset());
  for (int i = t.h + 1; i <= k + 1; ++i) t.flag[i - 1] = flag[i] & base;
  for (int i = 1; i <= t.h; ++i) {
    const Subset added = flag[i] - flag[i - 1];
    if ((added & fibers).Empty()) continue;
    if (added.Size() != 1) throw InvalidTuple("step adds a fiber and more");
    t.fibers.push_back(added.Min());
    t.steps = t.steps.With(i);
  }
  const int b = static_cast<int>(t.fibers.size());
  std::vector<Subset> distinct;
  for (int i = 0; i <= t.h; ++i) {
    const Subset x = flag[i] & base;
    if (distinct.empty() || distinct.back() != x) distinct.push_back(x);
  }
  if (static_cast<int>(distinct.size()) != t.h - b + 1) {
    throw InvalidTuple("base parts of the flag do not form a chain");
  }
  for (int i = 0; i <= t.h - b; ++i) t.flag[i] = distinct[i];
  Subset lifted = t.flag[t.h - b];
  for (int j = 1; j <= b; ++j) {
    lifted = lifted | q.P(Subset::Singleton(t.fibers[j - 1]));
    t.flag[t.h - b + j] = source.Closure(lifted);
  }
  if (FlagBijection(q, t) != flag) {
    throw InvalidTuple("the flag is not the image of its tuple");
  }
  return t;
}

std::vector<FlagTuple> EnumerateFlagTuples(const ConeMatroid& q) {
  const int k = q.source().rank();
  const int m = q.m();
  std::vector<FlagTuple> out;
  ForEachFlag(q.source(), [&](const Flag& flag) {
    for (int h = 0; h <= k; ++h) {
      for (uint64_t bits = 0; bits < (uint64_t{1} << h); ++bits) {
        const Subset steps = Subset::FromBits(bits << 1);
        const int size_c = steps.Size();
        // Choices for e_j: fibers over X_{h-|C|+j} - X_{h-|C|+j-1}.
        std::vector<std::vector<int>> options(size_c);
        for (int j = 1; j <= size_c; ++j) {
          const int level = h - size_c + j;
          (flag[level] - flag[level - 1]).ForEach([&](int e) {
            for (int f = 1; f <= m; ++f) options[j - 1].push_back(q.Fiber(e, f));
          });
        }
        std::vector<int> pick(size_c, 0);
        while (true) {
          FlagTuple t{flag, h, steps, {}};
          for (int j = 0; j < size_c; ++j) t.fibers.push_back(options[j][pick[j]]);
          out.push_back(std::move(t));
          int j = size_c - 1;
          while (j >= 0 && ++pick[j] == static_cast<int>(options[j].size())) {
            pick[j] = 0;
            --j;
          }
          if (j < 0) break;
        }
      }
    }
  });
  return out;
}

Composition ConeComposition(const Composition& a, int h, Subset steps, int m,
                            ConeVariant kind) {
  const int k = static_cast<int>(a.size()) - 1;
  Composition b(k + 2, 0);
  const bool baseless =
      kind == ConeVariant::kBaseless || kind == ConeVariant::kTiplessBaseless;
  const bool tipless =
      kind == ConeVariant::kTipless || kind == ConeVariant::kTiplessBaseless;
  if (baseless) {
    // Only C = [h] survives the deletion of E.
    int sum = 0;
    for (int j = 1; j <= h; ++j) {
      b[j] = 1;
      sum += m * a[j] - 1;
    }
    b[h + 1] = (tipless ? 0 : 1) + sum;
    for (int i = h + 2; i <= k + 1; ++i) b[i] = m * a[i - 1];
    return b;
  }
  int next_d = 0;
  int sum = 0;
  for (int i = 1; i <= h; ++i) {
    b[i] = steps.Contains(i) ? 1 : a[++next_d];
    sum += a[i] * (m + 1) - b[i];
  }
  b[h + 1] = (tipless ? 0 : 1) + sum;
  for (int i = h + 2; i <= k + 1; ++i) b[i] = (m + 1) * a[i - 1];
  return b;
}

namespace {

void CheckCatenary(const CatenaryData& cat) {
  if (cat.n < 0 || cat.k < 0 || cat.k > cat.n) {
    throw MalformedCatenary("need 0 <= k <= n");
  }
  if (cat.counts.empty()) throw MalformedCatenary("no flags");
  for (const auto& [a, count] : cat.counts) {
    if (static_cast<int>(a.size()) != cat.k + 1) {
      throw MalformedCatenary("composition " + CompositionString(a) +
                              " does not have k + 1 parts");
    }
    if (a[0] != 0) {
      throw MalformedCatenary("composition " + CompositionString(a) +
                              " has loops; the source must be loopless");
    }
    int sum = 0;
    for (int i = 1; i <= cat.k; ++i) {
      if (a[i] <= 0) {
        throw MalformedCatenary("composition " + CompositionString(a) +
                                " has a nonpositive part");
      }
      sum += a[i];
    }
    if (sum != cat.n) {
      throw MalformedCatenary("composition " + CompositionString(a) +
                              " does not sum to n");
    }
    if (count <= 0) {
      throw MalformedCatenary("composition " + CompositionString(a) +
                              " has a nonpositive count");
    }
  }
}

}  // namespace

CatenaryData CatenaryOfCone(const CatenaryData& source, int m,
                            ConeVariant kind) {
  if (m < 1) throw MalformedCatenary("m must be positive");
  CheckCatenary(source);
  const int n = source.n;
  const int k = source.k;
  const bool baseless =
      kind == ConeVariant::kBaseless || kind == ConeVariant::kTiplessBaseless;
  const bool tipless =
      kind == ConeVariant::kTipless || kind == ConeVariant::kTiplessBaseless;
  // Deleting the tip of the cone over the empty matroid, or E and the tip of
  // the 1-cone over U_{k,k}, lowers the rank; the result is M again.
  if (tipless && n == 0) return source;
  if (kind == ConeVariant::kTiplessBaseless && m == 1 && n == k) return source;

  CatenaryData out;
  out.n = (baseless ? m * n : (m + 1) * n) + (tipless ? 0 : 1);
  out.k = k + 1;
  for (const auto& [a, nu] : source.counts) {
    for (int h = tipless ? 1 : 0; h <= k; ++h) {
      if (kind == ConeVariant::kTiplessBaseless && m == 1) {
        bool has_big_step = false;
        for (int i = 1; i <= h; ++i) has_big_step |= a[i] > 1;
        if (!has_big_step) continue;
      }
      const uint64_t first = baseless ? (uint64_t{1} << h) - 1 : 0;
      for (uint64_t bits = first; bits < (uint64_t{1} << h); ++bits) {
        const Subset steps = Subset::FromBits(bits << 1);
        const int size_c = steps.Size();
        Count weight = nu;
        for (int j = 1; j <= size_c; ++j) weight *= m * a[h - size_c + j];
        out.counts[ConeComposition(a, h, steps, m, kind)] += weight;
      }
    }
  }
  return out;
}

namespace {

using Poly = std::vector<Count>;

Poly Multiply(const Poly& p, const Poly& q) {
  Poly out(p.size() + q.size() - 1, 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

void CheckSrc(const SrcData& src) {
  if (src.counts.empty()) throw MalformedSrc("no subsets");
  const int n = src.GroundSize();
  std::vector<Count> by_size(n + 1, 0);
  for (const auto& [key, count] : src.counts) {
    const auto [s, t, c] = key;
    if (!(s >= t && t >= c && c >= 0)) {
      throw MalformedSrc("triple (" + std::to_string(s) + "," +
                         std::to_string(t) + "," + std::to_string(c) +
                         ") violates s >= t >= c >= 0");
    }
    if (count <= 0) throw MalformedSrc("nonpositive count");
    by_size[s] += count;
  }
  for (int s = 0; s <= n; ++s) {
    if (by_size[s] != Binomial(n, s)) {
      throw MalformedSrc("counts of size " + std::to_string(s) +
                         " do not add up to C(n, s)");
    }
  }
  if (src.counts.begin()->first != SrcKey{0, 0, 0}) {
    throw MalformedSrc("the empty set must have rank 0");
  }
  for (const auto& [key, count] : src.counts) {
    if (key[0] == 1 && key[1] == 0) {
      throw MalformedSrc("the source has loops");
    }
  }
}

}  // namespace

TuttePolynomial TutteOfConeFromSrc(const SrcData& src, int m,
                                   ConeVariant kind) {
  if (m < 1) throw MalformedSrc("m must be positive");
  CheckSrc(src);
  const int n = src.GroundSize();
  const bool baseless =
      kind == ConeVariant::kBaseless || kind == ConeVariant::kTiplessBaseless;
  const bool tipless =
      kind == ConeVariant::kTipless || kind == ConeVariant::kTiplessBaseless;
  const int copies = baseless ? m : m + 1;
  // ((1 + x)^copies - 1)^s for every s.
  Poly per_element(copies + 1, 0);
  for (int j = 1; j <= copies; ++j) per_element[j] = Binomial(copies, j);
  std::vector<Poly> powers{{1}};
  for (int s = 1; s <= n; ++s) powers.push_back(Multiply(powers.back(), per_element));

  // (size, rank) -> number of subsets of the variant.
  std::map<std::pair<int, int>, Count> size_rank;
  for (const auto& [key, mu] : src.counts) {
    const auto [s, t, c] = key;
    const Poly& p = powers[s];
    // Subsets with one copy per element and fibers only over coloops keep
    // the tip out of the closure and have rank t.
    Count same_rank;
    if (baseless) {
      same_rank = s == c ? boost::multiprecision::pow(Count(m), c) : Count(0);
    } else {
      same_rank = boost::multiprecision::pow(Count(m + 1), c);
    }
    if (same_rank != 0) size_rank[{s, t}] += mu * same_rank;
    for (int j = 0; j < static_cast<int>(p.size()); ++j) {
      const Count higher = p[j] - (j == s ? same_rank : Count(0));
      if (higher != 0) size_rank[{j, t + 1}] += mu * higher;
      if (!tipless && p[j] != 0) size_rank[{j + 1, t + 1}] += mu * p[j];
    }
  }
  int rank = 0;
  for (const auto& [key, count] : size_rank) rank = std::max(rank, key.second);
  std::map<std::pair<int, int>, Count> corank_nullity;
  for (const auto& [key, count] : size_rank) {
    corank_nullity[{rank - key.second, key.first - key.second}] += count;
  }
  return TutteFromCorankNullity(corank_nullity);
}

Count PermutationClassSize(const GInvariant& g, int s, int t, int c) {
  Count total = 0;
  for (const auto& [seq, count] : g.counts) {
    if (static_cast<int>(seq.size()) < s) continue;
    const int ones = static_cast<int>(std::count(seq.begin(), seq.begin() + s, '1'));
    if (ones != t) continue;
    bool tail = true;
    for (int i = s - c; i < s && tail; ++i) tail = seq[i] == '1';
    if (tail) total += count;
  }
  return total;
}

SrcData SrcFromG(const GInvariant& g) {
  const int n = g.n;
  if (n < 0 || g.k < 0 || g.k > n) throw ValidationError("need 0 <= k <= n");
  Count total = 0;
  for (const auto& [seq, count] : g.counts) {
    if (static_cast<int>(seq.size()) != n ||
        std::count(seq.begin(), seq.end(), '1') != g.k ||
        seq.find_first_not_of("01") != std::string::npos) {
      throw ValidationError("sequence " + seq + " is not an (n, k)-sequence");
    }
    if (count <= 0) throw ValidationError("nonpositive count for " + seq);
    total += count;
  }
  if (total != Factorial(n)) {
    throw InconsistentSystem("the counts do not add up to n!");
  }
  SrcData src;
  for (int s = 0; s <= n; ++s) {
    Count sets_of_size = 0;
    for (int t = 0; t <= std::min(s, g.k); ++t) {
      std::vector<Count> f(t + 1, 0);
      for (int c = t; c >= 0; --c) {
        const Count unit = Factorial(c) * Factorial(s - c) * Factorial(n - s);
        Count rhs = PermutationClassSize(g, s, t, c);
        for (int c2 = c + 1; c2 <= t; ++c2) rhs -= f[c2] * Binomial(c2, c) * unit;
        if (rhs < 0 || rhs % unit != 0) {
          throw InconsistentSystem(
              "no nonnegative integer solution at (s,t,c) = (" +
              std::to_string(s) + "," + std::to_string(t) + "," +
              std::to_string(c) + ")");
        }
        f[c] = rhs / unit;
        if (f[c] != 0) src.counts[{s, t, c}] = f[c];
        sets_of_size += f[c];
      }
    }
    if (sets_of_size != Binomial(n, s)) {
      throw InconsistentSystem("solution has the wrong number of " +
                               std::to_string(s) + "-sets");
    }
  }
  return src;
}

int MinReconstructionM(ConeVariant kind) {
  switch (kind) {
    case ConeVariant::kFull:
      return 1;
    case ConeVariant::kTipless:
    case ConeVariant::kBaseless:
      return 2;
    case ConeVariant::kTiplessBaseless:
      return 3;
  }
  return 1;
}

namespace {

// Builds the matroid whose flats, with ranks, are `flats`; the family must
// be closed under intersection and contain the ground set.
Matroid FromFlats(int n, const std::map<Subset, int, bool (*)(Subset, Subset)>& flats) {
  auto rank = [&](Subset x) {
    int best = n + 1;
    for (const auto& [f, r] : flats) {
      if (x.IsSubsetOf(f)) best = std::min(best, r);
    }
    return best;
  };
  try {
    return Matroid::FromRankOracle(n, rank);
  } catch (const ValidationError& e) {
    throw NotAConeConfiguration(std::string("recovered flats do not form a matroid: ") +
                                e.what());
  }
}

using FlatMap = std::map<Subset, int, bool (*)(Subset, Subset)>;

void AddFlat(FlatMap& flats, Subset f, int rank) {
  auto [it, inserted] = flats.emplace(f, rank);
  if (!inserted && it->second != rank) {
    throw NotAConeConfiguration("a recovered flat gets two ranks");
  }
}

// Recovers M from the lattice and the lines through the tip, each carrying
// the size of its point set.
Matroid FromTipLines(const Configuration& config, const Lattice& lattice,
                     const std::vector<int>& lines,
                     const std::vector<int>& point_sizes) {
  std::vector<Subset> points;
  int n = 0;
  for (int size : point_sizes) {
    if (size < 1 || n + size > kMaxGroundSetSize) {
      throw NotAConeConfiguration("point sizes do not fit a ground set");
    }
    points.push_back(Subset::Full(n + size) - Subset::Full(n));
    n += size;
  }
  FlatMap flats(&CanonicalLess);
  AddFlat(flats, Subset(), 0);
  for (int node = 0; node < config.num_nodes(); ++node) {
    Subset f;
    bool above = false;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (lattice.Leq(lines[i], node)) {
        f |= points[i];
        above = true;
      }
    }
    if (above) AddFlat(flats, f, config.rho[node] - 1);
  }
  if (!flats.contains(Subset::Full(n))) {
    throw NotAConeConfiguration("the lines through the tip do not span");
  }
  return FromFlats(n, flats);
}

// Maximal cliques of the compatibility graph on `nodes` (Bron-Kerbosch with
// pivoting).
void MaximalCliques(const std::vector<std::vector<char>>& adjacent,
                    std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                    std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = !p.empty() ? p.front() : x.front();
  size_t best = 0;
  for (const auto* pool : {&p, &x}) {
    for (int u : *pool) {
      size_t deg = 0;
      for (int v : p) deg += adjacent[u][v];
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
  }
  const std::vector<int> candidates = p;
  for (int v : candidates) {
    if (adjacent[pivot][v]) continue;
    std::vector<int> p2;
    std::vector<int> x2;
    for (int u : p) {
      if (adjacent[v][u]) p2.push_back(u);
    }
    for (int u : x) {
      if (adjacent[v][u]) x2.push_back(u);
    }
    r.push_back(v);
    MaximalCliques(adjacent, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

// Rank of the source at least 3: the lines through the tip form the unique
// largest family of lines with at most one cyclic flat below each, pairwise
// joins of rank 3, and join equal to the top.
Matroid FromLargeRankConfiguration(const Configuration& config,
                                   const Lattice& lattice) {
  const int bottom = lattice.bottom();
  std::vector<int> candidates;
  std::vector<int> below(config.num_nodes(), -1);
  for (int node = 0; node < config.num_nodes(); ++node) {
    if (config.rho[node] != 2) continue;
    int count = 0;
    for (int y = 0; y < config.num_nodes(); ++y) {
      if (lattice.Less(bottom, y) && lattice.Less(y, node)) {
        ++count;
        below[node] = y;
      }
    }
    if (count <= 1) candidates.push_back(node);
  }
  const int c = static_cast<int>(candidates.size());
  std::vector<std::vector<char>> adjacent(c, std::vector<char>(c, 0));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      adjacent[i][j] =
          i != j && config.rho[lattice.Join(candidates[i], candidates[j])] == 3;
    }
  }
  std::vector<int> all(c);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  MaximalCliques(adjacent, r, all, {}, cliques);
  std::vector<int> best;
  int ties = 0;
  for (const auto& clique : cliques) {
    int join = bottom;
    for (int i : clique) join = lattice.Join(join, candidates[i]);
    if (join != lattice.top()) continue;
    if (clique.size() > best.size()) {
      best = clique;
      ties = 1;
    } else if (clique.size() == best.size()) {
      ++ties;
    }
  }
  if (best.empty()) {
    throw NotAConeConfiguration("no family of lines spans the top");
  }
  if (ties > 1) {
    throw NotAConeConfiguration("the largest spanning family of lines is not unique");
  }
  std::sort(best.begin(), best.end());
  std::vector<int> lines;
  std::vector<int> sizes;
  for (int i : best) {
    const int node = candidates[i];
    lines.push_back(node);
    sizes.push_back(below[node] >= 0 ? config.size[below[node]] : 1);
  }
  return FromTipLines(config, lattice, lines, sizes);
}

// Rank of the source at most 2, read off from sizes. Cones of flats F have
// size weight * |F| + offset.
Matroid FromSmallRankConfiguration(const Configuration& config,
                                   const Lattice& lattice, int weight,
                                   int offset) {
  const int top = lattice.top();
  const int rho_top = config.rho[top];
  if (rho_top == 0) {
    if (config.num_nodes() == 1 && config.size[top] == 0) {
      return Matroid::Uniform(0, 0);
    }
    throw NotAConeConfiguration("rank-0 configuration with elements");
  }
  if ((config.size[top] - offset) % weight != 0 || config.size[top] <= offset) {
    throw NotAConeConfiguration("top size is not that of a cone");
  }
  const int n = (config.size[top] - offset) / weight;
  if (rho_top == 2) return Matroid::Uniform(1, n);
  if (rho_top != 3) throw NotAConeConfiguration("unexpected top rank");
  std::vector<int> lines;
  for (int node = 0; node < config.num_nodes(); ++node) {
    if (config.rho[node] == 2) lines.push_back(node);
  }
  // Either every line is the cone of a point, or exactly one is the
  // ground set of M itself, of size n.
  auto classes_without = [&](int skip) -> std::optional<std::vector<int>> {
    std::vector<int> sizes;
    int total = 0;
    for (int node : lines) {
      if (node == skip) continue;
      const int s = config.size[node] - offset;
      if (s <= 0 || s % weight != 0) return std::nullopt;
      sizes.push_back(s / weight);
      total += s / weight;
    }
    if (total != n || sizes.size() < 2) return std::nullopt;
    return sizes;
  };
  std::optional<std::vector<int>> sizes = classes_without(-1);
  for (size_t i = 0; !sizes && i < lines.size(); ++i) {
    if (config.size[lines[i]] == n) sizes = classes_without(lines[i]);
  }
  if (!sizes) throw NotAConeConfiguration("line sizes do not fit a rank-2 source");
  std::vector<int> class_of;
  for (size_t i = 0; i < sizes->size(); ++i) {
    class_of.insert(class_of.end(), (*sizes)[i], static_cast<int>(i));
  }
  return Matroid::FromRankOracle(n, [&](Subset x) {
    Subset hit;
    x.ForEach([&](int e) { hit = hit.With(class_of[e]); });
    return std::min(2, hit.Size());
  });
}

// Lines of the baseless cone are q(P) - P for points P of size (|L|-1)/m.
Matroid FromBaselessConfiguration(const Configuration& config,
                                  const Lattice& lattice, int m) {
  std::vector<int> lines;
  std::vector<int> sizes;
  for (int node = 0; node < config.num_nodes(); ++node) {
    if (config.rho[node] != 2) continue;
    if ((config.size[node] - 1) % m != 0) {
      throw NotAConeConfiguration("line size " + std::to_string(config.size[node]) +
                                  " is not 1 mod m");
    }
    lines.push_back(node);
    sizes.push_back((config.size[node] - 1) / m);
  }
  return FromTipLines(config, lattice, lines, sizes);
}

}  // namespace

Matroid ReconstructFromConeConfig(const Configuration& config,
                                  ConeVariant kind, int m) {
  if (m < MinReconstructionM(kind)) {
    throw ValidationError(std::string("reconstruction from the ") +
                          VariantName(kind) + " cone needs m >= " +
                          std::to_string(MinReconstructionM(kind)));
  }
  CheckConfiguration(config);
  const Lattice lattice(config.num_nodes(), config.covers);
  Configuration adjusted = config;
  Matroid result = Matroid::Uniform(0, 0);
  switch (kind) {
    case ConeVariant::kFull:
    case ConeVariant::kTipless: {
      const int offset = kind == ConeVariant::kFull ? 1 : 0;
      result = config.rho[lattice.top()] >= 4
                   ? FromLargeRankConfiguration(config, lattice)
                   : FromSmallRankConfiguration(config, lattice, m + 1, offset);
      break;
    }
    case ConeVariant::kTiplessBaseless:
      for (int node = 0; node < adjusted.num_nodes(); ++node) {
        if (adjusted.rho[node] > 0) ++adjusted.size[node];
      }
      [[fallthrough]];
    case ConeVariant::kBaseless:
      result = FromBaselessConfiguration(adjusted, lattice, m);
      break;
  }
  Configuration rebuilt;
  try {
    rebuilt = ComputeConfiguration(FreeMCone(result, m).Variant(kind));
  } catch (const SourceHasLoops&) {
    throw NotAConeConfiguration("recovered matroid has loops");
  }
  if (!ConfigurationsEqual(rebuilt, config)) {
    throw NotAConeConfiguration(
        "no matroid has this configuration for its cone");
  }
  return result;
}

bool Certificate::AllPass() const {
  return std::all_of(legs.begin(), legs.end(),
                     [](const CertificateLeg& leg) { return leg.pass; });
}

namespace {

std::string FirstCatenaryDifference(const CatenaryData& a, const CatenaryData& b) {
  if (a.n != b.n || a.k != b.k) {
    return "(n,k) = (" + std::to_string(a.n) + "," + std::to_string(a.k) +
           ") vs (" + std::to_string(b.n) + "," + std::to_string(b.k) + ")";
  }
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      return "nu" + CompositionString(ia->first) + " = " + ia->second.str() +
             " vs 0";
    }
    if (ia == a.counts.end() || ib->first < ia->first) {
      return "nu" + CompositionString(ib->first) + " = 0 vs " + ib->second.str();
    }
    if (ia->second != ib->second) {
      return "nu" + CompositionString(ia->first) + " = " + ia->second.str() +
             " vs " + ib->second.str();
    }
    ++ia;
    ++ib;
  }
  return "";
}

std::string FlagCountWitness(const CatenaryData& cat) {
  return std::to_string(cat.counts.size()) + " compositions, " +
         cat.NumFlags().str() + " flags";
}

}  // namespace

Certificate CertifyPair(const Matroid& a, const Matroid& b, int m,
                        const Limits& limits) {
  Certificate cert;
  cert.m = m;

  {
    CertificateLeg leg{"M and N are not isomorphic", "backtracking search", false, ""};
    try {
      const auto phi = FindIsomorphism(a, b);
      leg.pass = !phi.has_value();
      if (phi) {
        std::ostringstream out;
        out << "isomorphism";
        for (size_t e = 0; e < phi->size(); ++e) {
          out << " " << a.names()[e] << "->" << b.names()[(*phi)[e]];
        }
        leg.witness = out.str();
      } else {
        leg.witness = "no rank-preserving bijection of cyclic flats";
      }
    } catch (const GroundSetTooLarge& e) {
      leg.witness = e.what();
    }
    cert.legs.push_back(std::move(leg));
  }

  const CatenaryData cat_a = ComputeCatenaryData(a);
  const CatenaryData cat_b = ComputeCatenaryData(b);
  {
    CertificateLeg leg{"M and N have the same G-invariant", "catenary data", false, ""};
    const std::string diff = FirstCatenaryDifference(cat_a, cat_b);
    leg.pass = diff.empty();
    leg.witness = diff.empty() ? FlagCountWitness(cat_a) : diff;
    if (leg.pass && Factorial(a.size()) <= limits.max_perms &&
        a.size() == b.size()) {
      leg.method = "catenary data and rank sequences";
      if (ComputeGInvariant(a, limits) != ComputeGInvariant(b, limits)) {
        leg.pass = false;
        leg.witness = "catenary data agree but rank sequences differ";
      }
    }
    cert.legs.push_back(std::move(leg));
  }

  const ConeMatroid qa = FreeMCone(a, m);
  const ConeMatroid qb = FreeMCone(b, m);
  {
    CertificateLeg leg{"the m-cones have the same G-invariant",
                       "flag enumeration and transfer from M", false, ""};
    const CatenaryData direct_a = ComputeCatenaryData(qa.matroid());
    const CatenaryData direct_b = ComputeCatenaryData(qb.matroid());
    const CatenaryData moved_a = CatenaryOfCone(cat_a, m, ConeVariant::kFull);
    const CatenaryData moved_b = CatenaryOfCone(cat_b, m, ConeVariant::kFull);
    std::string diff = FirstCatenaryDifference(direct_a, direct_b);
    if (!diff.empty()) {
      leg.witness = "enumeration: " + diff;
    } else if (!(diff = FirstCatenaryDifference(direct_a, moved_a)).empty()) {
      leg.witness = "transfer disagrees with enumeration for M: " + diff;
    } else if (!(diff = FirstCatenaryDifference(direct_b, moved_b)).empty()) {
      leg.witness = "transfer disagrees with enumeration for N: " + diff;
    } else {
      leg.pass = true;
      leg.witness = FlagCountWitness(direct_a);
    }
    cert.legs.push_back(std::move(leg));
  }

  {
    CertificateLeg leg{"the m-cones have different configurations",
                       "canonical labeled lattices", false, ""};
    const Configuration ca = ComputeConfiguration(qa.matroid());
    const Configuration cb = ComputeConfiguration(qb.matroid());
    leg.pass = !ConfigurationsEqual(ca, cb);
    std::ostringstream out;
    out << ca.num_nodes() << " and " << cb.num_nodes() << " cyclic flats";
    if (leg.pass) {
      out << "; canonical forms differ";
    } else {
      out << "; canonical forms agree";
    }
    leg.witness = out.str();
    cert.legs.push_back(std::move(leg));
  }
  return cert;
}

}  // namespace mcone
