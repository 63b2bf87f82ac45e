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

#include "mcone/zlattice.h"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace mcone {

std::vector<CyclicFlat> ScanCyclicFlats(const Matroid& m) {
  const FlatLattice flats = m.Flats();
  std::vector<CyclicFlat> out;
  for (size_t i = 0; i < flats.levels.size(); ++i) {
    for (Subset f : flats.levels[i]) {
      if (m.ColoopsOf(f).Empty()) out.push_back({f, static_cast<int>(i)});
    }
  }
  SortCanonically(out);
  return out;
}

namespace {

AxiomReport Fail(Axiom axiom, Subset first, Subset second, std::string detail) {
  AxiomReport report;
  report.ok = false;
  report.axiom = axiom;
  report.first = first;
  report.second = second;
  report.detail = std::move(detail);
  return report;
}

}  // namespace

AxiomReport ValidateAxioms(int n, const std::vector<CyclicFlat>& input,
                           Z3Mode mode) {
  std::vector<CyclicFlat> family = input;
  SortCanonically(family);
  const int size = static_cast<int>(family.size());
  if (size == 0) return Fail(Axiom::kZ0, {}, {}, "empty family");
  const Subset ground = Subset::Full(n);
  for (const CyclicFlat& z : family) {
    if (!z.set.IsSubsetOf(ground)) {
      return Fail(Axiom::kZ0, z.set, z.set, "set leaves the ground set");
    }
  }
  for (int i = 0; i + 1 < size; ++i) {
    if (family[i].set == family[i + 1].set) {
      return Fail(Axiom::kZ0, family[i].set, family[i].set, "repeated set");
    }
  }

  // (Z0): every pair has a least upper bound and a greatest lower bound.
  std::vector<std::vector<int>> join(size, std::vector<int>(size, -1));
  std::vector<std::vector<int>> meet(size, std::vector<int>(size, -1));
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      const Subset uni = family[i].set | family[j].set;
      const Subset inter = family[i].set & family[j].set;
      int lub = -1;
      int glb = -1;
      for (int t = 0; t < size; ++t) {
        const Subset z = family[t].set;
        if (uni.IsSubsetOf(z) && (lub < 0 || z.Size() < family[lub].set.Size())) {
          lub = t;
        }
        if (z.IsSubsetOf(inter) &&
            (glb < 0 || z.Size() > family[glb].set.Size())) {
          glb = t;
        }
      }
      for (int t = 0; t < size && lub >= 0; ++t) {
        if (uni.IsSubsetOf(family[t].set) &&
            !family[lub].set.IsSubsetOf(family[t].set)) {
          lub = -1;
        }
      }
      for (int t = 0; t < size && glb >= 0; ++t) {
        if (family[t].set.IsSubsetOf(inter) &&
            !family[t].set.IsSubsetOf(family[glb].set)) {
          glb = -1;
        }
      }
      if (lub < 0) {
        return Fail(Axiom::kZ0, family[i].set, family[j].set, "no join");
      }
      if (glb < 0) {
        return Fail(Axiom::kZ0, family[i].set, family[j].set, "no meet");
      }
      join[i][j] = join[j][i] = lub;
      meet[i][j] = meet[j][i] = glb;
    }
  }

  // (Z1): the least set has rank 0. Canonical order puts it first.
  if (family[0].rank != 0) {
    return Fail(Axiom::kZ1, family[0].set, family[0].set,
                "least set has rank " + std::to_string(family[0].rank));
  }

  // (Z2): 0 < r(Y) - r(X) < |Y - X| whenever X is a proper subset of Y.
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const CyclicFlat& x = family[i];
      const CyclicFlat& y = family[j];
      if (!x.set.IsProperSubsetOf(y.set)) continue;
      const int gap = y.rank - x.rank;
      if (gap <= 0 || gap >= (y.set - x.set).Size()) {
        return Fail(Axiom::kZ2, x.set, y.set,
                    "rank gap " + std::to_string(gap) + " with " +
                        std::to_string((y.set - x.set).Size()) +
                        " new elements");
      }
    }
  }

  // (Z3): r(X v Y) + r(X ^ Y) + |(X n Y) - (X ^ Y)| <= r(X) + r(Y).
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      const CyclicFlat& x = family[i];
      const CyclicFlat& y = family[j];
      if (mode == Z3Mode::kIncomparablePairs &&
          (x.set.IsSubsetOf(y.set) || y.set.IsSubsetOf(x.set))) {
        continue;
      }
      const CyclicFlat& lub = family[join[i][j]];
      const CyclicFlat& glb = family[meet[i][j]];
      const int lhs =
          lub.rank + glb.rank + ((x.set & y.set) - glb.set).Size();
      if (lhs > x.rank + y.rank) {
        return Fail(Axiom::kZ3, x.set, y.set,
                    "submodularity " + std::to_string(lhs) + " > " +
                        std::to_string(x.rank + y.rank));
      }
    }
  }
  return AxiomReport{};
}

Lattice::Lattice(int num_nodes, const std::vector<std::pair<int, int>>& covers)
    : n_(num_nodes) {
  if (n_ <= 0) throw ValidationError("a lattice needs at least one node");
  std::vector<std::vector<int>> succ(n_);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n_ || hi >= n_ || lo == hi) {
      throw ValidationError("cover (" + std::to_string(lo) + ", " +
                            std::to_string(hi) + ") is not a pair of nodes");
    }
    succ[lo].push_back(hi);
  }
  leq_.assign(n_, std::vector<char>(n_, 0));
  for (int x = 0; x < n_; ++x) {
    std::vector<int> stack{x};
    leq_[x][x] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : succ[v]) {
        if (!leq_[x][w]) {
          leq_[x][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (leq_[x][y] && leq_[y][x]) throw ValidationError("covers contain a cycle");
    }
  }
  join_.assign(n_, std::vector<int>(n_, -1));
  meet_.assign(n_, std::vector<int>(n_, -1));
  for (int x = 0; x < n_; ++x) {
    for (int y = x; y < n_; ++y) {
      int lub = -1;
      int glb = -1;
      for (int z = 0; z < n_; ++z) {
        if (leq_[x][z] && leq_[y][z] && (lub < 0 || leq_[z][lub])) lub = z;
        if (leq_[z][x] && leq_[z][y] && (glb < 0 || leq_[glb][z])) glb = z;
      }
      // The candidates found must bound every other bound.
      for (int z = 0; z < n_; ++z) {
        if (lub >= 0 && leq_[x][z] && leq_[y][z] && !leq_[lub][z]) lub = -1;
        if (glb >= 0 && leq_[z][x] && leq_[z][y] && !leq_[z][glb]) glb = -1;
      }
      if (lub < 0 || glb < 0) {
        throw ValidationError("nodes " + std::to_string(x) + " and " +
                              std::to_string(y) + " lack a join or meet");
      }
      join_[x][y] = join_[y][x] = lub;
      meet_[x][y] = meet_[y][x] = glb;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (int x = 1; x < n_; ++x) {
    bottom_ = meet_[bottom_][x];
    top_ = join_[top_][x];
  }
  down_.resize(n_);
  up_.resize(n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (!Less(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n_ && cover; ++z) {
        if (Less(x, z) && Less(z, y)) cover = false;
      }
      if (cover) {
        up_[x].push_back(y);
        down_[y].push_back(x);
      }
    }
  }
}

void CheckConfiguration(const Configuration& c) {
  const int n = c.num_nodes();
  if (static_cast<int>(c.rho.size()) != n) {
    throw ValidationError("size and rank labels differ in length");
  }
  for (int v = 0; v < n; ++v) {
    if (c.size[v] < 0 || c.rho[v] < 0) {
      throw ValidationError("negative node label");
    }
  }
  const Lattice lattice(n, c.covers);
  size_t hasse = 0;
  for (int v = 0; v < n; ++v) hasse += lattice.Up(v).size();
  if (hasse != c.covers.size()) {
    throw ValidationError("cover list has repeated or non-cover pairs");
  }
  if (c.rho[lattice.bottom()] != 0) {
    throw ValidationError("bottom node must have rank 0");
  }
  for (auto [lo, hi] : c.covers) {
    if (c.rho[hi] <= c.rho[lo] || c.size[hi] <= c.size[lo]) {
      throw ValidationError("labels must increase along covers");
    }
  }
  if (c.coloops < 0) throw ValidationError("negative coloop count");
}

Configuration ComputeConfiguration(const Matroid& m) {
  const auto& family = m.cyclic_flats();
  const int n = static_cast<int>(family.size());
  Configuration c;
  for (const CyclicFlat& z : family) {
    c.size.push_back(z.set.Size());
    c.rho.push_back(z.rank);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!family[x].set.IsProperSubsetOf(family[y].set)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) {
        if (family[x].set.IsProperSubsetOf(family[z].set) &&
            family[z].set.IsProperSubsetOf(family[y].set)) {
          cover = false;
        }
      }
      if (cover) c.covers.push_back({x, y});
    }
  }
  std::sort(c.covers.begin(), c.covers.end());
  c.coloops = m.Coloops().Size();
  return Canonicalize(c);
}

namespace {

// Individualization-refinement search for the lexicographically least
// certificate over all labelings compatible with the refined partitions.
class Canonizer {
 public:
  explicit Canonizer(const Configuration& c)
      : config_(c), lattice_(c.num_nodes(), c.covers), n_(c.num_nodes()) {}

  void Run() {
    std::vector<std::pair<int, int>> labels(n_);
    for (int v = 0; v < n_; ++v) labels[v] = {config_.rho[v], config_.size[v]};
    std::vector<std::pair<int, int>> distinct = labels;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> colors(n_);
    for (int v = 0; v < n_; ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), labels[v]) -
          distinct.begin());
    }
    Refine(colors);
    Search(colors);
  }

  const std::vector<int>& certificate() const { return best_; }
  const std::vector<int>& labeling() const { return best_labeling_; }

 private:
  static int NumColors(const std::vector<int>& colors) {
    return colors.empty() ? 0
                          : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  void Refine(std::vector<int>& colors) const {
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    int count = NumColors(colors);
    while (true) {
      std::vector<Signature> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int> down;
        std::vector<int> up;
        for (int w : lattice_.Down(v)) down.push_back(colors[w]);
        for (int w : lattice_.Up(v)) up.push_back(colors[w]);
        std::sort(down.begin(), down.end());
        std::sort(up.begin(), up.end());
        sig[v] = {colors[v], std::move(down), std::move(up)};
      }
      std::vector<Signature> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      for (int v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
            distinct.begin());
      }
      const int next = static_cast<int>(distinct.size());
      if (next == count) return;
      count = next;
    }
  }

  std::vector<int> Certificate(const std::vector<int>& position) const {
    std::vector<int> cert;
    cert.reserve(2 + 2 * n_ + 2 * config_.covers.size());
    cert.push_back(n_);
    cert.push_back(static_cast<int>(config_.covers.size()));
    std::vector<int> node_at(n_);
    for (int v = 0; v < n_; ++v) node_at[position[v]] = v;
    for (int p = 0; p < n_; ++p) {
      cert.push_back(config_.rho[node_at[p]]);
      cert.push_back(config_.size[node_at[p]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n_; ++v) {
      for (int w : lattice_.Up(v)) edges.push_back({position[v], position[w]});
    }
    std::sort(edges.begin(), edges.end());
    for (auto [lo, hi] : edges) {
      cert.push_back(lo);
      cert.push_back(hi);
    }
    return cert;
  }

  void Search(const std::vector<int>& colors) {
    const int count = NumColors(colors);
    if (count == n_) {
      std::vector<int> cert = Certificate(colors);
      if (best_.empty() || cert < best_) {
        best_ = std::move(cert);
        best_labeling_ = colors;
      }
      return;
    }
    std::vector<int> cell_size(count, 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> keys(n_);
      for (int u = 0; u < n_; ++u) {
        keys[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      }
      std::vector<int> distinct = keys;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) {
        child[u] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), keys[u]) -
            distinct.begin());
      }
      Refine(child);
      Search(child);
    }
  }

  const Configuration& config_;
  Lattice lattice_;
  int n_;
  std::vector<int> best_;
  std::vector<int> best_labeling_;
};

}  // namespace

std::vector<int> CanonicalForm(const Configuration& c) {
  Canonizer canon(c);
  canon.Run();
  return canon.certificate();
}

Configuration Canonicalize(const Configuration& c) {
  Canonizer canon(c);
  canon.Run();
  const std::vector<int>& position = canon.labeling();
  Configuration out;
  const int n = c.num_nodes();
  out.size.resize(n);
  out.rho.resize(n);
  for (int v = 0; v < n; ++v) {
    out.size[position[v]] = c.size[v];
    out.rho[position[v]] = c.rho[v];
  }
  const Lattice lattice(n, c.covers);
  for (int v = 0; v < n; ++v) {
    for (int w : lattice.Up(v)) out.covers.push_back({position[v], position[w]});
  }
  std::sort(out.covers.begin(), out.covers.end());
  out.coloops = c.coloops;
  return out;
}

bool ConfigurationsEqual(const Configuration& a, const Configuration& b) {
  if (a.num_nodes() != b.num_nodes()) return false;
  return CanonicalForm(a) == CanonicalForm(b);
}

}  // namespace mcone
