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

#ifndef MCONE_SUBSET_H_
#define MCONE_SUBSET_H_

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mcone {

// Ground sets are bit-packed into one machine word.
inline constexpr int kMaxGroundSetSize = 64;

// A finite set of element ids in [0, 64).
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset FromBits(uint64_t bits) { return Subset(bits); }
  static Subset Of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s = s.With(e);
    return s;
  }
  static Subset Of(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s = s.With(e);
    return s;
  }
  // {0, ..., n-1}.
  static constexpr Subset Full(int n) {
    assert(n >= 0 && n <= kMaxGroundSetSize);
    return Subset(n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr Subset Singleton(int e) { return Subset(uint64_t{1} << e); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr int Size() const { return std::popcount(bits_); }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr bool Contains(int e) const { return (bits_ >> e) & 1; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool IsProperSubsetOf(Subset other) const {
    return IsSubsetOf(other) && bits_ != other.bits_;
  }
  constexpr Subset With(int e) const { return Subset(bits_ | uint64_t{1} << e); }
  constexpr Subset Without(int e) const {
    return Subset(bits_ & ~(uint64_t{1} << e));
  }
  // Smallest element; the set must be nonempty.
  constexpr int Min() const { return std::countr_zero(bits_); }

  std::vector<int> Elements() const {
    std::vector<int> out;
    out.reserve(Size());
    ForEach([&](int e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  constexpr void ForEach(F&& f) const {
    for (uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Subset& operator-=(Subset o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const Subset&) const = default;

 private:
  constexpr explicit Subset(uint64_t bits) : bits_(bits) {}
  uint64_t bits_ = 0;
};

// Orders subsets by size, then lexicographically by their sorted id lists.
inline bool CanonicalLess(Subset a, Subset b) {
  if (a.Size() != b.Size()) return a.Size() < b.Size();
  if (a == b) return false;
  // The smallest id on which the sets disagree decides.
  const uint64_t diff = a.bits() ^ b.bits();
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

// Packs the members of `x` that lie in `keep` into consecutive ids, in the
// order of `keep`.
inline Subset Compress(Subset x, Subset keep) {
  uint64_t out = 0;
  int pos = 0;
  keep.ForEach([&](int e) {
    if (x.Contains(e)) out |= uint64_t{1} << pos;
    ++pos;
  });
  return Subset::FromBits(out);
}

// Inverse of Compress for sets living on the packed ids.
inline Subset Expand(Subset packed, Subset keep) {
  uint64_t out = 0;
  int pos = 0;
  keep.ForEach([&](int e) {
    if (packed.Contains(pos)) out |= uint64_t{1} << e;
    ++pos;
  });
  return Subset::FromBits(out);
}

}  // namespace mcone

template <>
struct std::hash<mcone::Subset> {
  size_t operator()(mcone::Subset s) const noexcept {
    return std::hash<uint64_t>()(s.bits() * 0x9E3779B97F4A7C15ULL);
  }
};

#endif  // MCONE_SUBSET_H_
