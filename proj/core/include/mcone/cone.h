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

// The free m-cone of a loopless matroid M.
//
// Its ground set is E(M), m fiber elements T_e over every e in E(M), and a
// tip a. The cyclic flats are those of M together with the cones
// q(F) = F + a + (fibers over F) of the nonempty flats F of M, where
// r(q(F)) = r(F) + 1.
//
// Element ids: base e keeps id e, fiber j (1-based) over e is
// n + e * m + (j - 1), and the tip is (m + 1) * n.

#ifndef MCONE_CONE_H_
#define MCONE_CONE_H_

#include <optional>
#include <string>

#include "mcone/matroid.h"

namespace mcone {

enum class ConeVariant { kFull, kTipless, kBaseless, kTiplessBaseless };

const char* VariantName(ConeVariant kind);
// Accepts "full", "tipless", "baseless", "tipless-baseless" and the
// underscore spelling; nullopt otherwise.
std::optional<ConeVariant> ParseVariant(const std::string& name);

struct ConeElement {
  enum class Tag { kBase, kFiber, kTip };
  Tag tag;
  int base = -1;   // e, for kBase and kFiber
  int fiber = 0;   // j in [m], for kFiber
};

class ConeMatroid {
 public:
  int m() const { return m_; }
  const Matroid& source() const { return source_; }
  const Matroid& matroid() const { return cone_; }
  int source_size() const { return source_.size(); }

  int Base(int e) const { return e; }
  int Fiber(int e, int j) const { return n_ + e * m_ + (j - 1); }
  int tip() const { return (m_ + 1) * n_; }
  ConeElement Element(int id) const;

  Subset BaseSet() const { return Subset::Full(n_); }
  Subset FiberSet(int e) const;
  Subset Fibers() const;
  Subset TipSet() const { return Subset::Singleton(tip()); }

  // q(S) = S + a + fibers over S.
  Subset Q(Subset s) const;
  // p(S) = (S n E) + {e : S meets T_e}.
  Subset P(Subset s) const;

  // Flat test through the characterization of flats of the cone: flats
  // through the tip are cones of flats of M; the others meet E in a flat of
  // M, have pairwise distinct projections, and their fibers extend any
  // basis of the base part independently.
  bool IsFlat(Subset f) const;

  // The matroid with the tip, the base copy of E, or both deleted.
  Matroid Variant(ConeVariant kind) const;
  // Elements removed by the variant.
  Subset VariantDeletion(ConeVariant kind) const;

 private:
  friend ConeMatroid FreeMCone(const Matroid& source, int m, bool validate);
  ConeMatroid(Matroid source, Matroid cone, int m)
      : source_(std::move(source)),
        cone_(std::move(cone)),
        m_(m),
        n_(source_.size()) {}

  Matroid source_;
  Matroid cone_;
  int m_;
  int n_;
};

// Throws SourceHasLoops if `source` has loops, ValidationError if m < 1 or
// the cone would not fit the 64-element ground set. With validate = false
// the cyclic-flat axioms are not re-checked.
ConeMatroid FreeMCone(const Matroid& source, int m, bool validate = true);

// Rank function min(r(X) + 1, |X|).
Matroid HiggsLift(const Matroid& m);

}  // namespace mcone

#endif  // MCONE_CONE_H_
