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

// Maps from data of a loopless matroid M to data of its free m-cone Q and
// the variants of Q, and back: the flag bijection, cone catenary data from
// the catenary data of M, the cone Tutte polynomial from size-rank-coloop
// data, size-rank-coloop data from the G-invariant, and recovery of M from
// a cone configuration.

#ifndef MCONE_TRANSFER_H_
#define MCONE_TRANSFER_H_

#include <string>
#include <vector>

#include "mcone/cone.h"
#include "mcone/invariants.h"
#include "mcone/matroid.h"
#include "mcone/zlattice.h"

namespace mcone {

// ((X_i), h, C, (e_j)): a flag of M, a height 0 <= h <= k, a set C of
// steps in [h] (bit i set for step i), and one fiber element of Q per
// member of C with p(e_j) in X_{h-|C|+j} - X_{h-|C|+j-1}.
struct FlagTuple {
  Flag flag;
  int h = 0;
  Subset steps;
  std::vector<int> fibers;

  bool operator==(const FlagTuple&) const = default;
};

// Throws InvalidTuple describing the first failed condition.
void CheckFlagTuple(const ConeMatroid& q, const FlagTuple& t);

// The flag (Y_i) of Q built from t.
Flag FlagBijection(const ConeMatroid& q, const FlagTuple& t);
// Throws InvalidTuple if `flag` is not a flag of Q.
FlagTuple FlagBijectionInverse(const ConeMatroid& q, const Flag& flag);

// Every tuple, grouped by flag of M, then h, then C, then fibers.
std::vector<FlagTuple> EnumerateFlagTuples(const ConeMatroid& q);

// Composition of the image flag in the chosen variant, for a flag of M with
// composition a. Steps outside [h] are ignored for the baseless kinds,
// which require steps = [h].
Composition ConeComposition(const Composition& a, int h, Subset steps, int m,
                            ConeVariant kind);

// Catenary data of the chosen variant of Q_m(M) from that of M. Throws
// MalformedCatenary on inconsistent input or input with loops.
CatenaryData CatenaryOfCone(const CatenaryData& source, int m,
                            ConeVariant kind);

// Tutte polynomial of the chosen variant of Q_m(M) from the size-rank-coloop
// data of M. Throws MalformedSrc on inconsistent input.
TuttePolynomial TutteOfConeFromSrc(const SrcData& src, int m,
                                   ConeVariant kind);

// |G(s,t,c)|: orderings whose first s ranks hold t ones and end in c ones.
Count PermutationClassSize(const GInvariant& g, int s, int t, int c);

// Solves the triangular system linking G(s,t,c) and the src counts. Throws
// InconsistentSystem if a solution is negative or fractional.
SrcData SrcFromG(const GInvariant& g);

// Smallest m accepted by the reconstruction for each variant.
int MinReconstructionM(ConeVariant kind);

// A matroid whose chosen m-cone variant has configuration `config`. Throws
// ValidationError when m is out of range for the variant and
// NotAConeConfiguration when no matroid fits.
Matroid ReconstructFromConeConfig(const Configuration& config,
                                  ConeVariant kind, int m);

struct CertificateLeg {
  std::string claim;
  std::string method;
  bool pass = false;
  std::string witness;
};

struct Certificate {
  int m = 1;
  std::vector<CertificateLeg> legs;

  bool AllPass() const;
};

// Checks that M and N are nonisomorphic, share catenary data (and the
// G-invariant when it is within the permutation bound), that their m-cones
// share catenary data both by flag enumeration and by CatenaryOfCone, and
// that the cone configurations differ.
Certificate CertifyPair(const Matroid& a, const Matroid& b, int m,
                        const Limits& limits = {});

}  // namespace mcone

#endif  // MCONE_TRANSFER_H_
