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

#ifndef MCONE_ERRORS_H_
#define MCONE_ERRORS_H_

#include <stdexcept>
#include <string>

#include "mcone/subset.h"

namespace mcone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not describe a valid object (bad document, axiom failure,
// broken precondition on a user-supplied structure).
class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class Axiom { kZ0, kZ1, kZ2, kZ3 };

const char* AxiomName(Axiom axiom);

class AxiomViolation : public ValidationError {
 public:
  AxiomViolation(Axiom axiom, Subset first, Subset second,
                 const std::string& detail)
      : ValidationError(std::string("axiom ") + AxiomName(axiom) +
                        " violated: " + detail),
        axiom_(axiom),
        first_(first),
        second_(second) {}

  Axiom axiom() const { return axiom_; }
  Subset first() const { return first_; }
  Subset second() const { return second_; }

 private:
  Axiom axiom_;
  Subset first_;
  Subset second_;
};

class NotABasisSystem : public ValidationError {
 public:
  NotABasisSystem(Subset first, Subset second, const std::string& detail)
      : ValidationError("not a basis system: " + detail),
        first_(first),
        second_(second) {}
  Subset first() const { return first_; }
  Subset second() const { return second_; }

 private:
  Subset first_;
  Subset second_;
};

class SourceHasLoops : public ValidationError {
 public:
  SourceHasLoops() : ValidationError("cone construction needs a loopless matroid") {}
};

class MalformedCatenary : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MalformedSrc : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidTuple : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotAConeConfiguration : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An enumeration would exceed its configured bound.
class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

// The deletion drops the rank, so no flag survives it.
class AllCollapse : public Error {
 public:
  using Error::Error;
};

// A solved quantity that must be a nonnegative integer is not.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace mcone

#endif  // MCONE_ERRORS_H_
