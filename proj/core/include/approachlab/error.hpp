// Copyright 2026 The approachlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APPROACHLAB_ERROR_HPP_
#define APPROACHLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace approachlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (vector lengths, matrix sizes, polytope dims).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("rational division by zero") {}
};

// A play or loss is not a member of the polytope it must belong to.
class InvalidPlayError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input violating its documented contract
// (improper instance where proper is required, singular S, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input: rational strings, JSON documents, CLI files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The halfspace-action LP had no solution for the queried constraint mix, so
// the approachability instance is certified not approachable.
class NotApproachableError : public Error {
 public:
  using Error::Error;
};

}  // namespace approachlab

#endif  // APPROACHLAB_ERROR_HPP_
