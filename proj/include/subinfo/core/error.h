// Copyright 2026 The Authors.
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

#ifndef SUBINFO_CORE_ERROR_H_
#define SUBINFO_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace subinfo {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: empty set lists, out-of-range indices, bad parameters.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Ground-set mismatches and rejected structural hypotheses (a guard found the
// objective is not monotone/submodular, or the problem is refused outright).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A family-specific precondition of a closed form does not hold (for
// example pairwise disjointness).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive procedures past their size limits.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The instance is degenerate for the requested quantity (all elements are
// dummies, so curvature is undefined).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace subinfo

#endif  // SUBINFO_CORE_ERROR_H_
