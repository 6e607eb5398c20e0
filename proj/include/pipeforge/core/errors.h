// Copyright 2026 The Pipeforge Authors.
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

#ifndef PIPEFORGE_CORE_ERRORS_H_
#define PIPEFORGE_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pipeforge {

// Root of every exception thrown by the library. Transport failures of
// component adapters are not errors; they degrade to empty annotations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text: JSON, CSV, embedding rows.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input parsed but violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inconsistent or incomplete configuration (missing embeddings, unknown
// setting name, unregistered component, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Vector/matrix shapes or feature names do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation cannot produce a meaningful value for the given data, e.g.
// importance of an ensemble without any split.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Argument outside its documented domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace pipeforge

#endif  // PIPEFORGE_CORE_ERRORS_H_
