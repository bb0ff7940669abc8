// Copyright 2026 The kpcount Authors
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

#ifndef KPCOUNT_ERRORS_H_
#define KPCOUNT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kpcount {

// Root of every error thrown by the library. The CLI maps the subclasses
// onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: malformed solutions, generator parameters, files.
class UsageError : public Error {
 public:
  using Error::Error;
};

class InvalidSolutionError : public UsageError {
 public:
  using UsageError::UsageError;
};

class InvalidInstanceError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParameterError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Failures while solving a well-formed instance.
class SolveError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLargeError : public SolveError {
 public:
  using SolveError::SolveError;
};

class OverflowError : public SolveError {
 public:
  using SolveError::SolveError;
};

class TableMismatchError : public SolveError {
 public:
  using SolveError::SolveError;
};

class InsufficientTablesError : public SolveError {
 public:
  using SolveError::SolveError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kpcount

#endif  // KPCOUNT_ERRORS_H_
