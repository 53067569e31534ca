// Copyright 2026 The satdtrack Authors.
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

#ifndef SATD_ERRORS_H_
#define SATD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace satd {

// Base class for every error raised by the library. The CLI maps any of
// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotARepository : public Error {
 public:
  using Error::Error;
};

class BareOrCorrupt : public Error {
 public:
  using Error::Error;
};

class UnknownBranch : public Error {
 public:
  using Error::Error;
};

class DiffFailure : public Error {
 public:
  using Error::Error;
};

// Raised by the fixture and label loaders. `field_path()` points at the
// offending element, e.g. "files[0].actions[2].hunks[1].old_start".
class SchemaViolation : public Error {
 public:
  SchemaViolation(std::string field_path, const std::string& message)
      : Error(field_path + ": " + message), field_path_(std::move(field_path)) {}

  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// A detector-flagged deleted line did not correspond to any alive SATD.
class DanglingDeletion : public Error {
 public:
  using Error::Error;
};

// Replaying hunks against the reconstructed pre-image failed.
class ReplayMismatch : public Error {
 public:
  using Error::Error;
};

class CyclicChain : public Error {
 public:
  using Error::Error;
};

class EmptyLabelSet : public Error {
 public:
  using Error::Error;
};

class DuplicateGoldKey : public Error {
 public:
  using Error::Error;
};

}  // namespace satd

#endif  // SATD_ERRORS_H_
