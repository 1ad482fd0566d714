// Copyright 2026 The IESDS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IESDS_ERRORS_H_
#define IESDS_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iesds {

// Malformed or inconsistent input: unknown names, bad files, arcs that do
// not exist. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A game or message set that parses but violates a semantic invariant.
class ValidationError : public InputError {
 public:
  ValidationError(const std::string& what, std::vector<std::string> details)
      : InputError(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

// Brute-force enumeration refused because it would exceed a configured
// cap. Maps to CLI exit code 2.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  // Saturates at UINT64_MAX.
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// A formula outside the fragment the per-player evaluator supports.
class UnsupportedQueryError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace iesds

#endif  // IESDS_ERRORS_H_
