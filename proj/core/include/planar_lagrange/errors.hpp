// Copyright 2026 The planar_lagrange Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planar_lagrange {

/// Malformed textual input (tree literals, words, series files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed the configured size cap.
class ResourceLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace planar_lagrange
