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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planar_lagrange {

enum class VerifySuite { all, trees, luk, bijections, inversion };

std::optional<VerifySuite> parse_verify_suite(std::string_view name);
std::string_view verify_suite_name(VerifySuite suite);

struct VerifyOptions {
  /// Truncation degree for the inversion suite and host-degree bound for the
  /// bijection suite.
  std::size_t max_degree = 6;
  std::uint64_t seed = 0;
  /// Number of random series per randomized inversion invariant.
  std::size_t random_cases = 20;
};

struct InvariantResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant checks of `suite` in a fixed order. Deterministic for a
/// given seed.
std::vector<InvariantResult> run_verification(VerifySuite suite, const VerifyOptions& options);

}  // namespace planar_lagrange
