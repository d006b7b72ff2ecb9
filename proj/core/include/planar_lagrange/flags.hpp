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

#include <string>
#include <string_view>
#include <vector>

#include "planar_lagrange/luk.hpp"
#include "planar_lagrange/tree.hpp"

namespace planar_lagrange {

/// A right-sided open flag (S_1, ..., S_r) on a right-sided host.
///
/// S_r is the whole host; earlier stages are completely right-sided open
/// subtrees, each strictly inside the next in the sense of
/// is_strictly_contained. The flag on `x` is the single stage {root}.
struct Flag {
  PlanarTree host;
  std::vector<SubtreeSelection> stages;

  friend bool operator==(const Flag&, const Flag&) = default;
};

/// A right-sided decomposition: pieces sorted by root position.
struct Decomposition {
  PlanarTree host;
  std::vector<SubtreeSelection> pieces;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Every leaf of `inner` that is also a leaf of `outer` is a leaf of `host`.
/// Throws DomainError unless inner is contained in outer.
bool is_strictly_contained(const PlanarTree& host, const SubtreeSelection& inner,
                           const SubtreeSelection& outer);

bool is_valid_flag(const Flag& flag);

/// Throws DomainError naming the first violated flag condition.
void validate_flag(const Flag& flag);

/// All flags on a right-sided tree, ordered by length and then by stages.
std::vector<Flag> enumerate_flags(const PlanarTree& t);

/// The word of a flag over the graded alphabet of reduced trees and `1`.
GradedWord encode_flag(const Flag& flag);

/// Inverse of encode_flag; rebuilds the host from the word.
Flag decode_flag(const GradedWord& w);

bool is_decomposition(const PlanarTree& host, const std::vector<SubtreeSelection>& pieces);

/// All right-sided decompositions of a right-sided tree, in lexicographic order.
std::vector<Decomposition> enumerate_decompositions(const PlanarTree& t);

Decomposition flag_to_decomposition(const Flag& flag);
Flag decomposition_to_flag(const Decomposition& d);

/// {"host": "<literal>", "stages": [["", "1", "2"], ...]}
std::string flag_to_json(const Flag& flag);
Flag flag_from_json(std::string_view text);

/// {"host": "<literal>", "pieces": [["", "1", "2"], ...]}
std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(std::string_view text);

}  // namespace planar_lagrange
