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

#include "planar_lagrange/tree.hpp"

namespace planar_lagrange {

/// A letter of an N-graded alphabet. The symbol is opaque; its degree is
/// fixed by the alphabet the letter was drawn from.
struct GradedLetter {
  std::string symbol;
  std::size_t degree = 0;

  friend bool operator==(const GradedLetter&, const GradedLetter&) = default;
  friend auto operator<=>(const GradedLetter&, const GradedLetter&) = default;
};

using GradedWord = std::vector<GradedLetter>;

/// The letter lambda(n) of the alphabet N, of degree n.
GradedLetter nat_letter(std::size_t n);

/// The letter of a reduced tree (or the empty tree), graded by the number of leaves.
/// The symbol is the tree's arity-word key.
GradedLetter tree_letter(const PlanarTree& t);

/// Inverse of tree_letter.
PlanarTree letter_tree(const GradedLetter& letter);

/// Sum over the letters of (degree - 1).
std::int64_t delta(const GradedWord& w);

/// delta(w) = -1 and every proper left factor has delta >= 0.
bool is_luk(const GradedWord& w);

/// If `w` is a product of r > 0 Lukasiewicz words, returns r.
std::optional<std::size_t> is_product_of_luk(const GradedWord& w);

/// Unique factorization into Lukasiewicz words. Throws DomainError if `w` is
/// not such a product.
std::vector<GradedWord> factor(const GradedWord& w);

struct HeadDecomposition {
  GradedLetter head;
  std::vector<GradedWord> parts;
};

/// w = head . parts[0] ... parts[m-1] with m = head.degree and every part a
/// Lukasiewicz word.
HeadDecomposition head_decompose(const GradedWord& w);

/// Concatenates `head` with `parts`; the result is a Lukasiewicz word.
GradedWord luk_compose(const GradedLetter& head, const std::vector<GradedWord>& parts);

std::size_t height(const GradedWord& w);

/// Preorder arity word of a nonempty planar tree.
GradedWord encode_pt(const PlanarTree& t);

/// Inverse of encode_pt on Luk(N).
PlanarTree decode_pt(const GradedWord& w);

/// "3 0 1 2 0 0 1 0"
GradedWord parse_nat_word(std::string_view text);
std::string render_nat_word(const GradedWord& w);

/// "(x x); 1; 1" -- semicolon separated tree literals of reduced trees.
GradedWord parse_tree_word(std::string_view text);
std::string render_tree_word(const GradedWord& w);

}  // namespace planar_lagrange
