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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace planar_lagrange {

/// A finite planar rooted tree, or the empty tree `1`.
///
/// Trees are immutable values with shared structure. Two trees compare equal
/// iff they are isomorphic as planar rooted trees, which is the same as having
/// the same preorder arity word (see key()).
class PlanarTree {
 public:
  /// The empty tree.
  PlanarTree() = default;

  /// The single-vertex tree `x`.
  static PlanarTree leaf();

  /// A new root whose ordered children are `children`. An empty list yields
  /// a leaf. Throws DomainError if any child is the empty tree.
  static PlanarTree node(std::vector<PlanarTree> children);

  bool empty() const noexcept { return node_ == nullptr; }
  bool is_leaf() const noexcept;

  /// Number of children of the root; 0 for leaves and for the empty tree.
  std::size_t arity() const noexcept;
  std::span<const PlanarTree> children() const noexcept;

  /// 1-based child access.
  const PlanarTree& child(std::size_t index) const;

  /// Number of leaves; 0 for the empty tree.
  std::size_t degree() const noexcept;
  std::size_t vertex_count() const noexcept;

  /// Maximal distance from the root to a leaf; 0 for a leaf and the empty tree.
  std::size_t height() const noexcept;

  /// True iff no vertex has exactly one child. The empty tree is reduced.
  bool is_reduced() const noexcept;

  /// Canonical key: the preorder arity word ("2 0 0"), or "1" for the empty tree.
  const std::string& key() const noexcept;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) noexcept {
    return a.node_ == b.node_ || a.key() == b.key();
  }
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  struct Node;
  explicit PlanarTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct PlanarTreeHash {
  std::size_t operator()(const PlanarTree& t) const noexcept {
    return std::hash<std::string>{}(t.key());
  }
};

/// Address of a vertex: the 1-based child indices followed from the root.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<std::uint32_t> path) : path_(std::move(path)) {}
  Position(std::initializer_list<std::uint32_t> path) : path_(path) {}

  static Position root() { return Position(); }

  bool is_root() const noexcept { return path_.empty(); }
  std::size_t depth() const noexcept { return path_.size(); }
  const std::vector<std::uint32_t>& path() const noexcept { return path_; }

  Position child(std::uint32_t index) const;
  Position parent() const;

  /// Path concatenation: `this` followed by `suffix`.
  Position join(const Position& suffix) const;

  /// True iff `this` is `other` or one of its ancestors.
  bool is_prefix_of(const Position& other) const noexcept;

  /// Dotted notation: "" for the root, "2.1" for the first child of the second child.
  std::string to_string() const;

  // Lexicographic order on paths is the planar depth-first (preorder) order.
  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a, const Position& b) noexcept {
    return a.path_ <=> b.path_;
  }

 private:
  std::vector<std::uint32_t> path_;
};

/// Inverse of Position::to_string. Throws ParseError.
Position parse_position(std::string_view text);

enum class TreeFormat { literal, arity_word, dot };

/// Parses the literal grammar  Tree := "1" | "x" | "(" Tree+ ")".
/// "1" (the empty tree) is accepted only as the whole input.
PlanarTree parse_tree(std::string_view text);

/// Parses a preorder arity word such as "2 0 0"; "1" alone is the empty tree.
PlanarTree tree_from_arity_word(std::string_view text);

std::string render_tree(const PlanarTree& t, TreeFormat format = TreeFormat::literal);

/// m-ary grafting: a new root whose ordered children are `children`.
/// Requires m >= 1 and nonempty children.
PlanarTree graft(std::span<const PlanarTree> children);
PlanarTree graft(std::initializer_list<PlanarTree> children);

/// Grafts scions[i] onto the i-th leaf of \`base\` (planar order). Needs
/// exactly degree(base) nonempty scions.
PlanarTree graft_over(const PlanarTree& base, std::span<const PlanarTree> scions);

/// The binary tree product S.T = graft({S, T}); the empty tree is a two-sided unit.
PlanarTree tree_product(const PlanarTree& left, const PlanarTree& right);

bool is_valid_position(const PlanarTree& t, const Position& p) noexcept;

/// Number of children of the vertex at `p`. Throws DomainError on invalid positions.
std::size_t arity(const PlanarTree& t, const Position& p);

/// All vertex positions in preorder.
std::vector<Position> vertex_positions(const PlanarTree& t);

/// Leaf positions in planar depth-first order.
std::vector<Position> leaf_positions(const PlanarTree& t);

Position first_leaf(const PlanarTree& t);

/// `x`, or a tree whose root has two children the first of which is a leaf.
bool is_right_sided(const PlanarTree& t);

/// T' with t = x.T' (the empty tree for t = x).
PlanarTree right_factor(const PlanarTree& t);

/// The vertex at `p` together with all of its descendants.
PlanarTree closed_subtree_at(const PlanarTree& t, const Position& p);

/// A connected set of vertices of a host tree with a unique topmost vertex.
class SubtreeSelection {
 public:
  /// Throws DomainError unless every position is valid in `host` and the set is
  /// connected below a unique minimal vertex.
  SubtreeSelection(PlanarTree host, std::set<Position> vertices);

  static SubtreeSelection single(const PlanarTree& host, const Position& p);

  /// Every descendant of `p`, i.e. the closed subtree at `p`.
  static SubtreeSelection closure(const PlanarTree& host, const Position& p);

  const PlanarTree& host() const noexcept { return host_; }
  const Position& root() const noexcept { return root_; }
  const std::set<Position>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(const Position& p) const { return vertices_.contains(p); }

  /// Selected vertices without selected children, in preorder.
  std::vector<Position> leaves() const;
  std::vector<Position> interior() const;
  std::size_t degree() const { return leaves().size(); }

  /// Every selected vertex keeps all or none of its host children.
  bool is_relatively_open() const;

  /// The selection as an abstract planar tree.
  PlanarTree shape() const;

  /// Sorted position strings, e.g. {"", "1", "2"}.
  std::vector<std::string> position_strings() const;

  friend bool operator==(const SubtreeSelection& a, const SubtreeSelection& b) {
    return a.host_ == b.host_ && a.vertices_ == b.vertices_;
  }
  friend std::strong_ordering operator<=>(const SubtreeSelection& a, const SubtreeSelection& b) {
    if (auto c = a.host_ <=> b.host_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
  }

 private:
  PlanarTree host_;
  Position root_;
  std::set<Position> vertices_;
};

struct ForestComponent {
  Position root;
  PlanarTree tree;

  friend bool operator==(const ForestComponent&, const ForestComponent&) = default;
};

/// Components in planar order of their roots.
using Forest = std::vector<ForestComponent>;

/// T - In(S): the closed subtrees of `t` rooted at the leaves of `s`.
/// `s` must be a relatively open selection on `t`.
Forest remove_interior(const PlanarTree& t, const SubtreeSelection& s);

/// Relatively open and rooted at the root of `t`.
bool is_open(const PlanarTree& t, const SubtreeSelection& s);

/// Open, of degree > 1, and every leaf of `s` has a right-sided closure in `t`.
bool is_completely_right_sided(const PlanarTree& t, const SubtreeSelection& s);

/// Upper bound on the size argument of the tree enumerators.
struct EnumerationLimit {
  std::size_t max_size = 10;
};

/// All planar rooted trees with `vertices` vertices, sorted by key.
std::vector<PlanarTree> enumerate_pt(std::size_t vertices, EnumerationLimit limit = {});

/// All reduced planar rooted trees with `degree` leaves, sorted by key.
std::vector<PlanarTree> enumerate_prt(std::size_t degree, EnumerationLimit limit = {});

/// All right-sided reduced trees with `degree` leaves, sorted by key.
std::vector<PlanarTree> enumerate_right_sided(std::size_t degree, EnumerationLimit limit = {});

/// Open subtrees of `t` (rooted at its root, all-or-none children), including
/// the single root vertex and `t` itself.
std::vector<SubtreeSelection> enumerate_open_subtrees(const PlanarTree& t);

/// Relatively open selections rooted at every vertex of `t`.
std::vector<SubtreeSelection> enumerate_relatively_open(const PlanarTree& t);

}  // namespace planar_lagrange
