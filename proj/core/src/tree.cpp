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

#include "planar_lagrange/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "planar_lagrange/errors.hpp"

namespace planar_lagrange {

struct PlanarTree::Node {
  std::vector<PlanarTree> children;
  std::size_t degree = 1;
  std::size_t vertices = 1;
  std::size_t height = 0;
  bool reduced = true;
  std::string key;
};

namespace {

const std::string& empty_key() {
  static const std::string key = "1";
  return key;
}

}  // namespace

PlanarTree PlanarTree::leaf() {
  static const PlanarTree x = node({});
  return x;
}

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
  auto n = std::make_shared<Node>();
  n->key = std::to_string(children.size());
  if (!children.empty()) {
    n->degree = 0;
    n->reduced = children.size() != 1;
  }
  for (const auto& c : children) {
    if (c.empty()) throw DomainError("the empty tree cannot be grafted as a child");
    n->degree += c.degree();
    n->vertices += c.vertex_count();
    n->height = std::max(n->height, c.height() + 1);
    n->reduced = n->reduced && c.is_reduced();
    n->key += ' ';
    n->key += c.key();
  }
  n->children = std::move(children);
  return PlanarTree(std::move(n));
}

bool PlanarTree::is_leaf() const noexcept { return node_ && node_->children.empty(); }

std::size_t PlanarTree::arity() const noexcept { return node_ ? node_->children.size() : 0; }

std::span<const PlanarTree> PlanarTree::children() const noexcept {
  if (!node_) return {};
  return node_->children;
}

const PlanarTree& PlanarTree::child(std::size_t index) const {
  if (index == 0 || index > arity()) {
    throw DomainError("child index " + std::to_string(index) + " out of range for arity " +
                      std::to_string(arity()));
  }
  return node_->children[index - 1];
}

std::size_t PlanarTree::degree() const noexcept { return node_ ? node_->degree : 0; }
std::size_t PlanarTree::vertex_count() const noexcept { return node_ ? node_->vertices : 0; }
std::size_t PlanarTree::height() const noexcept { return node_ ? node_->height : 0; }
bool PlanarTree::is_reduced() const noexcept { return node_ ? node_->reduced : true; }
const std::string& PlanarTree::key() const noexcept { return node_ ? node_->key : empty_key(); }

// Position

Position Position::child(std::uint32_t index) const {
  auto p = path_;
  p.push_back(index);
  return Position(std::move(p));
}

Position Position::parent() const {
  if (path_.empty()) throw DomainError("the root has no parent");
  return Position(std::vector<std::uint32_t>(path_.begin(), path_.end() - 1));
}

Position Position::join(const Position& suffix) const {
  auto p = path_;
  p.insert(p.end(), suffix.path_.begin(), suffix.path_.end());
  return Position(std::move(p));
}

bool Position::is_prefix_of(const Position& other) const noexcept {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string Position::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path_[i]);
  }
  return out;
}

Position parse_position(std::string_view text) {
  std::vector<std::uint32_t> path;
  if (text.empty()) return Position();
  std::size_t i = 0;
  while (true) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || v == 0) throw ParseError("expected a positive child index", i);
    path.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i == text.size()) break;
    if (text[i] != '.') throw ParseError("expected '.'", i);
    ++i;
  }
  return Position(std::move(path));
}

// Parsing and rendering

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  PlanarTree parse() {
    skip_space();
    if (peek() == '1') {
      ++pos_;
      expect_end();
      return PlanarTree();
    }
    PlanarTree t = parse_nonempty();
    expect_end();
    return t;
  }

 private:
  PlanarTree parse_nonempty() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return PlanarTree::leaf();
    }
    if (c == '1') throw ParseError("the empty tree '1' may only appear at top level", pos_);
    if (c != '(') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    ++pos_;
    std::vector<PlanarTree> children;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unterminated '('", pos_);
      if (text_[pos_] == ')') break;
      children.push_back(parse_nonempty());
    }
    if (children.empty()) throw ParseError("a node needs at least one child", pos_);
    ++pos_;
    return PlanarTree::node(std::move(children));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_literal(const PlanarTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'x';
    return;
  }
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ' ';
    first = false;
    render_literal(c, out);
  }
  out += ')';
}

void render_dot(const PlanarTree& t, std::size_t& next_id, std::string& out) {
  const std::size_t id = next_id++;
  out += "  n" + std::to_string(id) + " [label=\"\"];\n";
  std::uint32_t order = 0;
  for (const auto& c : t.children()) {
    const std::size_t child_id = next_id;
    render_dot(c, next_id, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) +
           " [order=" + std::to_string(++order) + "];\n";
  }
}

}  // namespace

PlanarTree parse_tree(std::string_view text) { return LiteralParser(text).parse(); }

PlanarTree tree_from_arity_word(std::string_view text) {
  std::vector<std::size_t> arities;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("expected an arity", i);
    arities.push_back(v);
    offsets.push_back(i);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (arities.size() == 1 && arities[0] == 1) return PlanarTree();
  if (arities.empty()) throw ParseError("empty arity word", 0);

  // Pending children per open vertex, innermost last.
  struct Frame {
    std::size_t arity;
    std::vector<PlanarTree> children;
  };
  std::vector<Frame> stack;
  PlanarTree result;
  for (std::size_t k = 0; k < arities.size(); ++k) {
    if (!result.empty()) throw ParseError("trailing arities after a complete tree", offsets[k]);
    stack.push_back({arities[k], {}});
    while (!stack.empty() && stack.back().children.size() == stack.back().arity) {
      PlanarTree done = PlanarTree::node(std::move(stack.back().children));
      stack.pop_back();
      if (stack.empty()) {
        result = std::move(done);
      } else {
        stack.back().children.push_back(std::move(done));
      }
    }
  }
  if (result.empty()) throw ParseError("incomplete arity word", text.size());
  return result;
}

std::string render_tree(const PlanarTree& t, TreeFormat format) {
  switch (format) {
    case TreeFormat::literal: {
      if (t.empty()) return "1";
      std::string out;
      render_literal(t, out);
      return out;
    }
    case TreeFormat::arity_word:
      return t.key();
    case TreeFormat::dot: {
      std::string out = "digraph T {\n  ordering=out;\n";
      if (!t.empty()) {
        std::size_t next_id = 0;
        render_dot(t, next_id, out);
      }
      out += "}\n";
      return out;
    }
  }
  return {};
}

// Grafting

PlanarTree graft(std::span<const PlanarTree> children) {
  if (children.empty()) throw DomainError("graft needs at least one tree");
  return PlanarTree::node(std::vector<PlanarTree>(children.begin(), children.end()));
}

PlanarTree graft(std::initializer_list<PlanarTree> children) {
  return graft(std::span<const PlanarTree>(children.begin(), children.size()));
}

namespace {

PlanarTree graft_over_impl(const PlanarTree& base, std::span<const PlanarTree>& scions) {
  if (base.is_leaf()) {
    PlanarTree out = scions.front();
    scions = scions.subspan(1);
    return out;
  }
  std::vector<PlanarTree> children;
  children.reserve(base.arity());
  for (const auto& c : base.children()) children.push_back(graft_over_impl(c, scions));
  return PlanarTree::node(std::move(children));
}

}  // namespace

PlanarTree graft_over(const PlanarTree& base, std::span<const PlanarTree> scions) {
  if (base.empty()) throw DomainError("cannot graft over the empty tree");
  if (scions.size() != base.degree()) {
    throw DomainError("graft_over needs " + std::to_string(base.degree()) + " scions, got " +
                      std::to_string(scions.size()));
  }
  for (const auto& s : scions) {
    if (s.empty()) throw DomainError("the empty tree cannot be grafted onto a leaf");
  }
  return graft_over_impl(base, scions);
}

PlanarTree tree_product(const PlanarTree& left, const PlanarTree& right) {
  if (left.empty()) return right;
  if (right.empty()) return left;
  return PlanarTree::node({left, right});
}

// Positions

namespace {

const PlanarTree* find_vertex(const PlanarTree& t, const Position& p) noexcept {
  if (t.empty()) return nullptr;
  const PlanarTree* cur = &t;
  for (auto idx : p.path()) {
    if (idx == 0 || idx > cur->arity()) return nullptr;
    cur = &cur->children()[idx - 1];
  }
  return cur;
}

const PlanarTree& vertex_at(const PlanarTree& t, const Position& p) {
  const PlanarTree* v = find_vertex(t, p);
  if (!v) throw DomainError("invalid position '" + p.to_string() + "'");
  return *v;
}

void collect_positions(const PlanarTree& t, Position& here, bool leaves_only,
                       std::vector<Position>& out) {
  if (!leaves_only || t.is_leaf()) out.push_back(here);
  std::uint32_t i = 0;
  for (const auto& c : t.children()) {
    here = here.child(++i);
    collect_positions(c, here, leaves_only, out);
    here = here.parent();
  }
}

}  // namespace

bool is_valid_position(const PlanarTree& t, const Position& p) noexcept {
  return find_vertex(t, p) != nullptr;
}

std::size_t arity(const PlanarTree& t, const Position& p) { return vertex_at(t, p).arity(); }

std::vector<Position> vertex_positions(const PlanarTree& t) {
  std::vector<Position> out;
  if (t.empty()) return out;
  Position here;
  collect_positions(t, here, false, out);
  return out;
}

std::vector<Position> leaf_positions(const PlanarTree& t) {
  std::vector<Position> out;
  if (t.empty()) return out;
  Position here;
  collect_positions(t, here, true, out);
  return out;
}

Position first_leaf(const PlanarTree& t) {
  if (t.empty()) throw DomainError("the empty tree has no leaves");
  std::vector<std::uint32_t> path;
  for (const PlanarTree* cur = &t; !cur->is_leaf(); cur = &cur->children()[0]) path.push_back(1);
  return Position(std::move(path));
}

bool is_right_sided(const PlanarTree& t) {
  if (t.empty()) return false;
  if (t.is_leaf()) return true;
  return t.arity() == 2 && t.children()[0].is_leaf();
}

PlanarTree right_factor(const PlanarTree& t) {
  if (!is_right_sided(t)) throw DomainError("tree " + render_tree(t) + " is not right-sided");
  if (t.is_leaf()) return PlanarTree();
  return t.children()[1];
}

PlanarTree closed_subtree_at(const PlanarTree& t, const Position& p) { return vertex_at(t, p); }

// Selections

SubtreeSelection::SubtreeSelection(PlanarTree host, std::set<Position> vertices)
    : host_(std::move(host)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a subtree selection needs at least one vertex");
  root_ = *vertices_.begin();
  for (const auto& p : vertices_) {
    if (!is_valid_position(host_, p)) {
      throw DomainError("position '" + p.to_string() + "' is not a vertex of " + render_tree(host_));
    }
    if (p == root_) continue;
    if (!root_.is_prefix_of(p) || !vertices_.contains(p.parent())) {
      throw DomainError("selected vertices are not connected below '" + root_.to_string() + "'");
    }
  }
}

SubtreeSelection SubtreeSelection::single(const PlanarTree& host, const Position& p) {
  return SubtreeSelection(host, {p});
}

SubtreeSelection SubtreeSelection::closure(const PlanarTree& host, const Position& p) {
  std::set<Position> vs;
  for (const auto& q : vertex_positions(vertex_at(host, p))) vs.insert(p.join(q));
  return SubtreeSelection(host, std::move(vs));
}

std::vector<Position> SubtreeSelection::leaves() const {
  std::vector<Position> out;
  for (const auto& p : vertices_) {
    const std::size_t ar = arity(host_, p);
    bool has_selected_child = false;
    for (std::uint32_t i = 1; i <= ar && !has_selected_child; ++i) {
      has_selected_child = vertices_.contains(p.child(i));
    }
    if (!has_selected_child) out.push_back(p);
  }
  return out;
}

std::vector<Position> SubtreeSelection::interior() const {
  std::vector<Position> out;
  const auto ls = leaves();
  std::set_difference(vertices_.begin(), vertices_.end(), ls.begin(), ls.end(),
                      std::back_inserter(out));
  return out;
}

bool SubtreeSelection::is_relatively_open() const {
  for (const auto& p : vertices_) {
    const std::size_t ar = arity(host_, p);
    std::size_t selected = 0;
    for (std::uint32_t i = 1; i <= ar; ++i) selected += vertices_.contains(p.child(i)) ? 1 : 0;
    if (selected != 0 && selected != ar) return false;
  }
  return true;
}

PlanarTree SubtreeSelection::shape() const {
  auto build = [this](auto&& self, const Position& p) -> PlanarTree {
    std::vector<PlanarTree> children;
    const std::size_t ar = arity(host_, p);
    for (std::uint32_t i = 1; i <= ar; ++i) {
      const Position c = p.child(i);
      if (vertices_.contains(c)) children.push_back(self(self, c));
    }
    return PlanarTree::node(std::move(children));
  };
  return build(build, root_);
}

std::vector<std::string> SubtreeSelection::position_strings() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& p : vertices_) out.push_back(p.to_string());
  return out;
}

Forest remove_interior(const PlanarTree& t, const SubtreeSelection& s) {
  if (s.host() != t) throw DomainError("selection belongs to a different host tree");
  if (!s.is_relatively_open()) throw DomainError("remove_interior needs a relatively open selection");
  Forest out;
  for (const auto& b : s.leaves()) out.push_back({b, closed_subtree_at(t, b)});
  return out;
}

bool is_open(const PlanarTree& t, const SubtreeSelection& s) {
  return s.host() == t && s.root().is_root() && s.is_relatively_open();
}

bool is_completely_right_sided(const PlanarTree& t, const SubtreeSelection& s) {
  if (!is_open(t, s)) return false;
  const auto ls = s.leaves();
  if (ls.size() <= 1) return false;
  return std::all_of(ls.begin(), ls.end(),
                     [&](const Position& b) { return is_right_sided(closed_subtree_at(t, b)); });
}

}  // namespace planar_lagrange
