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

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "planar_lagrange/errors.hpp"
#include "planar_lagrange/tree.hpp"

using namespace planar_lagrange;

namespace {

PlanarTree T(std::string_view s) { return parse_tree(s); }

SubtreeSelection sel(const PlanarTree& host, std::initializer_list<std::string_view> ps) {
  std::set<Position> vs;
  for (auto p : ps) vs.insert(parse_position(p));
  return SubtreeSelection(host, std::move(vs));
}

}  // namespace

TEST_CASE("parse and render literals") {
  const PlanarTree x = T("x");
  CHECK(x.is_leaf());
  CHECK(x.vertex_count() == 1);
  const PlanarTree x2 = T("(x x)");
  CHECK(x2.arity() == 2);
  CHECK(x2.child(1).is_leaf());
  CHECK(x2.child(2).is_leaf());
  const PlanarTree t = T("(x (x x))");
  CHECK(t == PlanarTree::node({x, x2}));
  CHECK(t.degree() == 3);
  CHECK(render_tree(t) == "(x (x x))");
  CHECK(render_tree(x2, TreeFormat::arity_word) == "2 0 0");
  CHECK(render_tree(PlanarTree{}) == "1");
  CHECK(T("1").empty());
  CHECK(T("  ( x   (x x) ) ") == t);
}

TEST_CASE("parse errors carry offsets") {
  for (auto bad : {"", "(", "(x", "()", "y", "(x 1)", "x x", "(x x))"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_tree(bad), ParseError);
  }
  try {
    parse_tree("(x y)");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("arity words") {
  CHECK(tree_from_arity_word("2 0 0") == T("(x x)"));
  CHECK(tree_from_arity_word("1").empty());
  CHECK(tree_from_arity_word("0") == T("x"));
  CHECK_THROWS_AS(tree_from_arity_word("2 0"), ParseError);
  CHECK_THROWS_AS(tree_from_arity_word("0 0"), ParseError);
  CHECK_THROWS_AS(tree_from_arity_word("a"), ParseError);
}

TEST_CASE("dot output keeps child order") {
  const std::string dot = render_tree(T("(x (x x))"), TreeFormat::dot);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("ordering=out") != std::string::npos);
  CHECK(dot.find("[order=1]") != std::string::npos);
  CHECK(dot.find("[order=2]") != std::string::npos);
}

TEST_CASE("graft and products") {
  const PlanarTree x = PlanarTree::leaf();
  const PlanarTree x2 = graft({x, x});
  CHECK(render_tree(x2) == "(x x)");
  const PlanarTree x3 = graft({x, x, x});
  CHECK(render_tree(graft({x, x2, x, x3})) == "(x (x x) x (x x x))");
  const PlanarTree unary = graft({x});
  CHECK(unary.arity() == 1);
  CHECK_FALSE(unary.is_reduced());
  CHECK(graft({x, x2, x, x3}).degree() == 7);
  CHECK(tree_product(x, x) == x2);
  CHECK(tree_product(PlanarTree{}, x2) == x2);
  CHECK(tree_product(x2, PlanarTree{}) == x2);
  CHECK(graft_over(x2, std::vector<PlanarTree>{x2, x}) == T("((x x) x)"));
}

TEST_CASE("degree, positions, first leaf") {
  CHECK(T("(x (x x))").degree() == 3);
  CHECK(PlanarTree{}.degree() == 0);
  CHECK(first_leaf(T("(x (x x))")) == Position{1});
  CHECK(first_leaf(T("((x x) x)")) == Position{1, 1});
  const auto leaves = leaf_positions(T("(x (x x))"));
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[2] == Position{2, 2});
  CHECK(arity(T("(x (x x))"), Position{2}) == 2);
  CHECK_THROWS_AS(arity(T("(x x)"), Position{3}), DomainError);
  CHECK(vertex_positions(T("(x (x x))")).size() == 5);
  CHECK(parse_position("2.1") == Position{2, 1});
  CHECK(parse_position("").is_root());
  CHECK(Position{2, 1}.to_string() == "2.1");
  CHECK_THROWS_AS(parse_position("2..1"), ParseError);
  CHECK_THROWS_AS(parse_position("0"), ParseError);
}

TEST_CASE("preorder is the position order") {
  const auto ps = vertex_positions(T("((x x) (x (x x)) x)"));
  CHECK(std::is_sorted(ps.begin(), ps.end()));
}

TEST_CASE("right-sided trees") {
  CHECK(is_right_sided(T("(x (x x x))")));
  CHECK(right_factor(T("(x (x x x))")) == T("(x x x)"));
  CHECK_FALSE(is_right_sided(T("((x x) x)")));
  CHECK(is_right_sided(T("x")));
  CHECK(right_factor(T("x")).empty());
  CHECK_FALSE(is_right_sided(T("(x x x)")));
  CHECK_THROWS_AS(right_factor(T("((x x) x)")), DomainError);
}

TEST_CASE("closed subtrees") {
  const PlanarTree t = T("(x (x x))");
  CHECK(closed_subtree_at(t, Position{2}) == T("(x x)"));
  CHECK(closed_subtree_at(t, Position::root()) == t);
  CHECK(closed_subtree_at(t, Position{2, 1}) == T("x"));
  CHECK_THROWS_AS(closed_subtree_at(t, Position{3}), DomainError);
}

TEST_CASE("selections validate connectivity") {
  const PlanarTree t = T("(x (x x))");
  CHECK_THROWS_AS(sel(t, {"", "2.1"}), DomainError);
  CHECK_THROWS_AS(sel(t, {"1", "2"}), DomainError);
  CHECK_THROWS_AS(sel(t, {"3"}), DomainError);
  const auto s = sel(t, {"2", "2.1", "2.2"});
  CHECK(s.root() == Position{2});
  CHECK(s.is_relatively_open());
  CHECK(s.shape() == T("(x x)"));
  CHECK_FALSE(sel(t, {"", "1"}).is_relatively_open());
}

TEST_CASE("remove interior") {
  const PlanarTree t = T("(x (x x))");
  const auto all = remove_interior(t, sel(t, {"", "1", "2", "2.1", "2.2"}));
  REQUIRE(all.size() == 3);
  for (const auto& c : all) CHECK(c.tree == T("x"));
  CHECK(all[1].root == Position{2, 1});
  const auto top = remove_interior(t, sel(t, {"", "1", "2"}));
  REQUIRE(top.size() == 2);
  CHECK(top[0] == ForestComponent{Position{1}, T("x")});
  CHECK(top[1] == ForestComponent{Position{2}, T("(x x)")});
  const auto root_only = remove_interior(t, SubtreeSelection::single(t, Position::root()));
  REQUIRE(root_only.size() == 1);
  CHECK(root_only[0].tree == t);
  CHECK_THROWS_AS(remove_interior(t, sel(t, {"", "1"})), DomainError);
}

TEST_CASE("completely right-sided selections") {
  const PlanarTree t = T("(x (x x))");
  CHECK(is_completely_right_sided(t, sel(t, {"", "1", "2"})));
  const PlanarTree u = T("(x (x x x))");
  CHECK_FALSE(is_completely_right_sided(u, sel(u, {"", "1", "2"})));
  CHECK_FALSE(is_completely_right_sided(t, SubtreeSelection::single(t, Position::root())));
  CHECK_FALSE(is_open(t, sel(t, {"2", "2.1", "2.2"})));
}

TEST_CASE("enumeration counts match the recurrence oracles") {
  const auto c = oracle::catalan(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(enumerate_pt(n).size() == c[n - 1]);
  }
  const auto s = oracle::super_catalan(7);
  for (std::size_t d = 1; d <= 7; ++d) {
    CAPTURE(d);
    CHECK(enumerate_prt(d).size() == static_cast<std::size_t>(s[d]));
  }
  const std::vector<std::size_t> pt = {1, 1, 2, 5, 14, 42};
  const std::vector<std::size_t> prt = {1, 1, 3, 11, 45, 197};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(c[n - 1] == pt[n - 1]);
    CHECK(static_cast<std::size_t>(s[n]) == prt[n - 1]);
  }
}

TEST_CASE("right-sided enumeration") {
  const std::vector<std::size_t> counts = {1, 1, 1, 3};
  for (std::size_t d = 1; d <= 4; ++d) CHECK(enumerate_right_sided(d).size() == counts[d - 1]);
  std::set<std::string> got;
  for (const auto& t : enumerate_right_sided(4)) got.insert(render_tree(t));
  CHECK(got == std::set<std::string>{"(x (x x x))", "(x ((x x) x))", "(x (x (x x)))"});
  // right-sided of degree d are x.T' with T' reduced of degree d-1
  for (std::size_t d = 2; d <= 7; ++d) {
    CHECK(enumerate_right_sided(d).size() == enumerate_prt(d - 1).size());
  }
}

TEST_CASE("enumerations are sorted, distinct and well-formed") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ts = enumerate_pt(n);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    for (const auto& t : ts) {
      CHECK(t.vertex_count() == n);
      CHECK(parse_tree(render_tree(t)) == t);
      CHECK(tree_from_arity_word(render_tree(t, TreeFormat::arity_word)) == t);
    }
  }
  for (std::size_t d = 1; d <= 6; ++d) {
    for (const auto& t : enumerate_prt(d)) {
      CHECK(t.is_reduced());
      CHECK(t.degree() == d);
    }
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_pt(0), DomainError);
  CHECK_THROWS_AS(enumerate_prt(0), DomainError);
  CHECK_THROWS_AS(enumerate_pt(11), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_prt(4, EnumerationLimit{3}), ResourceLimitError);
  CHECK(enumerate_prt(4, EnumerationLimit{4}).size() == 11);
}

TEST_CASE("open subtrees") {
  CHECK(enumerate_open_subtrees(T("(x x)")).size() == 2);
  // all-or-none: one choice per internal vertex reachable from the root
  CHECK(enumerate_open_subtrees(T("(x (x x))")).size() == 3);
  CHECK(enumerate_open_subtrees(T("((x x) (x x))")).size() == 5);
  for (const auto& t : enumerate_prt(5)) {
    for (const auto& s : enumerate_open_subtrees(t)) {
      CHECK(is_open(t, s));
      // degree bookkeeping of T - In(S)
      std::size_t deg = 0;
      for (const auto& c : remove_interior(t, s)) deg += c.tree.degree();
      CHECK(deg == t.degree());
      CHECK(remove_interior(t, s).size() == s.degree());
    }
  }
}

TEST_CASE("relatively open selections") {
  const PlanarTree t = T("(x (x x))");
  const auto all = enumerate_relatively_open(t);
  // 3 at the root, 2 at [2], one singleton at each of the 3 leaves
  CHECK(all.size() == 8);
  for (const auto& s : all) CHECK(s.is_relatively_open());
}

TEST_CASE("completely right-sided forests are right-sided") {
  for (std::size_t d = 2; d <= 6; ++d) {
    for (const auto& t : enumerate_right_sided(d)) {
      for (const auto& s : enumerate_open_subtrees(t)) {
        if (!is_completely_right_sided(t, s)) continue;
        for (const auto& c : remove_interior(t, s)) CHECK(is_right_sided(c.tree));
      }
    }
  }
}

TEST_CASE("height matches an independent recursion") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : enumerate_pt(n)) CHECK(t.height() == oracle::max_leaf_distance(t));
  }
}
