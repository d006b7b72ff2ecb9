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

#include <json.hpp>
#include <set>

#include "oracles.hpp"
#include "planar_lagrange/errors.hpp"
#include "planar_lagrange/flags.hpp"

using namespace planar_lagrange;

namespace {

PlanarTree T(std::string_view s) { return parse_tree(s); }

SubtreeSelection sel(const PlanarTree& host, std::initializer_list<std::string_view> ps) {
  std::set<Position> vs;
  for (auto p : ps) vs.insert(parse_position(p));
  return SubtreeSelection(host, std::move(vs));
}

SubtreeSelection full(const PlanarTree& host) {
  const auto ps = vertex_positions(host);
  return SubtreeSelection(host, std::set<Position>(ps.begin(), ps.end()));
}

std::vector<std::set<oracle::Path>> as_paths(const Decomposition& d) {
  std::vector<std::set<oracle::Path>> out;
  for (const auto& piece : d.pieces) {
    std::set<oracle::Path> vs;
    for (const auto& p : piece.vertices()) vs.insert(p.path());
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::set<std::vector<std::string>>> piece_strings(const std::vector<Decomposition>& ds) {
  std::set<std::set<std::vector<std::string>>> out;
  for (const auto& d : ds) {
    std::set<std::vector<std::string>> q;
    for (const auto& p : d.pieces) q.insert(p.position_strings());
    out.insert(std::move(q));
  }
  return out;
}

}  // namespace

TEST_CASE("strict containment") {
  const PlanarTree t = T("(x (x x))");
  CHECK(is_strictly_contained(t, full(t), full(t)));
  CHECK(is_strictly_contained(t, sel(t, {"", "1", "2"}), full(t)));
  const PlanarTree u = T("(x (x (x x)))");
  const auto s = sel(u, {"", "1", "2"});
  CHECK(is_strictly_contained(u, s, sel(u, {"", "1", "2", "2.1", "2.2"})));
  CHECK_FALSE(is_strictly_contained(u, s, s));
}

TEST_CASE("flags on small hosts") {
  const auto f1 = enumerate_flags(T("(x x)"));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].stages == std::vector<SubtreeSelection>{full(T("(x x)"))});

  const PlanarTree t = T("(x (x x))");
  const auto f2 = enumerate_flags(t);
  REQUIRE(f2.size() == 2);
  std::set<std::vector<SubtreeSelection>> got;
  for (const auto& f : f2) got.insert(f.stages);
  CHECK(got == std::set<std::vector<SubtreeSelection>>{{full(t)}, {sel(t, {"", "1", "2"}), full(t)}});

  CHECK(enumerate_flags(T("(x (x x x))")).size() == 1);
  const auto fx = enumerate_flags(T("x"));
  REQUIRE(fx.size() == 1);
  CHECK(encode_flag(fx[0]) == parse_tree_word("1"));
  CHECK_THROWS_AS(enumerate_flags(T("((x x) x)")), DomainError);
}

TEST_CASE("flag words") {
  const PlanarTree x2 = T("(x x)");
  CHECK(render_tree_word(encode_flag(Flag{x2, {full(x2)}})) == "x; 1");
  const PlanarTree t = T("(x (x x))");
  CHECK(render_tree_word(encode_flag(Flag{t, {full(t)}})) == "(x x); 1; 1");
  CHECK(render_tree_word(encode_flag(Flag{t, {sel(t, {"", "1", "2"}), full(t)}})) == "x; x; 1");
  CHECK(decode_flag(parse_tree_word("x; x; 1")) == Flag{t, {sel(t, {"", "1", "2"}), full(t)}});
  CHECK_THROWS_AS(decode_flag(parse_tree_word("x; 1; 1")), DomainError);
  CHECK_THROWS_AS(validate_flag(Flag{t, {full(t), sel(t, {"", "1", "2"})}}), DomainError);
  CHECK_FALSE(is_valid_flag(Flag{t, {sel(t, {"", "1", "2"})}}));
}

TEST_CASE("decompositions on small hosts") {
  const PlanarTree x2 = T("(x x)");
  const auto d1 = enumerate_decompositions(x2);
  REQUIRE(d1.size() == 1);
  CHECK(is_decomposition(x2, {full(x2), sel(x2, {"2"})}));
  CHECK(piece_strings(d1) == std::set<std::set<std::vector<std::string>>>{{{"", "1", "2"}, {"2"}}});

  const PlanarTree t = T("(x (x x))");
  const auto d2 = enumerate_decompositions(t);
  CHECK(d2.size() == 2);
  CHECK(piece_strings(d2) == std::set<std::set<std::vector<std::string>>>{
                                 {{"", "1", "2", "2.1", "2.2"}, {"2.1"}, {"2.2"}},
                                 {{"", "1", "2"}, {"2", "2.1", "2.2"}, {"2.2"}}});

  CHECK(enumerate_decompositions(T("(x (x x x))")).size() == 1);
  CHECK(enumerate_decompositions(T("(x (x (x x)))")).size() == 4);
  CHECK(enumerate_decompositions(T("x")).size() == 1);

  // first leaf [2,1] of the piece rooted at [2] is not a host leaf
  const PlanarTree u = T("(x ((x x) x))");
  CHECK_FALSE(is_decomposition(u, {sel(u, {"", "1", "2"}), sel(u, {"2", "2.1", "2.2"}),
                                   sel(u, {"2.1", "2.1.1", "2.1.2"}), sel(u, {"2.2"}),
                                   sel(u, {"2.1.2"})}));
}

TEST_CASE("flag and decomposition partners") {
  const PlanarTree t = T("(x (x x))");
  const Decomposition single_stage = flag_to_decomposition(Flag{t, {full(t)}});
  CHECK(piece_strings({single_stage}) ==
        std::set<std::set<std::vector<std::string>>>{{{"", "1", "2", "2.1", "2.2"}, {"2.1"}, {"2.2"}}});
  const Decomposition two_stage = flag_to_decomposition(Flag{t, {sel(t, {"", "1", "2"}), full(t)}});
  CHECK(piece_strings({two_stage}) ==
        std::set<std::set<std::vector<std::string>>>{{{"", "1", "2"}, {"2", "2.1", "2.2"}, {"2.2"}}});
}

TEST_CASE("decompositions agree with brute force") {
  for (std::size_t d = 1; d <= 5; ++d) {
    for (const auto& t : enumerate_right_sided(d)) {
      CAPTURE(render_tree(t));
      std::set<std::vector<std::set<oracle::Path>>> got;
      for (const auto& q : enumerate_decompositions(t)) {
        CHECK(is_decomposition(t, q.pieces));
        got.insert(as_paths(q));
      }
      CHECK(got == oracle::decompositions(t));
    }
  }
}

TEST_CASE("bijections up to degree 6") {
  for (std::size_t d = 1; d <= 6; ++d) {
    for (const auto& t : enumerate_right_sided(d)) {
      CAPTURE(render_tree(t));
      const auto flags = enumerate_flags(t);
      const auto decomps = enumerate_decompositions(t);
      CHECK(flags.size() == decomps.size());
      std::set<std::string> words;
      for (const auto& f : flags) {
        CHECK(is_valid_flag(f));
        const auto w = encode_flag(f);
        CHECK(is_luk(w));
        CHECK(w.size() == t.degree());
        CHECK(decode_flag(w) == f);
        words.insert(render_tree_word(w));
        const Decomposition q = flag_to_decomposition(f);
        CHECK(is_decomposition(t, q.pieces));
        CHECK(decomposition_to_flag(q) == f);
      }
      CHECK(words.size() == flags.size());
      for (const auto& q : decomps) CHECK(flag_to_decomposition(decomposition_to_flag(q)) == q);
    }
  }
}

TEST_CASE("json round trips") {
  const PlanarTree t = T("(x (x x))");
  const Flag f{t, {sel(t, {"", "1", "2"}), full(t)}};
  const auto j = nlohmann::json::parse(flag_to_json(f));
  CHECK(j["host"] == "(x (x x))");
  CHECK(j["stages"][0] == nlohmann::json::array({"", "1", "2"}));
  CHECK(flag_from_json(flag_to_json(f)) == f);
  const Decomposition q = flag_to_decomposition(f);
  CHECK(decomposition_from_json(decomposition_to_json(q)) == q);
  CHECK_THROWS_AS(flag_from_json(R"J({"host": "(x x)", "stages": [["", "1", "2"]], "x": 1})J"), ParseError);
  CHECK_THROWS_AS(flag_from_json(R"J({"host": "(x x)"})J"), ParseError);
  CHECK_THROWS_AS(flag_from_json("{"), ParseError);
  CHECK_THROWS_AS(flag_from_json(R"J({"host": "(x x)", "stages": [["", "1"]]})J"), DomainError);
}
