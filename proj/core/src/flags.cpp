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

#include "planar_lagrange/flags.hpp"

#include <algorithm>
#include <json.hpp>

#include "planar_lagrange/errors.hpp"

namespace planar_lagrange {

namespace {

bool is_subset(const SubtreeSelection& a, const SubtreeSelection& b) {
  return std::includes(b.vertices().begin(), b.vertices().end(), a.vertices().begin(),
                       a.vertices().end());
}

bool is_host_leaf(const PlanarTree& host, const Position& p) { return arity(host, p) == 0; }

SubtreeSelection full_selection(const PlanarTree& host) {
  return SubtreeSelection::closure(host, Position::root());
}

// S_j restricted to the closure at `at`, re-rooted there.
SubtreeSelection restrict_to(const SubtreeSelection& s, const Position& at, const PlanarTree& sub) {
  std::set<Position> vs;
  const std::size_t skip = at.depth();
  for (const auto& p : s.vertices()) {
    if (!at.is_prefix_of(p)) continue;
    vs.insert(Position(std::vector<std::uint32_t>(p.path().begin() + skip, p.path().end())));
  }
  return SubtreeSelection(sub, std::move(vs));
}

std::string flag_problem(const Flag& flag) {
  const auto& t = flag.host;
  if (!is_right_sided(t)) return "host " + render_tree(t) + " is not right-sided";
  if (flag.stages.empty()) return "a flag needs at least one stage";
  for (const auto& s : flag.stages) {
    if (s.host() != t) return "stage belongs to a different host";
  }
  if (flag.stages.back() != full_selection(t)) return "the last stage must be the whole host";
  for (std::size_t i = 0; i + 1 < flag.stages.size(); ++i) {
    const auto& s = flag.stages[i];
    const auto& next = flag.stages[i + 1];
    if (!is_completely_right_sided(t, s)) {
      return "stage " + std::to_string(i + 1) + " is not completely right-sided";
    }
    if (!is_subset(s, next) || s.size() == next.size()) {
      return "stage " + std::to_string(i + 1) + " is not a proper subset of the next stage";
    }
    if (!is_strictly_contained(t, s, next)) {
      return "stage " + std::to_string(i + 1) + " is not strictly contained in the next stage";
    }
  }
  return {};
}

void extend_chains(const PlanarTree& t, const std::vector<SubtreeSelection>& candidates,
                   std::vector<SubtreeSelection>& chain, std::vector<Flag>& out) {
  const SubtreeSelection full = full_selection(t);
  // Close the chain with the host itself.
  chain.push_back(full);
  out.push_back({t, chain});
  chain.pop_back();
  for (const auto& c : candidates) {
    if (!chain.empty()) {
      const auto& prev = chain.back();
      if (!is_subset(prev, c) || prev.size() == c.size() || !is_strictly_contained(t, prev, c)) {
        continue;
      }
    }
    chain.push_back(c);
    extend_chains(t, candidates, chain, out);
    chain.pop_back();
  }
}

}  // namespace

bool is_strictly_contained(const PlanarTree& host, const SubtreeSelection& inner,
                           const SubtreeSelection& outer) {
  if (inner.host() != host || outer.host() != host) {
    throw DomainError("selections belong to a different host");
  }
  if (!is_subset(inner, outer)) throw DomainError("inner selection is not contained in the outer one");
  const auto outer_leaves = outer.leaves();
  for (const auto& b : inner.leaves()) {
    const bool shared = std::binary_search(outer_leaves.begin(), outer_leaves.end(), b);
    if (shared && !is_host_leaf(host, b)) return false;
  }
  return true;
}

bool is_valid_flag(const Flag& flag) { return flag_problem(flag).empty(); }

void validate_flag(const Flag& flag) {
  if (auto problem = flag_problem(flag); !problem.empty()) throw DomainError("invalid flag: " + problem);
}

std::vector<Flag> enumerate_flags(const PlanarTree& t) {
  if (!is_right_sided(t)) throw DomainError("flags need a right-sided host: " + render_tree(t));
  if (t.is_leaf()) return {Flag{t, {full_selection(t)}}};
  std::vector<SubtreeSelection> candidates;
  const SubtreeSelection full = full_selection(t);
  for (auto& s : enumerate_open_subtrees(t)) {
    if (s != full && is_completely_right_sided(t, s)) candidates.push_back(std::move(s));
  }
  std::vector<Flag> out;
  std::vector<SubtreeSelection> chain;
  extend_chains(t, candidates, chain, out);
  std::sort(out.begin(), out.end(), [](const Flag& a, const Flag& b) {
    if (a.stages.size() != b.stages.size()) return a.stages.size() < b.stages.size();
    return a.stages < b.stages;
  });
  return out;
}

// The word of a flag: the right factor of S_1, followed by the words of the
// flag restricted to each closure below a non-first leaf of S_1.
GradedWord encode_flag(const Flag& flag) {
  validate_flag(flag);
  const auto& t = flag.host;
  if (t.is_leaf()) return {tree_letter(PlanarTree())};

  const auto& first = flag.stages.front();
  GradedWord out{tree_letter(right_factor(first.shape()))};
  const auto leaves = first.leaves();
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    const Position& b = leaves[i];
    const PlanarTree sub = closed_subtree_at(t, b);
    Flag restricted{sub, {}};
    for (std::size_t j = 1; j < flag.stages.size(); ++j) {
      auto r = restrict_to(flag.stages[j], b, sub);
      if (restricted.stages.empty() || restricted.stages.back() != r) {
        restricted.stages.push_back(std::move(r));
      }
    }
    if (restricted.stages.empty()) restricted.stages.push_back(full_selection(sub));
    const GradedWord part = encode_flag(restricted);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Flag decode_flag(const GradedWord& w) {
  const auto [head, parts] = head_decompose(w);
  const PlanarTree top = letter_tree(head);
  if (top.empty()) {
    const PlanarTree x = PlanarTree::leaf();
    return {x, {full_selection(x)}};
  }

  std::vector<Flag> sub_flags;
  std::vector<PlanarTree> scions;
  for (const auto& p : parts) {
    sub_flags.push_back(decode_flag(p));
    scions.push_back(sub_flags.back().host);
  }
  if (scions.size() != top.degree()) throw DomainError("letter degree does not match its parts");

  const PlanarTree host = tree_product(PlanarTree::leaf(), graft_over(top, scions));

  // Stage 1 is x.top; the leaves of top sit below position 2.
  std::set<Position> first{Position::root(), Position{1}};
  for (const auto& p : vertex_positions(top)) first.insert(Position{2}.join(p));
  std::vector<Position> anchors;
  for (const auto& p : leaf_positions(top)) anchors.push_back(Position{2}.join(p));

  std::size_t length = 1;
  for (const auto& f : sub_flags) {
    if (!f.host.is_leaf()) length = std::max(length, 1 + f.stages.size());
  }

  Flag out{host, {SubtreeSelection(host, first)}};
  for (std::size_t k = 1; k < length; ++k) {
    std::set<Position> vs = first;
    for (std::size_t i = 0; i < sub_flags.size(); ++i) {
      const auto& f = sub_flags[i];
      const auto& stage = f.host.is_leaf() ? f.stages.back() : f.stages[std::min(k - 1, f.stages.size() - 1)];
      for (const auto& p : stage.vertices()) vs.insert(anchors[i].join(p));
    }
    out.stages.emplace_back(host, std::move(vs));
  }
  validate_flag(out);
  return out;
}

namespace {

nlohmann::ordered_json selections_json(const std::vector<SubtreeSelection>& sels) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : sels) arr.push_back(s.position_strings());
  return arr;
}

std::vector<SubtreeSelection> selections_from_json(const PlanarTree& host, const nlohmann::json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of position lists", 0);
  std::vector<SubtreeSelection> out;
  for (const auto& item : arr) {
    if (!item.is_array()) throw ParseError("expected a position list", 0);
    std::set<Position> vs;
    for (const auto& p : item) {
      if (!p.is_string()) throw ParseError("positions must be strings", 0);
      vs.insert(parse_position(p.get<std::string>()));
    }
    out.emplace_back(host, std::move(vs));
  }
  return out;
}

nlohmann::json parse_object(std::string_view text, const char* list_key) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("host") || !j.contains(list_key) || j.size() != 2 ||
      !j["host"].is_string()) {
    throw ParseError(std::string("expected an object with exactly 'host' and '") + list_key + "'", 0);
  }
  return j;
}

}  // namespace

std::string flag_to_json(const Flag& flag) {
  nlohmann::ordered_json j;
  j["host"] = render_tree(flag.host);
  j["stages"] = selections_json(flag.stages);
  return j.dump();
}

Flag flag_from_json(std::string_view text) {
  const auto j = parse_object(text, "stages");
  const PlanarTree host = parse_tree(j["host"].get<std::string>());
  Flag out{host, selections_from_json(host, j["stages"])};
  validate_flag(out);
  return out;
}

std::string decomposition_to_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["host"] = render_tree(d.host);
  j["pieces"] = selections_json(d.pieces);
  return j.dump();
}

Decomposition decomposition_from_json(std::string_view text) {
  const auto j = parse_object(text, "pieces");
  const PlanarTree host = parse_tree(j["host"].get<std::string>());
  Decomposition out{host, selections_from_json(host, j["pieces"])};
  std::sort(out.pieces.begin(), out.pieces.end());
  if (!is_decomposition(host, out.pieces)) throw DomainError("not a right-sided decomposition");
  return out;
}

}  // namespace planar_lagrange
