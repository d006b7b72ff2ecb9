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

#include <algorithm>
#include <map>

#include "planar_lagrange/errors.hpp"
#include "planar_lagrange/flags.hpp"

namespace planar_lagrange {

namespace {

bool is_host_leaf(const PlanarTree& host, const Position& p) { return arity(host, p) == 0; }

using PieceSet = std::vector<std::set<Position>>;

// Decompositions of the closure at `at` (right-sided, degree > 1), as sets of
// host positions.
std::vector<PieceSet> decompositions_below(const PlanarTree& host, const Position& at) {
  std::vector<PieceSet> out;
  const PlanarTree sub = closed_subtree_at(host, at);
  for (const auto& local : enumerate_open_subtrees(sub)) {
    if (local.size() == 1) continue;
    std::set<Position> piece;
    for (const auto& p : local.vertices()) piece.insert(at.join(p));

    // Partial results, extended leaf by leaf.
    std::vector<PieceSet> partial{{piece}};
    const auto leaves = local.leaves();
    bool viable = true;
    for (std::size_t i = 0; i < leaves.size() && viable; ++i) {
      const Position b = at.join(leaves[i]);
      if (is_host_leaf(host, b)) {
        if (i == 0) continue;
        for (auto& ps : partial) ps.push_back({b});
        continue;
      }
      if (!is_right_sided(closed_subtree_at(host, b))) {
        viable = false;
        break;
      }
      const auto below = decompositions_below(host, b);
      std::vector<PieceSet> next;
      for (const auto& ps : partial) {
        for (const auto& extra : below) {
          auto merged = ps;
          merged.insert(merged.end(), extra.begin(), extra.end());
          next.push_back(std::move(merged));
        }
      }
      partial = std::move(next);
    }
    if (viable) out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

Decomposition make_decomposition(const PlanarTree& host, const PieceSet& pieces) {
  Decomposition d{host, {}};
  for (const auto& p : pieces) d.pieces.emplace_back(host, p);
  std::sort(d.pieces.begin(), d.pieces.end());
  return d;
}

// Empty iff \`pieces\` satisfies every decomposition rule; otherwise the first
// violated rule.
std::string decomposition_problem(const PlanarTree& host, const std::vector<SubtreeSelection>& pieces) {
  if (pieces.empty()) return "no pieces";
  if (host.is_leaf()) {
    return pieces.size() == 1 && pieces[0].size() == 1 ? "" : "x has the single decomposition {{root}}";
  }

  // (a) shape of each piece
  for (const auto& u : pieces) {
    if (u.size() == 1) continue;
    if (!u.is_relatively_open() || !is_right_sided(u.shape())) return "piece is not right-sided";
  }

  // (b) covering
  std::set<Position> covered;
  for (const auto& u : pieces) covered.insert(u.vertices().begin(), u.vertices().end());
  if (covered.size() != host.vertex_count()) return "pieces do not cover the host";

  // (c) roots and overlaps
  std::set<Position> roots;
  std::size_t at_root = 0;
  for (const auto& u : pieces) {
    if (!roots.insert(u.root()).second) return "two pieces share a root";
    at_root += u.root().is_root() ? 1 : 0;
  }
  if (at_root != 1) return "exactly one piece must be rooted at the host root";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const auto& u = pieces[i];
      const auto& v = pieces[j];
      std::vector<Position> shared;
      std::set_intersection(u.vertices().begin(), u.vertices().end(), v.vertices().begin(),
                            v.vertices().end(), std::back_inserter(shared));
      if (shared.empty()) continue;
      if (shared.size() > 1) return "two pieces share more than one vertex";
      const Position& a = shared.front();
      auto is_leaf_of = [&](const SubtreeSelection& s) {
        const auto ls = s.leaves();
        return std::binary_search(ls.begin(), ls.end(), a);
      };
      const bool u_root = u.root() == a;
      const bool v_root = v.root() == a;
      const bool ok = (u_root && !v_root && is_leaf_of(v)) || (v_root && !u_root && is_leaf_of(u));
      if (!ok) return "a shared vertex must be the root of one piece and a leaf of the other";
    }
  }

  // (d), (e) and the set of mandated singletons (f)
  std::set<Position> mandated;
  for (const auto& u : pieces) {
    if (u.size() == 1) continue;
    const auto ls = u.leaves();
    if (!is_host_leaf(host, ls.front())) return "the first leaf of a piece must be a host leaf";
    for (std::size_t k = 0; k < ls.size(); ++k) {
      const Position& b = ls[k];
      if (is_host_leaf(host, b)) {
        if (k > 0) mandated.insert(b);
        continue;
      }
      const bool continued = std::any_of(pieces.begin(), pieces.end(), [&](const SubtreeSelection& v) {
        return v.size() > 1 && v.root() == b;
      });
      if (!continued) return "an inner leaf of a piece must be the root of another piece";
    }
  }
  std::set<Position> singletons;
  for (const auto& u : pieces) {
    if (u.size() == 1) singletons.insert(u.root());
  }
  if (singletons != mandated) return "singleton pieces must sit exactly at the non-first leaves of pieces";
  return {};
}

}  // namespace

bool is_decomposition(const PlanarTree& host, const std::vector<SubtreeSelection>& pieces) {
  if (!is_right_sided(host)) throw DomainError("decompositions need a right-sided host");
  for (const auto& u : pieces) {
    if (u.host() != host) throw DomainError("piece belongs to a different host");
  }
  return decomposition_problem(host, pieces).empty();
}

std::vector<Decomposition> enumerate_decompositions(const PlanarTree& t) {
  if (!is_right_sided(t)) throw DomainError("decompositions need a right-sided host: " + render_tree(t));
  std::vector<Decomposition> out;
  if (t.is_leaf()) {
    out.push_back(make_decomposition(t, {{Position::root()}}));
    return out;
  }
  for (const auto& ps : decompositions_below(t, Position::root())) out.push_back(make_decomposition(t, ps));
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) { return a.pieces < b.pieces; });
  return out;
}

Decomposition flag_to_decomposition(const Flag& flag) {
  validate_flag(flag);
  const auto& t = flag.host;
  if (t.is_leaf()) return make_decomposition(t, {{Position::root()}});

  PieceSet pieces{flag.stages.front().vertices()};
  for (std::size_t i = 1; i < flag.stages.size(); ++i) {
    const auto& prev = flag.stages[i - 1];
    const auto& cur = flag.stages[i];
    for (const auto& b : prev.leaves()) {
      if (is_host_leaf(t, b)) continue;
      std::set<Position> component;
      for (const auto& p : cur.vertices()) {
        if (b.is_prefix_of(p)) component.insert(p);
      }
      pieces.push_back(std::move(component));
    }
  }
  const std::size_t non_singletons = pieces.size();
  for (std::size_t k = 0; k < non_singletons; ++k) {
    const auto ls = SubtreeSelection(t, pieces[k]).leaves();
    for (std::size_t i = 1; i < ls.size(); ++i) {
      if (is_host_leaf(t, ls[i])) pieces.push_back({ls[i]});
    }
  }
  Decomposition d = make_decomposition(t, pieces);
  if (auto problem = decomposition_problem(t, d.pieces); !problem.empty()) {
    throw DomainError("flag produced an invalid decomposition: " + problem);
  }
  return d;
}

Flag decomposition_to_flag(const Decomposition& d) {
  const auto& t = d.host;
  if (!is_decomposition(t, d.pieces)) throw DomainError("not a right-sided decomposition");
  const SubtreeSelection full = SubtreeSelection::closure(t, Position::root());
  if (t.is_leaf()) return {t, {full}};

  std::map<Position, const SubtreeSelection*> by_root;
  for (const auto& u : d.pieces) {
    if (u.size() > 1) by_root.emplace(u.root(), &u);
  }
  Flag out{t, {*by_root.at(Position::root())}};
  while (out.stages.back() != full) {
    std::set<Position> next = out.stages.back().vertices();
    for (const auto& b : out.stages.back().leaves()) {
      if (is_host_leaf(t, b)) continue;
      const auto& piece = *by_root.at(b);
      next.insert(piece.vertices().begin(), piece.vertices().end());
    }
    out.stages.emplace_back(t, std::move(next));
  }
  validate_flag(out);
  return out;
}

}  // namespace planar_lagrange
