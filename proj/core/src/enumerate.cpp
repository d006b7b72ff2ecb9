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
#include "planar_lagrange/tree.hpp"

namespace planar_lagrange {

namespace {

void check_size(std::size_t size, EnumerationLimit limit, const char* what) {
  if (size == 0) throw DomainError(std::string(what) + " must be at least 1");
  if (size > limit.max_size) {
    throw ResourceLimitError(std::string(what) + " " + std::to_string(size) +
                             " exceeds the enumeration cap " + std::to_string(limit.max_size));
  }
}

// Appends every way of grafting one tree from each pool, in pool order.
void graft_all(const std::vector<const std::vector<PlanarTree>*>& pools,
               std::vector<PlanarTree>& chosen, std::vector<PlanarTree>& out) {
  if (chosen.size() == pools.size()) {
    out.push_back(PlanarTree::node(chosen));
    return;
  }
  for (const auto& t : *pools[chosen.size()]) {
    chosen.push_back(t);
    graft_all(pools, chosen, out);
    chosen.pop_back();
  }
}

// Calls visit(parts) for each ordered composition of `total` into parts >= 1,
// with at least `min_parts` parts.
template <typename Visit>
void for_each_composition(std::size_t total, std::size_t min_parts, std::vector<std::size_t>& parts,
                          Visit&& visit) {
  if (total == 0) {
    if (parts.size() >= min_parts) visit(parts);
    return;
  }
  for (std::size_t first = 1; first <= total; ++first) {
    parts.push_back(first);
    for_each_composition(total - first, min_parts, parts, visit);
    parts.pop_back();
  }
}

void sort_by_key(std::vector<PlanarTree>& trees) { std::sort(trees.begin(), trees.end()); }

class PtTable {
 public:
  const std::vector<PlanarTree>& by_vertices(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<PlanarTree> out;
    if (n == 1) {
      out.push_back(PlanarTree::leaf());
    } else {
      std::vector<std::size_t> parts;
      for_each_composition(n - 1, 1, parts, [&](const std::vector<std::size_t>& sizes) {
        std::vector<const std::vector<PlanarTree>*> pools;
        for (auto s : sizes) pools.push_back(&by_vertices(s));
        std::vector<PlanarTree> chosen;
        graft_all(pools, chosen, out);
      });
    }
    sort_by_key(out);
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<PlanarTree>> memo_;
};

class PrtTable {
 public:
  const std::vector<PlanarTree>& by_degree(std::size_t d) {
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    std::vector<PlanarTree> out;
    if (d == 1) {
      out.push_back(PlanarTree::leaf());
    } else {
      std::vector<std::size_t> parts;
      for_each_composition(d, 2, parts, [&](const std::vector<std::size_t>& sizes) {
        std::vector<const std::vector<PlanarTree>*> pools;
        for (auto s : sizes) pools.push_back(&by_degree(s));
        std::vector<PlanarTree> chosen;
        graft_all(pools, chosen, out);
      });
    }
    sort_by_key(out);
    return memo_.emplace(d, std::move(out)).first->second;
  }

 private:
  std::map<std::size_t, std::vector<PlanarTree>> memo_;
};

// Open subtrees of the closed subtree at `at`, expressed as host positions.
std::vector<std::vector<Position>> open_below(const PlanarTree& t, const Position& at) {
  std::vector<std::vector<Position>> out;
  out.push_back({at});
  if (t.is_leaf()) return out;
  // Cartesian product over the children's choices.
  std::vector<std::vector<Position>> partial{{at}};
  std::uint32_t i = 0;
  for (const auto& c : t.children()) {
    auto options = open_below(c, at.child(++i));
    std::vector<std::vector<Position>> next;
    next.reserve(partial.size() * options.size());
    for (const auto& base : partial) {
      for (const auto& opt : options) {
        auto merged = base;
        merged.insert(merged.end(), opt.begin(), opt.end());
        next.push_back(std::move(merged));
      }
    }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
  return out;
}

std::vector<SubtreeSelection> to_selections(const PlanarTree& host,
                                            std::vector<std::vector<Position>> sets) {
  std::vector<SubtreeSelection> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(host, std::set<Position>(s.begin(), s.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PlanarTree> enumerate_pt(std::size_t vertices, EnumerationLimit limit) {
  check_size(vertices, limit, "vertex count");
  return PtTable().by_vertices(vertices);
}

std::vector<PlanarTree> enumerate_prt(std::size_t degree, EnumerationLimit limit) {
  check_size(degree, limit, "degree");
  return PrtTable().by_degree(degree);
}

std::vector<PlanarTree> enumerate_right_sided(std::size_t degree, EnumerationLimit limit) {
  check_size(degree, limit, "degree");
  if (degree == 1) return {PlanarTree::leaf()};
  std::vector<PlanarTree> out;
  PrtTable table;
  for (const auto& rest : table.by_degree(degree - 1)) {
    out.push_back(tree_product(PlanarTree::leaf(), rest));
  }
  sort_by_key(out);
  return out;
}

std::vector<SubtreeSelection> enumerate_open_subtrees(const PlanarTree& t) {
  if (t.empty()) return {};
  return to_selections(t, open_below(t, Position::root()));
}

std::vector<SubtreeSelection> enumerate_relatively_open(const PlanarTree& t) {
  std::vector<std::vector<Position>> all;
  for (const auto& p : vertex_positions(t)) {
    auto below = open_below(closed_subtree_at(t, p), p);
    all.insert(all.end(), below.begin(), below.end());
  }
  return to_selections(t, std::move(all));
}

}  // namespace planar_lagrange
