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

// Test-only reference implementations. None of these call the library's
// enumeration, Lukasiewicz, flag or series routines; they only use the tree
// value type and Rational.

#ifndef PLANAR_LAGRANGE_TESTS_ORACLES_HPP_
#define PLANAR_LAGRANGE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "planar_lagrange/rational.hpp"
#include "planar_lagrange/tree.hpp"

namespace oracle {

using planar_lagrange::PlanarTree;
using planar_lagrange::Rational;
using Path = std::vector<std::uint32_t>;

/// C_0..C_n by the convolution recurrence.
inline std::vector<std::uint64_t> catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c;
}

/// s_1..s_n (index 0 unused) by (k+1)s_{k+1} = 3(2k-1)s_k - (k-2)s_{k-1}.
inline std::vector<std::int64_t> super_catalan(std::size_t n) {
  std::vector<std::int64_t> s(std::max<std::size_t>(n + 1, 3), 0);
  s[1] = 1;
  s[2] = 1;
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    s[k + 1] = (3 * (2 * kk - 1) * s[k] - (kk - 2) * s[k - 1]) / (kk + 1);
  }
  s.resize(n + 1);
  return s;
}

/// Longest root-to-leaf edge count, by direct recursion.
inline std::size_t max_leaf_distance(const PlanarTree& t) {
  std::size_t best = 0;
  for (const auto& c : t.children()) best = std::max(best, 1 + max_leaf_distance(c));
  return best;
}

/// Preorder arity sequence, by direct recursion.
inline void preorder_arities(const PlanarTree& t, std::vector<std::size_t>& out) {
  out.push_back(t.arity());
  for (const auto& c : t.children()) preorder_arities(c, out);
}

/// True iff the word of letter degrees is a Lukasiewicz word: total weight
/// -1 and every proper prefix has weight >= 0.
inline bool luk_degrees(const std::vector<std::size_t>& degrees) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    sum += static_cast<std::int64_t>(degrees[i]) - 1;
    if (sum < 0) return i + 1 == degrees.size();
  }
  return false;
}

// Decompositions by brute force over vertex subsets.

struct HostInfo {
  std::vector<Path> vertices;
  std::map<Path, std::size_t> arity;
};

inline void collect(const PlanarTree& t, Path& at, HostInfo& info) {
  info.vertices.push_back(at);
  info.arity[at] = t.arity();
  for (std::uint32_t i = 1; i <= t.arity(); ++i) {
    at.push_back(i);
    collect(t.child(i), at, info);
    at.pop_back();
  }
}

inline HostInfo host_info(const PlanarTree& t) {
  HostInfo info;
  Path at;
  collect(t, at, info);
  return info;
}

inline Path parent_of(Path p) {
  p.pop_back();
  return p;
}

inline Path child_of(Path p, std::uint32_t i) {
  p.push_back(i);
  return p;
}

struct Piece {
  std::set<Path> vertices;
  Path root;
  std::vector<Path> leaves;  // preorder
  bool singleton() const { return vertices.size() == 1; }
};

inline Piece make_piece(const HostInfo& h, std::set<Path> vs) {
  Piece p;
  p.vertices = std::move(vs);
  p.root = *p.vertices.begin();
  for (const auto& v : p.vertices) {
    bool has_child = false;
    for (std::uint32_t i = 1; i <= h.arity.at(v); ++i) has_child = has_child || p.vertices.contains(child_of(v, i));
    if (!has_child) p.leaves.push_back(v);
  }
  return p;
}

/// Connected, all-or-none below every member, and either one vertex or of
/// shape x.T' (root arity 2 with a leaf first child).
inline bool admissible_piece(const HostInfo& h, const std::set<Path>& vs) {
  const Path& root = *vs.begin();
  for (const auto& v : vs) {
    if (v != root && (v.size() <= root.size() || !std::equal(root.begin(), root.end(), v.begin()) ||
                      !vs.contains(parent_of(v)))) {
      return false;
    }
    const std::size_t ar = h.arity.at(v);
    std::size_t in = 0;
    for (std::uint32_t i = 1; i <= ar; ++i) in += vs.contains(child_of(v, i)) ? 1 : 0;
    if (in != 0 && in != ar) return false;
  }
  if (vs.size() == 1) return true;
  if (h.arity.at(root) != 2) return false;
  const Path first = child_of(root, 1);
  for (std::uint32_t i = 1; i <= h.arity.at(first); ++i) {
    if (vs.contains(child_of(first, i))) return false;
  }
  return true;
}

inline bool host_leaf(const HostInfo& h, const Path& p) { return h.arity.at(p) == 0; }

/// Rules (b)-(f) checked literally on a family with pairwise distinct roots.
inline bool satisfies_rules(const HostInfo& h, const std::vector<Piece>& q) {
  if (h.vertices.size() == 1) return q.size() == 1;
  std::set<Path> covered;
  std::size_t at_root = 0;
  for (const auto& p : q) {
    covered.insert(p.vertices.begin(), p.vertices.end());
    at_root += p.root.empty() ? 1 : 0;
  }
  if (covered.size() != h.vertices.size() || at_root != 1) return false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      std::vector<Path> shared;
      std::set_intersection(q[i].vertices.begin(), q[i].vertices.end(), q[j].vertices.begin(),
                            q[j].vertices.end(), std::back_inserter(shared));
      if (shared.size() > 1) return false;
      if (shared.size() == 1) {
        const Path& v = shared.front();
        auto is_leaf_of = [&](const Piece& p) {
          return std::find(p.leaves.begin(), p.leaves.end(), v) != p.leaves.end();
        };
        const bool ij = q[i].root == v && is_leaf_of(q[j]);
        const bool ji = q[j].root == v && is_leaf_of(q[i]);
        if (ij == ji) return false;
      }
    }
  }
  std::set<Path> big_roots;
  std::set<Path> wanted_singletons;
  for (const auto& p : q) {
    if (p.singleton()) continue;
    big_roots.insert(p.root);
    if (!host_leaf(h, p.leaves.front())) return false;
    for (std::size_t k = 1; k < p.leaves.size(); ++k) {
      if (host_leaf(h, p.leaves[k])) wanted_singletons.insert(p.leaves[k]);
    }
  }
  std::set<Path> singletons;
  for (const auto& p : q) {
    if (p.singleton()) {
      singletons.insert(p.root);
      continue;
    }
    for (const auto& l : p.leaves) {
      if (!host_leaf(h, l) && !big_roots.contains(l)) return false;
    }
  }
  return singletons == wanted_singletons;
}

/// Every decomposition of a right-sided host, as sorted lists of sorted
/// vertex sets (paths). Exponential; meant for hosts of degree <= 5.
inline std::set<std::vector<std::set<Path>>> decompositions(const PlanarTree& t) {
  const HostInfo h = host_info(t);
  const std::size_t n = h.vertices.size();
  std::map<Path, std::vector<Piece>> by_root;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<Path> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) vs.insert(h.vertices[i]);
    }
    if (admissible_piece(h, vs)) {
      Piece p = make_piece(h, std::move(vs));
      by_root[p.root].push_back(std::move(p));
    }
  }
  std::set<std::vector<std::set<Path>>> found;
  std::vector<Piece> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == n) {
      if (satisfies_rules(h, chosen)) {
        std::vector<std::set<Path>> sets;
        for (const auto& p : chosen) sets.push_back(p.vertices);
        std::sort(sets.begin(), sets.end());
        found.insert(std::move(sets));
      }
      return;
    }
    pick(i + 1);
    for (const auto& p : by_root[h.vertices[i]]) {
      chosen.push_back(p);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return found;
}

// Naive tree series: key -> (tree, value), truncated at n.

struct Series {
  std::size_t n = 0;
  std::map<std::string, std::pair<PlanarTree, Rational>> terms;

  Rational at(const PlanarTree& t) const {
    auto it = terms.find(t.key());
    return it == terms.end() ? Rational(0) : it->second.second;
  }
  void add(const PlanarTree& t, const Rational& v) {
    if (t.degree() > n || v == 0) return;
    auto [it, fresh] = terms.try_emplace(t.key(), t, v);
    if (!fresh) {
      it->second.second += v;
      if (it->second.second == 0) terms.erase(it);
    }
  }
};

/// f(g) by summing over assignments of g-monomials to the leaves of each
/// f-monomial.
inline Series substitute(const Series& f, const Series& g) {
  Series out{f.n, {}};
  std::vector<std::pair<PlanarTree, Rational>> gs;
  for (const auto& [k, tv] : g.terms) gs.push_back(tv);
  for (const auto& [k, tv] : f.terms) {
    const auto& [tree, coeff] = tv;
    if (tree.empty()) {
      out.add(tree, coeff);
      continue;
    }
    const std::size_t leaves = tree.degree();
    std::vector<PlanarTree> scions(leaves);
    std::function<void(std::size_t, std::size_t, Rational)> assign = [&](std::size_t i, std::size_t deg,
                                                                          Rational c) {
      if (deg > f.n) return;
      if (i == leaves) {
        out.add(planar_lagrange::graft_over(tree, scions), c);
        return;
      }
      for (const auto& [s, v] : gs) {
        scions[i] = s;
        assign(i + 1, deg + s.degree(), c * v);
      }
    };
    assign(0, 0, coeff);
  }
  return out;
}

/// x.h by binary grafting on the right of a leaf.
inline Series times_x(const Series& h) {
  Series out{h.n, {}};
  for (const auto& [k, tv] : h.terms) {
    const PlanarTree x = PlanarTree::leaf();
    out.add(tv.first.empty() ? x : PlanarTree::node({x, tv.first}), tv.second);
  }
  return out;
}

/// g with g = x.f(g), by iterating from g = 0 until nothing changes.
inline Series fixed_point(const Series& f) {
  Series g{f.n, {}};
  for (std::size_t i = 0; i <= f.n + 1; ++i) {
    Series next = times_x(substitute(f, g));
    if (next.terms == g.terms) break;
    g = std::move(next);
  }
  return g;
}

/// One-variable G = t.F(G) mod t^(n+1) by fixed-point iteration on
/// coefficient vectors.
inline std::vector<Rational> classical_fixed_point(const std::vector<Rational>& F, std::size_t n) {
  auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  std::vector<Rational> G(n + 1, 0);
  for (std::size_t it = 0; it <= n; ++it) {
    // F(G) by Horner.
    std::vector<Rational> acc(n + 1, 0);
    for (std::size_t k = std::min(F.size(), n + 1); k-- > 0;) {
      acc = mul(acc, G);
      acc[0] += F[k];
    }
    std::vector<Rational> next(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) next[i + 1] = acc[i];
    G = std::move(next);
  }
  return G;
}

}  // namespace oracle

#endif  // PLANAR_LAGRANGE_TESTS_ORACLES_HPP_
