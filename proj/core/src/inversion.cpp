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

#include "planar_lagrange/inversion.hpp"

#include <cassert>
#include <stdexcept>

#include "planar_lagrange/errors.hpp"
#include "planar_lagrange/flags.hpp"

namespace planar_lagrange {

TreeSeries solve_inversion_recurrence(const TreeSeries& f) {
  const std::size_t n = f.max_degree();
  TreeSeries g(n);
  if (n == 0) return g;
  g.set(PlanarTree::leaf(), f.coefficient(PlanarTree()));
  for (std::size_t d = 2; d <= n; ++d) {
    for (const auto& rest : enumerate_prt(d - 1, EnumerationLimit{n})) {
      Rational b = 0;
      for (const auto& s : enumerate_open_subtrees(rest)) {
        const Rational a = f.coefficient(s.shape());
        if (a == 0) continue;
        Rational term = a;
        std::size_t degree_seen = 0;
        for (const auto& [root, v] : remove_interior(rest, s)) {
          degree_seen += v.degree();
          term *= g.coefficient(v);
          if (term == 0) break;
        }
        assert(term == 0 || degree_seen == rest.degree());
        b += term;
      }
      g.set(tree_product(PlanarTree::leaf(), rest), b);
    }
  }
  return g;
}

TreeSeries solve_inversion_gamma(const TreeSeries& f) {
  const std::size_t n = f.max_degree();
  TreeSeries g(n);
  for (std::size_t d = 1; d <= n; ++d) {
    for (const auto& t : enumerate_right_sided(d, EnumerationLimit{n})) {
      Rational b = 0;
      for (const auto& q : enumerate_decompositions(t)) {
        Rational term = 1;
        for (const auto& piece : q.pieces) {
          term *= f.coefficient(right_factor(piece.shape()));
          if (term == 0) break;
        }
        b += term;
      }
      g.set(t, b);
    }
  }
  return g;
}

IterationResult solve_inversion_iterate(const TreeSeries& f) {
  const std::size_t n = f.max_degree();
  const TreeSeries x = TreeSeries::x(n);
  IterationResult result{TreeSeries(n), 0};
  // Each update fixes at least one more degree, so n + 1 updates always suffice.
  for (std::size_t step = 0; step <= n + 1; ++step) {
    TreeSeries next = mul(x, substitute(f, result.solution));
    if (next == result.solution) return result;
    result.solution = std::move(next);
    ++result.iterations;
  }
  throw std::logic_error("fixed-point iteration did not stabilize");
}

TreeSeries compositional_inverse(const TreeSeries& h) {
  const std::size_t n = h.max_degree();
  const PlanarTree x = PlanarTree::leaf();
  const Rational linear = h.coefficient(x);
  if (h.coefficient(PlanarTree()) != 0 || linear == 0) {
    throw DomainError("compositional inverse needs order 1 with a nonzero coefficient at x");
  }
  TreeSeries g = TreeSeries::monomial(n, x, 1 / linear);
  // Raising g in degree d changes h(g) in degree d only through linear * g_d.
  for (std::size_t d = 2; d <= n; ++d) {
    const TreeSeries residual = substitute(h, g).homogeneous_part(d);
    for (const auto& [key, term] : residual.terms()) {
      g.set(term.tree, g.coefficient(term.tree) - term.value / linear);
    }
  }
  return g;
}

bool compositional_check(const TreeSeries& f, const TreeSeries& g) {
  if (f.coefficient(PlanarTree()) == 0) throw DomainError("compositional check needs c_1(f) != 0");
  if (f.max_degree() != g.max_degree()) throw DomainError("series truncated at different degrees");
  if (!g.order().at_least(1)) return false;
  const std::size_t n = f.max_degree();
  const TreeSeries h = mul(TreeSeries::x(n), reciprocal(f));
  return substitute(h, g) == TreeSeries::x(n);
}

std::vector<Rational> abelianize(const TreeSeries& f) {
  std::vector<Rational> out(f.max_degree() + 1, Rational(0));
  for (const auto& [key, term] : f.terms()) out[term.tree.degree()] += term.value;
  return out;
}

std::vector<Rational> classical_lagrange(const std::vector<Rational>& F, std::size_t n) {
  if (n < 1) throw DomainError("classical Lagrange inversion needs N >= 1");
  if (F.size() < n) throw DomainError("need at least N coefficients of F");
  // power holds F^k truncated to degree n - 1.
  std::vector<Rational> power(n, Rational(0));
  power[0] = 1;
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) next[i + j] += power[i] * F[j];
    }
    power = std::move(next);
    out[k] = power[k - 1] / static_cast<long>(k);
  }
  return out;
}

}  // namespace planar_lagrange
