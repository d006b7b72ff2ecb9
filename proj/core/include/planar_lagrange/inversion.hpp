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
#include <vector>

#include "planar_lagrange/rational.hpp"
#include "planar_lagrange/series.hpp"

namespace planar_lagrange {

// Solvers for g = x.f(g). Every solver returns the same series; they differ
// only in how the coefficient b(T) of g at a right-sided tree T = x.T' is
// obtained from the coefficients a(.) of f:
//
//   recurrence: b(x.T') = sum over open subtrees S' of T' of
//               a(S') * prod over components V of T' - In(S') of b(V)
//   gamma:      b(T) = sum over right-sided decompositions Q of T of
//               prod over pieces U = x.U' of a(U')
//   iterate:    fixed point of g <- x.f(g) starting from g = 0
//
// In all three b(x) = a(1) and b vanishes off right-sided trees.

TreeSeries solve_inversion_recurrence(const TreeSeries& f);
TreeSeries solve_inversion_gamma(const TreeSeries& f);

struct IterationResult {
  TreeSeries solution;
  /// Number of updates that changed g before the fixed point was reached.
  std::size_t iterations;
};

IterationResult solve_inversion_iterate(const TreeSeries& f);

/// The unique g of order 1 with h(g) = x, for h of order exactly 1 with a
/// nonzero coefficient at x.
TreeSeries compositional_inverse(const TreeSeries& h);

/// True iff (x.(1/f))(g) = x up to the truncation degree. Needs c_1(f) != 0;
/// returns false when g has a constant term.
bool compositional_check(const TreeSeries& f, const TreeSeries& g);

/// Coefficient sums by degree: entry n is the sum of c_T over trees of degree n.
std::vector<Rational> abelianize(const TreeSeries& f);

/// One-variable Lagrange inversion: G with G = t.F(G) mod t^(n+1), via
/// [t^n]G = [u^(n-1)] F(u)^n / n. `F` must hold at least `n` coefficients.
std::vector<Rational> classical_lagrange(const std::vector<Rational>& F, std::size_t n);

}  // namespace planar_lagrange
