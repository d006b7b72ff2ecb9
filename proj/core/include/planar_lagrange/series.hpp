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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planar_lagrange/rational.hpp"
#include "planar_lagrange/tree.hpp"

namespace planar_lagrange {

/// Order of a series: the least degree carrying a nonzero coefficient, or
/// infinity for the zero series.
class SeriesOrder {
 public:
  static SeriesOrder infinite() { return SeriesOrder(true, 0); }
  static SeriesOrder finite(std::size_t value) { return SeriesOrder(false, value); }

  bool is_infinite() const noexcept { return infinite_; }

  /// Throws DomainError for the infinite order.
  std::size_t value() const;

  bool at_least(std::size_t n) const noexcept { return infinite_ || value_ >= n; }

  friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;

 private:
  SeriesOrder(bool infinite, std::size_t value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::size_t value_;
};

/// A planar tree power series truncated above `max_degree`.
///
/// Monomials are reduced planar trees and the empty tree `1`, the unit. The
/// product of two nonempty monomials is binary grafting, so the algebra is
/// neither commutative nor associative. Zero coefficients are never stored.
class TreeSeries {
 public:
  struct Term {
    PlanarTree tree;
    Rational value;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit TreeSeries(std::size_t max_degree) : max_degree_(max_degree) {}

  static TreeSeries constant(std::size_t max_degree, const Rational& value);
  static TreeSeries monomial(std::size_t max_degree, const PlanarTree& tree, const Rational& value = 1);
  static TreeSeries x(std::size_t max_degree) { return monomial(max_degree, PlanarTree::leaf()); }

  /// Builds a series from (tree, value) pairs; repeated trees accumulate.
  static TreeSeries from_terms(std::size_t max_degree,
                               const std::vector<std::pair<PlanarTree, Rational>>& terms);

  std::size_t max_degree() const noexcept { return max_degree_; }

  Rational coefficient(const PlanarTree& t) const;

  /// Overwrites the coefficient of `t`. Throws DomainError unless `t` is
  /// reduced (or empty) with degree at most max_degree().
  void set(const PlanarTree& t, const Rational& value);

  /// Adds `value` to the coefficient of `t`; silently ignores degrees above
  /// max_degree() (truncation).
  void accumulate(const PlanarTree& t, const Rational& value);

  bool is_zero() const noexcept { return terms_.empty(); }
  SeriesOrder order() const;

  /// Terms keyed by tree key, in key order.
  const std::map<std::string, Term>& terms() const noexcept { return terms_; }

  /// The sub-series of terms of exactly `degree`.
  TreeSeries homogeneous_part(std::size_t degree) const;

  friend bool operator==(const TreeSeries&, const TreeSeries&) = default;

 private:
  std::size_t max_degree_;
  std::map<std::string, Term> terms_;
};

TreeSeries add(const TreeSeries& a, const TreeSeries& b);
TreeSeries scale(const Rational& factor, const TreeSeries& a);

/// Product induced by binary grafting, with `1` as two-sided unit.
TreeSeries mul(const TreeSeries& a, const TreeSeries& b);

/// Multilinear m-ary grafting of m >= 2 series without constant terms.
TreeSeries graft_product(std::span<const TreeSeries> operands);

/// f(g): the unital grafting morphism sending x to g, applied to f. Needs
/// order(g) >= 1.
TreeSeries substitute(const TreeSeries& f, const TreeSeries& g);

/// The unique series r with mul(f, r) = 1. Needs a nonzero constant term.
TreeSeries reciprocal(const TreeSeries& f);

/// Renders "c1*T1 + c2*T2 + ..." with tree literals; "0" for the zero series.
std::string render_series(const TreeSeries& s);

/// Series file: {"max_degree": N, "coefficients": [{"tree": "...", "value": "p/q"}, ...]}.
TreeSeries read_series_json(std::string_view text);
std::string write_series_json(const TreeSeries& s);

}  // namespace planar_lagrange
