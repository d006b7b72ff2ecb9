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

#include "planar_lagrange/series.hpp"

#include <unordered_map>

#include "planar_lagrange/errors.hpp"

namespace planar_lagrange {

std::size_t SeriesOrder::value() const {
  if (infinite_) throw DomainError("the zero series has infinite order");
  return value_;
}

TreeSeries TreeSeries::constant(std::size_t max_degree, const Rational& value) {
  return monomial(max_degree, PlanarTree(), value);
}

TreeSeries TreeSeries::monomial(std::size_t max_degree, const PlanarTree& tree, const Rational& value) {
  TreeSeries s(max_degree);
  s.set(tree, value);
  return s;
}

TreeSeries TreeSeries::from_terms(std::size_t max_degree,
                                  const std::vector<std::pair<PlanarTree, Rational>>& terms) {
  TreeSeries s(max_degree);
  for (const auto& [t, v] : terms) s.set(t, s.coefficient(t) + v);
  return s;
}

Rational TreeSeries::coefficient(const PlanarTree& t) const {
  auto it = terms_.find(t.key());
  return it == terms_.end() ? Rational(0) : it->second.value;
}

void TreeSeries::set(const PlanarTree& t, const Rational& value) {
  if (!t.is_reduced()) throw DomainError("series monomials must be reduced trees: " + render_tree(t));
  if (t.degree() > max_degree_) {
    throw DomainError("monomial " + render_tree(t) + " exceeds the truncation degree " +
                      std::to_string(max_degree_));
  }
  if (value == 0) {
    terms_.erase(t.key());
  } else {
    terms_.insert_or_assign(t.key(), Term{t, value});
  }
}

void TreeSeries::accumulate(const PlanarTree& t, const Rational& value) {
  if (t.degree() > max_degree_ || value == 0) return;
  auto [it, inserted] = terms_.try_emplace(t.key(), Term{t, value});
  if (inserted) return;
  it->second.value += value;
  if (it->second.value == 0) terms_.erase(it);
}

SeriesOrder TreeSeries::order() const {
  if (terms_.empty()) return SeriesOrder::infinite();
  std::size_t lowest = max_degree_;
  for (const auto& [key, term] : terms_) lowest = std::min(lowest, term.tree.degree());
  return SeriesOrder::finite(lowest);
}

TreeSeries TreeSeries::homogeneous_part(std::size_t degree) const {
  TreeSeries out(max_degree_);
  for (const auto& [key, term] : terms_) {
    if (term.tree.degree() == degree) out.terms_.emplace(key, term);
  }
  return out;
}

namespace {

void require_same_degree(const TreeSeries& a, const TreeSeries& b) {
  if (a.max_degree() != b.max_degree()) {
    throw DomainError("series truncated at different degrees (" + std::to_string(a.max_degree()) +
                      " vs " + std::to_string(b.max_degree()) + ")");
  }
}

}  // namespace

TreeSeries add(const TreeSeries& a, const TreeSeries& b) {
  require_same_degree(a, b);
  TreeSeries out = a;
  for (const auto& [key, term] : b.terms()) out.accumulate(term.tree, term.value);
  return out;
}

TreeSeries scale(const Rational& factor, const TreeSeries& a) {
  TreeSeries out(a.max_degree());
  if (factor == 0) return out;
  for (const auto& [key, term] : a.terms()) out.accumulate(term.tree, factor * term.value);
  return out;
}

TreeSeries mul(const TreeSeries& a, const TreeSeries& b) {
  require_same_degree(a, b);
  const std::size_t n = a.max_degree();
  TreeSeries out(n);
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      if (ta.tree.degree() + tb.tree.degree() > n) continue;
      out.accumulate(tree_product(ta.tree, tb.tree), ta.value * tb.value);
    }
  }
  return out;
}

namespace {

void graft_terms(std::span<const TreeSeries> operands, std::size_t budget,
                 std::vector<PlanarTree>& chosen, const Rational& weight, TreeSeries& out) {
  const std::size_t k = chosen.size();
  if (k == operands.size()) {
    out.accumulate(PlanarTree::node(chosen), weight);
    return;
  }
  // Each later operand contributes at least one leaf.
  const std::size_t reserve = operands.size() - k - 1;
  for (const auto& [key, term] : operands[k].terms()) {
    const std::size_t d = term.tree.degree();
    if (d + reserve > budget) continue;
    chosen.push_back(term.tree);
    graft_terms(operands, budget - d, chosen, weight * term.value, out);
    chosen.pop_back();
  }
}

}  // namespace

TreeSeries graft_product(std::span<const TreeSeries> operands) {
  if (operands.size() < 2) throw DomainError("graft_product needs at least two operands");
  for (const auto& s : operands) {
    require_same_degree(operands.front(), s);
    if (!s.order().at_least(1)) throw DomainError("graft_product operands must have no constant term");
  }
  TreeSeries out(operands.front().max_degree());
  std::vector<PlanarTree> chosen;
  graft_terms(operands, out.max_degree(), chosen, Rational(1), out);
  return out;
}

namespace {

class Substitution {
 public:
  explicit Substitution(const TreeSeries& g) : g_(g) {}

  const TreeSeries& image(const PlanarTree& t) {
    if (auto it = memo_.find(t.key()); it != memo_.end()) return it->second;
    TreeSeries result(g_.max_degree());
    if (t.empty()) {
      result = TreeSeries::constant(g_.max_degree(), 1);
    } else if (t.is_leaf()) {
      result = g_;
    } else if (t.degree() <= g_.max_degree()) {
      std::vector<TreeSeries> parts;
      parts.reserve(t.arity());
      for (const auto& c : t.children()) parts.push_back(image(c));
      result = graft_product(parts);
    }
    return memo_.emplace(t.key(), std::move(result)).first->second;
  }

 private:
  const TreeSeries& g_;
  std::unordered_map<std::string, TreeSeries> memo_;
};

}  // namespace

TreeSeries substitute(const TreeSeries& f, const TreeSeries& g) {
  require_same_degree(f, g);
  if (!g.order().at_least(1)) throw DomainError("substitution needs a series without constant term");
  Substitution phi(g);
  TreeSeries out(f.max_degree());
  for (const auto& [key, term] : f.terms()) {
    for (const auto& [k, img] : phi.image(term.tree).terms()) {
      out.accumulate(img.tree, term.value * img.value);
    }
  }
  return out;
}

TreeSeries reciprocal(const TreeSeries& f) {
  const PlanarTree one;
  const Rational c1 = f.coefficient(one);
  if (c1 == 0) throw DomainError("reciprocal needs a nonzero constant term");
  const std::size_t n = f.max_degree();
  TreeSeries out(n);
  const Rational g1 = 1 / c1;
  out.set(one, g1);
  // f.r = 1 read degree by degree: c_1(f) r(T) + c_T(f) r(1) + c_{T1}(f) r(T2) = 0,
  // the last term only for T = T1.T2.
  for (std::size_t d = 1; d <= n; ++d) {
    for (const auto& t : enumerate_prt(d, EnumerationLimit{n})) {
      Rational rhs = f.coefficient(t) * g1;
      if (t.arity() == 2) rhs += f.coefficient(t.child(1)) * out.coefficient(t.child(2));
      out.set(t, -rhs / c1);
    }
  }
  return out;
}

std::string render_series(const TreeSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [key, term] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(term.value) + "*" + render_tree(term.tree);
  }
  return out;
}

}  // namespace planar_lagrange
