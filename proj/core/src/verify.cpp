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

#include "planar_lagrange/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "planar_lagrange/flags.hpp"
#include "planar_lagrange/inversion.hpp"
#include "planar_lagrange/luk.hpp"
#include "planar_lagrange/random.hpp"
#include "planar_lagrange/tree.hpp"

namespace planar_lagrange {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, std::vector<InvariantResult>& out) : suite_(std::move(suite)), out_(out) {}

  void record(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }

 private:
  std::string suite_;
  std::vector<InvariantResult>& out_;
};

// Catalan numbers C_0..C_{n}: C_k = sum C_i C_{k-1-i}.
std::vector<std::uint64_t> catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c;
}

// Little Schroeder numbers s_1..s_n: (k+1) s_{k+1} = 3(2k-1) s_k - (k-2) s_{k-1}.
std::vector<std::int64_t> super_catalan(std::size_t n) {
  std::vector<std::int64_t> s(std::max<std::size_t>(n + 1, 3), 0);
  s[1] = 1;
  s[2] = 1;
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    s[k + 1] = (3 * (2 * kk - 1) * s[k] - (kk - 2) * s[k - 1]) / (kk + 1);
  }
  return s;
}

std::vector<PlanarTree> all_pt_up_to(std::size_t vertices) {
  std::vector<PlanarTree> out;
  for (std::size_t n = 1; n <= vertices; ++n) {
    auto level = enumerate_pt(n, EnumerationLimit{vertices});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<PlanarTree> all_prt_up_to(std::size_t degree) {
  std::vector<PlanarTree> out;
  for (std::size_t d = 1; d <= degree; ++d) {
    auto level = enumerate_prt(d, EnumerationLimit{degree});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<PlanarTree> all_right_sided_up_to(std::size_t degree) {
  std::vector<PlanarTree> out;
  for (std::size_t d = 1; d <= degree; ++d) {
    auto level = enumerate_right_sided(d, EnumerationLimit{degree});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Every connected selection of t (all-or-none not required).
std::vector<SubtreeSelection> all_connected_selections(const PlanarTree& t) {
  std::vector<SubtreeSelection> out;
  std::function<std::vector<std::vector<Position>>(const Position&)> below =
      [&](const Position& p) {
        std::vector<std::vector<Position>> acc{{p}};
        const std::size_t ar = arity(t, p);
        for (std::uint32_t i = 1; i <= ar; ++i) {
          auto child = below(p.child(i));
          std::vector<std::vector<Position>> next = acc;  // child excluded
          for (const auto& base : acc) {
            for (const auto& c : child) {
              auto merged = base;
              merged.insert(merged.end(), c.begin(), c.end());
              next.push_back(std::move(merged));
            }
          }
          acc = std::move(next);
        }
        return acc;
      };
  for (const auto& p : vertex_positions(t)) {
    for (auto& vs : below(p)) out.emplace_back(t, std::set<Position>(vs.begin(), vs.end()));
  }
  return out;
}

void verify_trees(Recorder& rec) {
  {
    const auto c = catalan(6);
    const auto s = super_catalan(6);
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto pt = enumerate_pt(n).size();
      const auto prt = enumerate_prt(n).size();
      if (pt != c[n - 1] || static_cast<std::int64_t>(prt) != s[n]) {
        ok = false;
        detail += "size " + std::to_string(n) + ": pt " + std::to_string(pt) + " prt " + std::to_string(prt) + "; ";
      }
    }
    rec.record("enumeration_counts", ok, ok ? "PT 1..6 vertices and PRT degrees 1..6 match recurrences" : detail);
  }
  {
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& t : all_pt_up_to(8)) {
      ok = ok && parse_tree(render_tree(t)) == t && tree_from_arity_word(render_tree(t, TreeFormat::arity_word)) == t;
      ++checked;
    }
    for (const auto& t : all_prt_up_to(8)) {
      ok = ok && parse_tree(render_tree(t)) == t;
      ++checked;
    }
    rec.record("literal_round_trip", ok, std::to_string(checked) + " trees");
  }
  {
    bool ok = true;
    for (const auto& t : all_prt_up_to(6)) {
      const bool expected = t.is_leaf() || (t.arity() == 2 && t.children()[0].is_leaf());
      ok = ok && is_right_sided(t) == expected;
      if (is_right_sided(t)) ok = ok && tree_product(PlanarTree::leaf(), right_factor(t)) == t;
    }
    rec.record("right_sided_characterization", ok, "all reduced trees of degree <= 6");
  }
  {
    bool ok = true;
    std::size_t selections = 0;
    for (const auto& t : all_prt_up_to(6)) {
      for (const auto& s : enumerate_open_subtrees(t)) {
        if (!is_completely_right_sided(t, s)) continue;
        ++selections;
        for (const auto& comp : remove_interior(t, s)) ok = ok && is_right_sided(comp.tree);
      }
    }
    rec.record("completely_right_sided_forest", ok, std::to_string(selections) + " selections");
  }
  {
    bool ok = true;
    std::size_t selections = 0;
    for (const auto& t : all_prt_up_to(5)) {
      for (const auto& s : all_connected_selections(t)) {
        ++selections;
        // Compare arities vertex by vertex through the selection.
        bool arities_match = true;
        for (const auto& p : s.vertices()) {
          std::size_t selected_children = 0;
          for (std::uint32_t i = 1; i <= arity(t, p); ++i) selected_children += s.contains(p.child(i)) ? 1 : 0;
          if (selected_children > 0 && selected_children != arity(t, p)) arities_match = false;
        }
        ok = ok && s.is_relatively_open() == arities_match;
      }
    }
    rec.record("relatively_open_characterization", ok, std::to_string(selections) + " connected selections");
  }
}

// Calls visit(word) for every word over lambda(0..max_letter) of length 1..max_length.
void for_each_word(std::size_t max_letter, std::size_t max_length,
                   const std::function<void(const GradedWord&)>& visit) {
  GradedWord w;
  std::function<void()> grow = [&]() {
    if (w.size() == max_length) return;
    for (std::size_t a = 0; a <= max_letter; ++a) {
      w.push_back(nat_letter(a));
      visit(w);
      grow();
      w.pop_back();
    }
  };
  grow();
}

void verify_luk(Recorder& rec, SeededRng& rng) {
  std::vector<GradedWord> luk_words;
  bool prefix_ok = true;
  bool implies_product = true;
  std::size_t words = 0;
  for_each_word(4, 9, [&](const GradedWord& w) {
    ++words;
    if (!is_luk(w)) return;
    luk_words.push_back(w);
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (is_luk(GradedWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)))) prefix_ok = false;
    }
    const auto r = is_product_of_luk(w);
    if (!r || *r != 1) implies_product = false;
  });
  rec.record("prefix_code", prefix_ok,
             std::to_string(words) + " words, " + std::to_string(luk_words.size()) + " Lukasiewicz");
  rec.record("luk_implies_single_factor", implies_product);

  {
    bool ok = true;
    for (const auto& w : luk_words) ok = ok && encode_pt(decode_pt(w)) == w;
    const auto trees = all_pt_up_to(8);
    for (const auto& t : trees) ok = ok && decode_pt(encode_pt(t)) == t;
    rec.record("pt_codec_round_trip", ok, std::to_string(trees.size()) + " trees");
  }
  {
    bool ok = true;
    const auto trees = all_pt_up_to(8);
    for (const auto& t : trees) ok = ok && height(encode_pt(t)) == t.height();
    rec.record("height_identity", ok, std::to_string(trees.size()) + " trees");
  }
  {
    const auto pool = all_pt_up_to(6);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t k = 1 + rng.below(5);
      std::vector<GradedWord> parts;
      GradedWord joined;
      for (std::size_t i = 0; i < k; ++i) {
        parts.push_back(encode_pt(pool[rng.below(pool.size())]));
        joined.insert(joined.end(), parts.back().begin(), parts.back().end());
      }
      ok = ok && factor(joined) == parts;
    }
    rec.record("unique_factorization", ok, "1000 seeded concatenations");
  }
}

// Rebuilds the host from decomposition shapes glued root-to-leaf.
PlanarTree glue(const Decomposition& d) {
  std::map<Position, const SubtreeSelection*> by_root;
  for (const auto& u : d.pieces) {
    if (u.size() > 1 || d.pieces.size() == 1) by_root.emplace(u.root(), &u);
  }
  std::function<PlanarTree(const Position&)> build = [&](const Position& root) {
    const auto* piece = by_root.at(root);
    const PlanarTree shape = piece->shape();
    std::vector<PlanarTree> scions;
    for (const auto& b : piece->leaves()) {
      scions.push_back(by_root.contains(b) && b != root ? build(b) : PlanarTree::leaf());
    }
    return graft_over(shape, scions);
  };
  return build(Position::root());
}

void verify_bijections(Recorder& rec, std::size_t max_degree) {
  const auto hosts = all_right_sided_up_to(max_degree);
  bool counts = true;
  bool flag_round_trip = true;
  bool decomp_round_trip = true;
  bool codec_round_trip = true;
  bool words_are_luk = true;
  bool glued = true;
  std::set<GradedWord> encoded;
  std::size_t total_flags = 0;
  for (const auto& t : hosts) {
    const auto flags = enumerate_flags(t);
    const auto decomps = enumerate_decompositions(t);
    counts = counts && flags.size() == decomps.size();
    for (const auto& f : flags) {
      ++total_flags;
      const auto d = flag_to_decomposition(f);
      flag_round_trip = flag_round_trip && decomposition_to_flag(d) == f &&
                        std::find(decomps.begin(), decomps.end(), d) != decomps.end();
      const auto w = encode_flag(f);
      words_are_luk = words_are_luk && is_luk(w);
      codec_round_trip = codec_round_trip && decode_flag(w) == f;
      encoded.insert(w);
    }
    for (const auto& d : decomps) {
      decomp_round_trip = decomp_round_trip && flag_to_decomposition(decomposition_to_flag(d)) == d;
      glued = glued && glue(d) == t;
    }
  }
  const std::string scope = "right-sided hosts of degree <= " + std::to_string(max_degree);
  rec.record("flag_decomposition_counts", counts, scope);
  rec.record("flag_to_decomposition_round_trip", flag_round_trip, std::to_string(total_flags) + " flags");
  rec.record("decomposition_to_flag_round_trip", decomp_round_trip, scope);
  rec.record("flag_codec_round_trip", codec_round_trip, std::to_string(total_flags) + " flags");
  rec.record("flag_words_are_luk", words_are_luk, scope);
  rec.record("flag_codec_injective", encoded.size() == total_flags,
             std::to_string(encoded.size()) + " distinct words");
  rec.record("decomposition_gluing", glued, scope);

  // Every Lukasiewicz word over reduced trees whose decoded host is small enough
  // is the word of some flag; the host degree equals the word length.
  std::vector<GradedLetter> alphabet{tree_letter(PlanarTree())};
  for (const auto& t : all_prt_up_to(max_degree > 1 ? max_degree - 1 : 1)) alphabet.push_back(tree_letter(t));
  std::size_t luk_words = 0;
  bool all_hit = true;
  GradedWord w;
  std::function<void(std::int64_t)> grow = [&](std::int64_t running) {
    for (const auto& y : alphabet) {
      if (w.size() + 1 > max_degree) return;
      w.push_back(y);
      const std::int64_t next = running + static_cast<std::int64_t>(y.degree) - 1;
      if (next == -1) {
        ++luk_words;
        all_hit = all_hit && encoded.contains(w);
      } else if (next >= 0 && w.size() + static_cast<std::size_t>(next) + 1 <= max_degree) {
        grow(next);
      }
      w.pop_back();
    }
  };
  grow(0);
  rec.record("flag_codec_surjective_slice", all_hit && luk_words == encoded.size(),
             std::to_string(luk_words) + " words of length <= " + std::to_string(max_degree));
}

void verify_inversion(Recorder& rec, const VerifyOptions& options, SeededRng& rng) {
  const std::size_t n = options.max_degree;
  const TreeSeries x = TreeSeries::x(n);
  bool triple = true;
  bool fixed_point = true;
  bool support = true;
  bool square = true;
  bool iteration_bound = true;
  bool morphism = true;
  for (std::size_t i = 0; i < options.random_cases; ++i) {
    const TreeSeries f = random_series(n, 4, rng);
    const TreeSeries g = solve_inversion_recurrence(f);
    const auto iterated = solve_inversion_iterate(f);
    triple = triple && g == solve_inversion_gamma(f) && g == iterated.solution;
    iteration_bound = iteration_bound && iterated.iterations <= n;
    fixed_point = fixed_point && g == mul(x, substitute(f, g));
    for (const auto& [key, term] : g.terms()) support = support && is_right_sided(term.tree);
    if (n >= 1) square = square && abelianize(g) == classical_lagrange(abelianize(f), n);

    const TreeSeries h = random_series(n, n, rng);
    const auto af = abelianize(f);
    const auto ah = abelianize(h);
    std::vector<Rational> product(n + 1, Rational(0));
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; a + b <= n; ++b) product[a + b] += af[a] * ah[b];
    }
    morphism = morphism && abelianize(mul(f, h)) == product;
  }
  const std::string cases = std::to_string(options.random_cases) + " seeded series, degree <= " + std::to_string(n);
  rec.record("triple_agreement", triple, cases);
  rec.record("fixed_point_identity", fixed_point, cases);
  rec.record("solution_support", support, cases);
  rec.record("iteration_bound", iteration_bound, cases);
  rec.record("classical_reduction", square, cases);
  rec.record("abelianization_multiplicative", morphism, cases);

  bool recip = true;
  bool inverse = true;
  for (std::size_t i = 0; i < options.random_cases; ++i) {
    const TreeSeries f = random_series(n, 4, rng, true);
    recip = recip && mul(f, reciprocal(f)) == TreeSeries::constant(n, 1);
    const TreeSeries h = mul(x, reciprocal(f));
    const TreeSeries g = compositional_inverse(h);
    inverse = inverse && compositional_check(f, g) && substitute(g, h) == x;
  }
  rec.record("reciprocal_identity", recip, cases);
  rec.record("compositional_inverse", inverse, cases);

  if (n >= 4) {
    TreeSeries ones(n);
    ones.set(PlanarTree(), 1);
    for (const auto& t : all_prt_up_to(n)) ones.set(t, 1);
    const auto sums = abelianize(solve_inversion_recurrence(ones));
    const bool ok = sums[1] == 1 && sums[2] == 1 && sums[3] == 2 && sums[4] == 7;
    rec.record("all_ones_coefficient_sums", ok,
               "1..4: " + to_string(sums[1]) + ", " + to_string(sums[2]) + ", " + to_string(sums[3]) +
                   ", " + to_string(sums[4]));
  }
}

}  // namespace

std::optional<VerifySuite> parse_verify_suite(std::string_view name) {
  if (name == "all") return VerifySuite::all;
  if (name == "trees") return VerifySuite::trees;
  if (name == "luk") return VerifySuite::luk;
  if (name == "bijections") return VerifySuite::bijections;
  if (name == "inversion") return VerifySuite::inversion;
  return std::nullopt;
}

std::string_view verify_suite_name(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::all: return "all";
    case VerifySuite::trees: return "trees";
    case VerifySuite::luk: return "luk";
    case VerifySuite::bijections: return "bijections";
    case VerifySuite::inversion: return "inversion";
  }
  return "";
}

std::vector<InvariantResult> run_verification(VerifySuite suite, const VerifyOptions& options) {
  std::vector<InvariantResult> out;
  SeededRng rng(options.seed);
  const bool all = suite == VerifySuite::all;
  if (all || suite == VerifySuite::trees) {
    Recorder rec("trees", out);
    verify_trees(rec);
  }
  if (all || suite == VerifySuite::luk) {
    Recorder rec("luk", out);
    verify_luk(rec, rng);
  }
  if (all || suite == VerifySuite::bijections) {
    Recorder rec("bijections", out);
    verify_bijections(rec, std::max<std::size_t>(options.max_degree, 1));
  }
  if (all || suite == VerifySuite::inversion) {
    Recorder rec("inversion", out);
    verify_inversion(rec, options, rng);
  }
  return out;
}

}  // namespace planar_lagrange
