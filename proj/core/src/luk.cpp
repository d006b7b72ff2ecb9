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

#include "planar_lagrange/luk.hpp"

#include <cctype>
#include <charconv>

#include "planar_lagrange/errors.hpp"

namespace planar_lagrange {

GradedLetter nat_letter(std::size_t n) { return {std::to_string(n), n}; }

GradedLetter tree_letter(const PlanarTree& t) {
  if (!t.is_reduced()) throw DomainError("tree letters must be reduced trees: " + render_tree(t));
  return {t.key(), t.degree()};
}

PlanarTree letter_tree(const GradedLetter& letter) {
  PlanarTree t = tree_from_arity_word(letter.symbol);
  if (t.degree() != letter.degree || !t.is_reduced()) {
    throw DomainError("letter '" + letter.symbol + "' is not a reduced tree of degree " +
                      std::to_string(letter.degree));
  }
  return t;
}

std::int64_t delta(const GradedWord& w) {
  std::int64_t sum = 0;
  for (const auto& y : w) sum += static_cast<std::int64_t>(y.degree) - 1;
  return sum;
}

bool is_luk(const GradedWord& w) {
  std::int64_t running = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && running < 0) return false;
    running += static_cast<std::int64_t>(w[i].degree) - 1;
  }
  return !w.empty() && running == -1;
}

std::optional<std::size_t> is_product_of_luk(const GradedWord& w) {
  const std::int64_t total = delta(w);
  if (total >= 0) return std::nullopt;
  std::int64_t running = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    running += static_cast<std::int64_t>(w[i].degree) - 1;
    if (running <= total) return std::nullopt;
  }
  return static_cast<std::size_t>(-total);
}

std::vector<GradedWord> factor(const GradedWord& w) {
  if (!is_product_of_luk(w)) throw DomainError("word is not a product of Lukasiewicz words");
  // Cut each time the running delta reaches a new minimum.
  std::vector<GradedWord> out;
  std::int64_t running = 0;
  std::int64_t floor = 0;
  GradedWord current;
  for (const auto& y : w) {
    current.push_back(y);
    running += static_cast<std::int64_t>(y.degree) - 1;
    if (running < floor) {
      floor = running;
      out.push_back(std::move(current));
      current.clear();
    }
  }
  return out;
}

HeadDecomposition head_decompose(const GradedWord& w) {
  if (!is_luk(w)) throw DomainError("word is not a Lukasiewicz word");
  HeadDecomposition out{w.front(), {}};
  GradedWord rest(w.begin() + 1, w.end());
  if (!rest.empty()) out.parts = factor(rest);
  return out;
}

GradedWord luk_compose(const GradedLetter& head, const std::vector<GradedWord>& parts) {
  if (parts.size() != head.degree) {
    throw DomainError("letter of degree " + std::to_string(head.degree) + " needs " +
                      std::to_string(head.degree) + " parts, got " + std::to_string(parts.size()));
  }
  GradedWord out{head};
  for (const auto& p : parts) {
    if (!is_luk(p)) throw DomainError("every part must be a Lukasiewicz word");
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::size_t height(const GradedWord& w) {
  const auto [head, parts] = head_decompose(w);
  if (parts.empty()) return 0;
  std::size_t tallest = 0;
  for (const auto& p : parts) tallest = std::max(tallest, height(p));
  return 1 + tallest;
}

namespace {

void encode_into(const PlanarTree& t, GradedWord& out) {
  out.push_back(nat_letter(t.arity()));
  for (const auto& c : t.children()) encode_into(c, out);
}

}  // namespace

GradedWord encode_pt(const PlanarTree& t) {
  if (t.empty()) throw DomainError("the empty tree has no Lukasiewicz code");
  GradedWord out;
  encode_into(t, out);
  return out;
}

PlanarTree decode_pt(const GradedWord& w) {
  for (const auto& y : w) {
    if (y.symbol != std::to_string(y.degree)) {
      throw DomainError("letter '" + y.symbol + "' does not belong to the alphabet N");
    }
  }
  const auto [head, parts] = head_decompose(w);
  std::vector<PlanarTree> children;
  children.reserve(parts.size());
  for (const auto& p : parts) children.push_back(decode_pt(p));
  return PlanarTree::node(std::move(children));
}

GradedWord parse_nat_word(std::string_view text) {
  GradedWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), n);
    if (ec != std::errc()) throw ParseError("expected a natural number", i);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected whitespace between letters", i);
    }
    out.push_back(nat_letter(n));
  }
  return out;
}

std::string render_nat_word(const GradedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].symbol;
  }
  return out;
}

GradedWord parse_tree_word(std::string_view text) {
  GradedWord out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    PlanarTree t;
    try {
      t = parse_tree(text.substr(start, end - start));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad tree letter: ") + e.what(), start);
    }
    if (!t.is_reduced()) throw ParseError("tree letters must be reduced trees", start);
    out.push_back(tree_letter(t));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string render_tree_word(const GradedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "; ";
    out += render_tree(letter_tree(w[i]));
  }
  return out;
}

}  // namespace planar_lagrange
