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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "planar_lagrange/errors.hpp"
#include "planar_lagrange/flags.hpp"
#include "planar_lagrange/inversion.hpp"
#include "planar_lagrange/luk.hpp"
#include "planar_lagrange/series.hpp"
#include "planar_lagrange/tree.hpp"
#include "planar_lagrange/verify.hpp"

namespace planar_lagrange::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kDefaultCap = 10;

/// Raised for I/O problems and bad flag combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  bool json = false;
  std::size_t max_degree = 6;
  std::uint64_t seed = 0;
  bool unsafe_size = false;

  // trees
  std::string kind;
  std::size_t size = 0;
  std::string format = "literal";

  // luk
  std::string nat_word;
  std::string prt_word;
  std::string tree_text;

  // flags / decomps / flag-word
  std::size_t index = 0;

  // series
  std::string f_path;
  std::string g_path;
  std::string out_path;
  std::string method = "recurrence";
  bool check = false;

  // verify
  std::string suite = "all";
};

EnumerationLimit enumeration_limit(const Config& cfg) {
  if (cfg.unsafe_size) return {std::numeric_limits<std::size_t>::max()};
  std::size_t cap = kDefaultCap;
  if (const char* env = std::getenv("PLANAR_LAGRANGE_MAX_SIZE"); env && *env) {
    try {
      cap = std::stoul(env);
    } catch (const std::exception&) {
      throw UsageError("PLANAR_LAGRANGE_MAX_SIZE must be a non-negative integer");
    }
  }
  return {cap};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TreeSeries load_series(const std::string& path) {
  if (path.empty()) throw UsageError("missing series file");
  return read_series_json(read_file(path));
}

void write_series(const Config& cfg, const TreeSeries& s, std::ostream& out) {
  const std::string text = write_series_json(s);
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
  file << text;
}

Json string_list(const std::vector<std::string>& items) {
  Json arr = Json::array();
  for (const auto& s : items) arr.push_back(s);
  return arr;
}

Json selections(const std::vector<SubtreeSelection>& sels) {
  Json arr = Json::array();
  for (const auto& s : sels) arr.push_back(string_list(s.position_strings()));
  return arr;
}

std::string selections_text(const std::vector<SubtreeSelection>& sels) {
  std::string out;
  for (const auto& s : sels) {
    out += out.empty() ? "{" : " {";
    const auto ps = s.position_strings();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) out += ",";
      out += ps[i].empty() ? "r" : ps[i];
    }
    out += "}";
  }
  return out;
}

PlanarTree right_sided_tree(const std::string& text) {
  const PlanarTree t = parse_tree(text);
  if (!is_right_sided(t) || !t.is_reduced()) {
    throw DomainError("tree " + render_tree(t) + " is not a right-sided reduced tree");
  }
  return t;
}

// trees

int cmd_trees(const Config& cfg, std::ostream& out) {
  const auto limit = enumeration_limit(cfg);
  std::vector<PlanarTree> trees;
  if (cfg.kind == "pt") {
    trees = enumerate_pt(cfg.size, limit);
  } else if (cfg.kind == "prt") {
    trees = enumerate_prt(cfg.size, limit);
  } else {
    trees = enumerate_right_sided(cfg.size, limit);
  }
  const TreeFormat format = cfg.format == "dot"     ? TreeFormat::dot
                            : cfg.format == "arity" ? TreeFormat::arity_word
                                                    : TreeFormat::literal;
  if (cfg.json) {
    Json j;
    j["kind"] = cfg.kind;
    j["size"] = cfg.size;
    j["count"] = trees.size();
    Json items = Json::array();
    for (const auto& t : trees) items.push_back(render_tree(t, format));
    j["trees"] = std::move(items);
    emit(out, j);
    return kSuccess;
  }
  out << trees.size() << "\n";
  for (const auto& t : trees) {
    out << render_tree(t, format);
    if (format != TreeFormat::dot) out << "\n";
  }
  return kSuccess;
}

// luk

struct WordInput {
  GradedWord word;
  bool nat = true;
};

WordInput word_input(const Config& cfg) {
  if (!cfg.nat_word.empty() && !cfg.prt_word.empty()) throw UsageError("give either --nat or --prt, not both");
  if (!cfg.prt_word.empty()) return {parse_tree_word(cfg.prt_word), false};
  if (cfg.nat_word.empty()) throw UsageError("missing word (--nat or --prt)");
  return {parse_nat_word(cfg.nat_word), true};
}

std::string render_word(const WordInput& in, const GradedWord& w) {
  return in.nat ? render_nat_word(w) : render_tree_word(w);
}

int cmd_luk_check(const Config& cfg, std::ostream& out) {
  const auto in = word_input(cfg);
  const auto d = delta(in.word);
  const bool luk = is_luk(in.word);
  const auto r = is_product_of_luk(in.word);
  if (cfg.json) {
    Json j;
    j["word"] = render_word(in, in.word);
    j["delta"] = d;
    j["luk"] = luk;
    j["product"] = r.has_value();
    j["factors"] = r ? Json(*r) : Json(nullptr);
    emit(out, j);
  } else {
    out << "delta=" << d << "\n";
    out << "luk=" << (luk ? "true" : "false") << "\n";
    out << "product=" << (r ? "true" : "false");
    if (r) out << " r=" << *r;
    out << "\n";
  }
  return kSuccess;
}

int cmd_luk_factor(const Config& cfg, std::ostream& out) {
  const auto in = word_input(cfg);
  const auto parts = factor(in.word);
  if (cfg.json) {
    Json arr = Json::array();
    for (const auto& p : parts) arr.push_back(render_word(in, p));
    Json j;
    j["factors"] = std::move(arr);
    emit(out, j);
  } else {
    for (const auto& p : parts) out << render_word(in, p) << "\n";
  }
  return kSuccess;
}

int cmd_luk_height(const Config& cfg, std::ostream& out) {
  const auto in = word_input(cfg);
  const auto h = height(in.word);
  if (cfg.json) {
    Json j;
    j["height"] = h;
    emit(out, j);
  } else {
    out << h << "\n";
  }
  return kSuccess;
}

int cmd_luk_encode(const Config& cfg, std::ostream& out) {
  if (cfg.tree_text.empty()) throw UsageError("missing --tree");
  const auto w = encode_pt(parse_tree(cfg.tree_text));
  if (cfg.json) {
    Json j;
    j["word"] = render_nat_word(w);
    emit(out, j);
  } else {
    out << render_nat_word(w) << "\n";
  }
  return kSuccess;
}

int cmd_luk_decode(const Config& cfg, std::ostream& out) {
  const auto in = word_input(cfg);
  if (!in.nat) {
    // Words over reduced trees decode to flags.
    const Flag f = decode_flag(in.word);
    if (cfg.json) {
      emit(out, Json::parse(flag_to_json(f)));
    } else {
      out << render_tree(f.host) << "\n" << selections_text(f.stages) << "\n";
    }
    return kSuccess;
  }
  const PlanarTree t = decode_pt(in.word);
  if (cfg.json) {
    Json j;
    j["tree"] = render_tree(t);
    emit(out, j);
  } else {
    out << render_tree(t) << "\n";
  }
  return kSuccess;
}

// flags and decompositions

int cmd_flags(const Config& cfg, std::ostream& out) {
  const PlanarTree t = right_sided_tree(cfg.tree_text);
  const auto flags = enumerate_flags(t);
  if (cfg.json) {
    Json j;
    j["host"] = render_tree(t);
    j["count"] = flags.size();
    Json items = Json::array();
    for (std::size_t i = 0; i < flags.size(); ++i) {
      Json item;
      item["index"] = i;
      item["stages"] = selections(flags[i].stages);
      item["word"] = render_tree_word(encode_flag(flags[i]));
      item["decomposition"] = selections(flag_to_decomposition(flags[i]).pieces);
      items.push_back(std::move(item));
    }
    j["flags"] = std::move(items);
    emit(out, j);
    return kSuccess;
  }
  out << flags.size() << "\n";
  for (std::size_t i = 0; i < flags.size(); ++i) {
    out << i << ": " << selections_text(flags[i].stages) << "  word: " << render_tree_word(encode_flag(flags[i]))
        << "  decomposition: " << selections_text(flag_to_decomposition(flags[i]).pieces) << "\n";
  }
  return kSuccess;
}

int cmd_decomps(const Config& cfg, std::ostream& out) {
  const PlanarTree t = right_sided_tree(cfg.tree_text);
  const auto decomps = enumerate_decompositions(t);
  if (cfg.json) {
    Json j;
    j["host"] = render_tree(t);
    j["count"] = decomps.size();
    Json items = Json::array();
    for (std::size_t i = 0; i < decomps.size(); ++i) {
      Json item;
      item["index"] = i;
      item["pieces"] = selections(decomps[i].pieces);
      item["flag"] = selections(decomposition_to_flag(decomps[i]).stages);
      items.push_back(std::move(item));
    }
    j["decompositions"] = std::move(items);
    emit(out, j);
    return kSuccess;
  }
  out << decomps.size() << "\n";
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    out << i << ": " << selections_text(decomps[i].pieces)
        << "  flag: " << selections_text(decomposition_to_flag(decomps[i]).stages) << "\n";
  }
  return kSuccess;
}

int cmd_flag_word(const Config& cfg, std::ostream& out) {
  const PlanarTree t = right_sided_tree(cfg.tree_text);
  const auto flags = enumerate_flags(t);
  if (cfg.index >= flags.size()) {
    throw DomainError("flag index " + std::to_string(cfg.index) + " out of range; " + render_tree(t) + " has " +
                      std::to_string(flags.size()) + " flags");
  }
  const std::string word = render_tree_word(encode_flag(flags[cfg.index]));
  if (cfg.json) {
    Json j;
    j["host"] = render_tree(t);
    j["index"] = cfg.index;
    j["word"] = word;
    emit(out, j);
  } else {
    out << word << "\n";
  }
  return kSuccess;
}

// series

TreeSeries solve_with(const std::string& method, const TreeSeries& f) {
  if (method == "gamma") return solve_inversion_gamma(f);
  if (method == "iterate") return solve_inversion_iterate(f).solution;
  return solve_inversion_recurrence(f);
}

int cmd_series_invert(const Config& cfg, std::ostream& out, std::ostream& err) {
  const TreeSeries f = load_series(cfg.f_path);
  const TreeSeries g = solve_with(cfg.method, f);
  if (cfg.check) {
    for (const std::string other : {"recurrence", "gamma", "iterate"}) {
      if (other != cfg.method && solve_with(other, f) != g) {
        throw DomainError("methods '" + cfg.method + "' and '" + other + "' disagree");
      }
    }
    if (mul(TreeSeries::x(f.max_degree()), substitute(f, g)) != g) {
      throw DomainError("solution fails g = x.f(g)");
    }
    err << "check: recurrence, gamma and iterate agree; g = x.f(g) holds\n";
  }
  write_series(cfg, g, out);
  return kSuccess;
}

int cmd_series_recip(const Config& cfg, std::ostream& out) {
  write_series(cfg, reciprocal(load_series(cfg.f_path)), out);
  return kSuccess;
}

int cmd_series_binary(const Config& cfg, std::ostream& out, bool substitution) {
  const TreeSeries f = load_series(cfg.f_path);
  const TreeSeries g = load_series(cfg.g_path);
  write_series(cfg, substitution ? substitute(f, g) : mul(f, g), out);
  return kSuccess;
}

int cmd_series_abelianize(const Config& cfg, std::ostream& out) {
  const auto coeffs = abelianize(load_series(cfg.f_path));
  if (cfg.json) {
    Json arr = Json::array();
    for (const auto& c : coeffs) arr.push_back(to_string(c));
    Json j;
    j["coefficients"] = std::move(arr);
    emit(out, j);
    return kSuccess;
  }
  out << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? ", " : "") << to_string(coeffs[i]);
  out << "]\n";
  return kSuccess;
}

// verify

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto suite = parse_verify_suite(cfg.suite);
  if (!suite) throw UsageError("unknown suite '" + cfg.suite + "'");
  VerifyOptions options;
  options.max_degree = cfg.max_degree;
  options.seed = cfg.seed;
  const auto results = run_verification(*suite, options);
  bool passed = true;
  for (const auto& r : results) passed = passed && r.passed;
  if (cfg.json) {
    Json j;
    j["suite"] = cfg.suite;
    j["max_degree"] = cfg.max_degree;
    j["seed"] = cfg.seed;
    Json items = Json::array();
    for (const auto& r : results) {
      Json item;
      item["suite"] = r.suite;
      item["name"] = r.name;
      item["passed"] = r.passed;
      item["detail"] = r.detail;
      items.push_back(std::move(item));
    }
    j["results"] = std::move(items);
    j["passed"] = passed;
    emit(out, j);
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
    out << (passed ? "all invariants hold" : "some invariants FAILED") << "\n";
  }
  return passed ? kSuccess : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Planar tree Lagrange inversion: trees, Lukasiewicz words, flags, decompositions and series"};
  app.name(args.empty() ? "planar-lagrange" : args.front());
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Machine-readable JSON output");
  app.add_option("--max-degree", cfg.max_degree, "Truncation / host degree for verify")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--unsafe-size", cfg.unsafe_size, "Lift the enumeration size cap");

  auto* trees = app.add_subcommand("trees", "Enumerate planar trees");
  trees->fallthrough();
  trees->add_option("--kind", cfg.kind, "Tree family")
      ->required()
      ->check(CLI::IsMember({"pt", "prt", "right-sided"}));
  trees->add_option("--size", cfg.size, "Vertices (pt) or leaves (prt, right-sided)")->required();
  trees->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"literal", "arity", "dot"}))
      ->capture_default_str();

  auto* luk = app.add_subcommand("luk", "Lukasiewicz words");
  luk->fallthrough();
  luk->require_subcommand(1);
  auto add_word_options = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--nat", cfg.nat_word, "Word over N, e.g. \"3 0 1 2 0 0 1 0\"");
    sub->add_option("--prt", cfg.prt_word, "Word over reduced trees, e.g. \"(x x); 1; 1\"");
  };
  auto* luk_check = luk->add_subcommand("check", "delta and membership");
  add_word_options(luk_check);
  auto* luk_factor = luk->add_subcommand("factor", "Unique factorization into Lukasiewicz words");
  add_word_options(luk_factor);
  auto* luk_height = luk->add_subcommand("height", "Height of a Lukasiewicz word");
  add_word_options(luk_height);
  auto* luk_encode = luk->add_subcommand("encode-tree", "Preorder arity word of a tree");
  luk_encode->fallthrough();
  luk_encode->add_option("--tree", cfg.tree_text, "Tree literal")->required();
  auto* luk_decode = luk->add_subcommand("decode-word", "Tree of an N-word, or flag of a tree word");
  add_word_options(luk_decode);

  auto* flags = app.add_subcommand("flags", "Right-sided open flags of a right-sided tree");
  flags->fallthrough();
  flags->add_option("tree", cfg.tree_text, "Tree literal")->required();
  auto* decomps = app.add_subcommand("decomps", "Right-sided decompositions of a right-sided tree");
  decomps->fallthrough();
  decomps->add_option("tree", cfg.tree_text, "Tree literal")->required();
  auto* flag_word = app.add_subcommand("flag-word", "Word of the flag with the given index");
  flag_word->fallthrough();
  flag_word->add_option("tree", cfg.tree_text, "Tree literal")->required();
  flag_word->add_option("index", cfg.index, "0-based index in the 'flags' listing")->required();

  auto* series = app.add_subcommand("series", "Planar tree power series");
  series->fallthrough();
  series->require_subcommand(1);
  auto add_series_io = [&](CLI::App* sub, bool needs_g) {
    sub->fallthrough();
    sub->add_option("--f", cfg.f_path, "Series file")->required();
    if (needs_g) sub->add_option("--g", cfg.g_path, "Second series file")->required();
    sub->add_option("--out", cfg.out_path, "Write the result here instead of stdout");
  };
  auto* invert = series->add_subcommand("invert", "Solve g = x.f(g)");
  add_series_io(invert, false);
  invert->add_option("--method", cfg.method, "Solver")
      ->check(CLI::IsMember({"recurrence", "gamma", "iterate"}))
      ->capture_default_str();
  invert->add_flag("--check", cfg.check, "Cross-check with the other solvers and the fixed-point identity");
  auto* recip = series->add_subcommand("recip", "Reciprocal 1/f");
  add_series_io(recip, false);
  auto* subst = series->add_subcommand("subst", "Substitution f(g)");
  add_series_io(subst, true);
  auto* mul_cmd = series->add_subcommand("mul", "Product f.g");
  add_series_io(mul_cmd, true);
  auto* abel = series->add_subcommand("abelianize", "Coefficient sums by degree");
  abel->fallthrough();
  abel->add_option("--f", cfg.f_path, "Series file")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant checks");
  verify->fallthrough();
  verify->add_option("suite", cfg.suite, "all, trees, luk, bijections or inversion")
      ->check(CLI::IsMember({"all", "trees", "luk", "bijections", "inversion"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*trees) return cmd_trees(cfg, out);
    if (*luk_check) return cmd_luk_check(cfg, out);
    if (*luk_factor) return cmd_luk_factor(cfg, out);
    if (*luk_height) return cmd_luk_height(cfg, out);
    if (*luk_encode) return cmd_luk_encode(cfg, out);
    if (*luk_decode) return cmd_luk_decode(cfg, out);
    if (*flags) return cmd_flags(cfg, out);
    if (*decomps) return cmd_decomps(cfg, out);
    if (*flag_word) return cmd_flag_word(cfg, out);
    if (*invert) return cmd_series_invert(cfg, out, err);
    if (*recip) return cmd_series_recip(cfg, out);
    if (*subst) return cmd_series_binary(cfg, out, true);
    if (*mul_cmd) return cmd_series_binary(cfg, out, false);
    if (*abel) return cmd_series_abelianize(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace planar_lagrange::cli
