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

#include <json.hpp>
#include <set>

#include "planar_lagrange/errors.hpp"
#include "planar_lagrange/series.hpp"

namespace planar_lagrange {

TreeSeries read_series_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("series file must be a JSON object", 0);
  for (const auto& [key, value] : j.items()) {
    if (key != "max_degree" && key != "coefficients") throw ParseError("unknown field '" + key + "'", 0);
  }
  if (!j.contains("max_degree") || !j["max_degree"].is_number_unsigned()) {
    throw ParseError("'max_degree' must be a non-negative integer", 0);
  }
  if (!j.contains("coefficients") || !j["coefficients"].is_array()) {
    throw ParseError("'coefficients' must be an array", 0);
  }
  TreeSeries out(j["max_degree"].get<std::size_t>());
  std::set<std::string> seen;
  for (const auto& entry : j["coefficients"]) {
    if (!entry.is_object()) throw ParseError("coefficient entries must be objects", 0);
    for (const auto& [key, value] : entry.items()) {
      if (key != "tree" && key != "value") throw ParseError("unknown field '" + key + "'", 0);
    }
    if (!entry.contains("tree") || !entry["tree"].is_string() || !entry.contains("value") ||
        !entry["value"].is_string()) {
      throw ParseError("coefficient entries need string fields 'tree' and 'value'", 0);
    }
    const PlanarTree t = parse_tree(entry["tree"].get<std::string>());
    if (!seen.insert(t.key()).second) {
      throw ParseError("tree " + render_tree(t) + " listed twice", 0);
    }
    out.set(t, parse_rational(entry["value"].get<std::string>()));
  }
  return out;
}

std::string write_series_json(const TreeSeries& s) {
  nlohmann::ordered_json j;
  j["max_degree"] = s.max_degree();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& [key, term] : s.terms()) {
    nlohmann::ordered_json entry;
    entry["tree"] = render_tree(term.tree);
    entry["value"] = to_string(term.value);
    coeffs.push_back(std::move(entry));
  }
  j["coefficients"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

}  // namespace planar_lagrange
