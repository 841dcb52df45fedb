// Copyright 2026 The permdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// DOT and JSON output, and the JSON permutation-table input.
//
// Unlike the rest of the library this header needs nlohmann/json
// ("json.hpp") on the include path.

#ifndef PERMDYN_IO_HPP
#define PERMDYN_IO_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permdyn/dynamics.hpp"
#include "permdyn/errors.hpp"
#include "permdyn/genirr.hpp"
#include "permdyn/text.hpp"

namespace permdyn {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// One cluster per cycle, edges v -> image(v).
inline std::string to_dot(const FunctionalGraph& G, const std::string& name = "G") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  os << "  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < G.cycles.size(); ++c) {
    const auto& cyc = G.cycles[c];
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=" << detail::dot_quote("cycle " + std::to_string(c + 1) + " (length " + std::to_string(cyc.size()) + ")")
       << ";\n";
    for (std::size_t i = 0; i < cyc.size(); ++i)
      os << "    " << detail::dot_quote(cyc[i]) << " -> " << detail::dot_quote(cyc[(i + 1) % cyc.size()]) << ";\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::json summary_json(const CycleSummary& s) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [len, cnt] : s) out.push_back({len, cnt});
  return out;
}

inline nlohmann::json to_json(const FunctionalGraph& G) {
  return {{"nodes", G.nodes}, {"cycles", G.cycles}, {"summary", summary_json(G.summary)}};
}

inline nlohmann::json to_json(const BaseField& F, const GenReport& r) {
  nlohmann::json produced = nlohmann::json::array();
  for (const Poly& f : r.produced) produced.push_back(format_poly(F, f));
  nlohmann::json out = {{"seed", format_poly(F, r.seed)}, {"perm", format_poly(F, r.perm.poly())}, {"produced", produced}};
  out["period"] = r.period ? nlohmann::json(*r.period) : nlohmann::json(nullptr);
  out["bound"] = r.bound ? nlohmann::json{{"num", r.bound->num}, {"den", r.bound->den}} : nlohmann::json(nullptr);
  return out;
}

/// sigma from a JSON array of [from, to] index pairs into I_k (0-based, canonical
/// order). Indices that never appear as "from" are fixed.
inline std::vector<std::size_t> parse_sigma_json(const std::string& text, std::size_t n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sigma table is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("sigma table must be a JSON array of [from, to] pairs");
  std::vector<std::size_t> sigma(n);
  std::vector<bool> set(n, false);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
      throw ParseError("each sigma entry must be a pair of nonnegative integers");
    const auto from = pair[0].get<std::size_t>(), to = pair[1].get<std::size_t>();
    detail::require(from < n && to < n, "sigma index out of range (|I_k| = " + std::to_string(n) + ")");
    detail::require(!set[from], "sigma lists index " + std::to_string(from) + " twice");
    set[from] = true;
    sigma[from] = to;
  }
  require_bijection(sigma, n);
  return sigma;
}

}  // namespace permdyn

#endif  // PERMDYN_IO_HPP
