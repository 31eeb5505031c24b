// Copyright 2026 The bifactor Authors.
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

// Result documents: one compact JSON object per line with a fixed key order.
// Every document starts with "format":"bifactor-result","version":1,"kind".
// Edge lists are [x, y, c] triples in (x,y) order and vertex sets are sorted,
// so equal results always serialize to equal bytes.

#ifndef BIFACTOR_RESULT_HPP
#define BIFACTOR_RESULT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bifactor/criteria.hpp"
#include "bifactor/instance.hpp"
#include "json.hpp"

namespace bifactor {

using Document = nlohmann::ordered_json;

namespace detail {

inline Document header(std::string_view kind) {
  Document d;
  d["format"] = "bifactor-result";
  d["version"] = 1;
  d["kind"] = kind;
  return d;
}

inline Document edge_list(const EdgeMap& edges) {
  Document list = Document::array();
  for (const auto& [p, c] : edges) list.push_back({p.x, p.y, c});
  return list;
}

}  // namespace detail

inline std::string render(const Document& d) { return d.dump() + "\n"; }

inline Document outcome_document(const Factor& f) {
  Document d = detail::header("factor");
  d["edges"] = detail::edge_list(f.chosen);
  return d;
}

inline Document outcome_document(const Certificate& c) {
  Document d = detail::header("certificate");
  d["a"] = c.a_set;
  d["b"] = c.b_set;
  d["deficiency"] = c.deficiency;
  return d;
}

inline Document outcome_document(const SolveOutcome& outcome) {
  return std::visit([](const auto& v) { return outcome_document(v); }, outcome);
}

inline Document criterion_document(std::string_view criterion, const CriterionReport& r) {
  Document d = detail::header("criterion");
  d["criterion"] = criterion;
  d["holds"] = r.holds;
  if (r.witness) {
    Document w;
    w["family"] = r.witness->family;
    w["a"] = r.witness->a_set;
    w["b"] = r.witness->b_set;
    w["supply"] = r.witness->supply;
    w["demand"] = r.witness->demand;
    d["witness"] = std::move(w);
  }
  return d;
}

inline Document oracle_document(const std::optional<Factor>& found) {
  Document d = detail::header("oracle");
  d["found"] = found.has_value();
  if (found) d["edges"] = detail::edge_list(found->chosen);
  return d;
}

inline Document oracle_count_document(std::uint64_t count) {
  Document d = detail::header("oracle-count");
  d["count"] = count;
  return d;
}

inline Document validation_document(const std::vector<std::string>& problems) {
  Document d = detail::header("validation");
  d["valid"] = problems.empty();
  d["problems"] = problems;
  return d;
}

inline Document factor_check_document(const FactorReport& r) {
  Document d = detail::header("factor-check");
  d["valid"] = r.valid();
  d["structural"] = r.structural;
  Document v = Document::array();
  for (const auto& violation : r.violations) v.push_back(violation.message());
  d["violations"] = std::move(v);
  return d;
}

inline Document certificate_check_document(const Certificate& c, const CertificateReport& r) {
  Document d = detail::header("certificate-check");
  d["valid"] = r.valid();
  d["structural"] = r.structural;
  d["stored"] = c.deficiency;
  d["recomputed"] = r.recomputed;
  return d;
}

class ResultFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a "factor" or "certificate" document back.
inline SolveOutcome parse_outcome(std::string_view text) {
  Document d;
  try {
    d = Document::parse(text);
    if (d.at("format") != "bifactor-result" || d.at("version") != 1) {
      throw ResultFormatError("not a bifactor-result version 1 document");
    }
    const auto kind = d.at("kind").get<std::string>();
    if (kind == "factor") {
      Factor f;
      for (const auto& triple : d.at("edges")) {
        if (!triple.is_array() || triple.size() != 3) throw ResultFormatError("edge entry must be [x, y, c]");
        const VertexPair p{triple[0].get<std::size_t>(), triple[1].get<std::size_t>()};
        if (!f.chosen.emplace(p, triple[2].get<Count>()).second) {
          throw ResultFormatError("duplicate edge in factor document");
        }
      }
      return f;
    }
    if (kind == "certificate") {
      return Certificate{d.at("a").get<std::vector<std::size_t>>(),
                         d.at("b").get<std::vector<std::size_t>>(),
                         d.at("deficiency").get<Count>()};
    }
    throw ResultFormatError("expected a factor or certificate document, got '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ResultFormatError(std::string("malformed result document: ") + e.what());
  }
}

}  // namespace bifactor

#endif  // BIFACTOR_RESULT_HPP
