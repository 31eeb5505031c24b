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

// Line-oriented instance format.
//
//   bifactor 1                 magic and version, first directive
//   xy <x_count> <y_count>     before any other directive
//   edge <x> <y> <mult>        repeatable, each (x,y) at most once
//   gx <v0> ... <v_{|X|-1}>    required, likewise fx (|X| values), fy (|Y|)
//   gy <v0> ...                optional lower bounds on Y
//   xname <x> <name>           optional vertex names, likewise yname
//
// '#' starts a comment running to the end of the line; tokens are separated
// by whitespace. Only syntax is checked here; bound semantics are left to
// validate_instance.

#ifndef BIFACTOR_IO_HPP
#define BIFACTOR_IO_HPP

#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bifactor/instance.hpp"

namespace bifactor {

struct InstanceDocument {
  Instance instance;
  std::optional<std::vector<Count>> g_y;
  std::map<std::size_t, std::string> x_names;
  std::map<std::size_t, std::string> y_names;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && blank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !blank(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class InstanceParser {
 public:
  InstanceDocument run(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() || pos == 0) {
      const std::size_t nl = text.find('\n', pos);
      const std::string_view line =
          text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no_;
      directive(tokenize(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!seen_magic_) throw ParseError(line_no_, 1, "missing 'bifactor 1' header");
    if (!seen_xy_) throw ParseError(line_no_, 1, "missing 'xy' directive");
    if (!seen_gx_) throw ParseError(line_no_, 1, "missing 'gx' directive");
    if (!seen_fx_) throw ParseError(line_no_, 1, "missing 'fx' directive");
    if (!seen_fy_) throw ParseError(line_no_, 1, "missing 'fy' directive");
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_no_, t.column, msg);
  }

  template <class T>
  T number(const Token& t) const {
    T v{};
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec == std::errc::result_out_of_range) fail(t, "integer out of range '" + std::string(t.text) + "'");
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      fail(t, "expected integer, got '" + std::string(t.text) + "'");
    }
    return v;
  }

  void arity(const std::vector<Token>& toks, std::size_t n) const {
    if (toks.size() != n) {
      fail(toks.size() > n ? toks[n] : toks.front(),
           "'" + std::string(toks.front().text) + "' expects " + std::to_string(n - 1) +
               " arguments, got " + std::to_string(toks.size() - 1));
    }
  }

  std::vector<Count> bounds(const std::vector<Token>& toks, std::size_t n, bool& seen) {
    if (seen) fail(toks.front(), "duplicate '" + std::string(toks.front().text) + "' directive");
    seen = true;
    if (toks.size() - 1 != n) {
      fail(toks.front(), "'" + std::string(toks.front().text) + "' has " +
                             std::to_string(toks.size() - 1) + " values, expected " +
                             std::to_string(n));
    }
    std::vector<Count> out;
    for (std::size_t i = 1; i < toks.size(); ++i) out.push_back(number<Count>(toks[i]));
    return out;
  }

  void name(const std::vector<Token>& toks, std::size_t limit,
            std::map<std::size_t, std::string>& names) {
    arity(toks, 3);
    const auto v = number<std::size_t>(toks[1]);
    if (v >= limit) fail(toks[1], "vertex index out of range");
    if (!names.emplace(v, std::string(toks[2].text)).second) fail(toks[1], "duplicate name");
  }

  void directive(const std::vector<Token>& toks) {
    if (toks.empty()) return;
    const std::string_view head = toks.front().text;
    if (!seen_magic_) {
      if (head != "bifactor") fail(toks.front(), "expected 'bifactor 1' header");
      arity(toks, 2);
      if (toks[1].text != "1") fail(toks[1], "unsupported version '" + std::string(toks[1].text) + "'");
      seen_magic_ = true;
      return;
    }
    if (head == "bifactor") fail(toks.front(), "duplicate header");
    if (head == "xy") {
      if (seen_xy_) fail(toks.front(), "duplicate 'xy' directive");
      arity(toks, 3);
      doc_.instance.x_count = number<std::size_t>(toks[1]);
      doc_.instance.y_count = number<std::size_t>(toks[2]);
      seen_xy_ = true;
      return;
    }
    const bool known = head == "edge" || head == "gx" || head == "fx" || head == "fy" ||
                       head == "gy" || head == "xname" || head == "yname";
    if (!known) fail(toks.front(), "unknown directive '" + std::string(head) + "'");
    if (!seen_xy_) fail(toks.front(), "'" + std::string(head) + "' before 'xy'");
    Instance& inst = doc_.instance;
    if (head == "edge") {
      arity(toks, 4);
      const VertexPair p{number<std::size_t>(toks[1]), number<std::size_t>(toks[2])};
      const Count m = number<Count>(toks[3]);
      if (auto [it, fresh] = edge_lines_.emplace(p, line_no_); !fresh) {
        fail(toks.front(), "duplicate edge " + detail::where_xy(p) + " (first on line " +
                               std::to_string(it->second) + ")");
      }
      inst.multiplicity.emplace(p, m);
    } else if (head == "gx") {
      inst.g_x = bounds(toks, inst.x_count, seen_gx_);
    } else if (head == "fx") {
      inst.f_x = bounds(toks, inst.x_count, seen_fx_);
    } else if (head == "fy") {
      inst.f_y = bounds(toks, inst.y_count, seen_fy_);
    } else if (head == "gy") {
      doc_.g_y = bounds(toks, inst.y_count, seen_gy_);
    } else if (head == "xname") {
      name(toks, inst.x_count, doc_.x_names);
    } else {
      name(toks, inst.y_count, doc_.y_names);
    }
  }

  InstanceDocument doc_;
  std::map<VertexPair, std::size_t> edge_lines_;
  std::size_t line_no_ = 0;
  bool seen_magic_ = false, seen_xy_ = false, seen_gx_ = false, seen_fx_ = false,
       seen_fy_ = false, seen_gy_ = false;
};

inline void emit_bounds(std::ostringstream& out, const char* key, const std::vector<Count>& v) {
  out << key;
  for (Count c : v) out << ' ' << c;
  out << '\n';
}

}  // namespace detail

inline InstanceDocument parse_instance(std::string_view text) {
  return detail::InstanceParser{}.run(text);
}

// Canonical text: header, xy, edges in (x,y) order, gx, fx, fy, gy, names.
inline std::string emit_instance(const InstanceDocument& doc) {
  const Instance& inst = doc.instance;
  std::ostringstream out;
  out << "bifactor 1\n";
  out << "xy " << inst.x_count << ' ' << inst.y_count << '\n';
  for (const auto& [p, m] : inst.multiplicity) out << "edge " << p.x << ' ' << p.y << ' ' << m << '\n';
  detail::emit_bounds(out, "gx", inst.g_x);
  detail::emit_bounds(out, "fx", inst.f_x);
  detail::emit_bounds(out, "fy", inst.f_y);
  if (doc.g_y) detail::emit_bounds(out, "gy", *doc.g_y);
  for (const auto& [x, n] : doc.x_names) out << "xname " << x << ' ' << n << '\n';
  for (const auto& [y, n] : doc.y_names) out << "yname " << y << ' ' << n << '\n';
  return out.str();
}

inline std::string emit_instance(const Instance& inst) { return emit_instance(InstanceDocument{inst, {}, {}, {}}); }

}  // namespace bifactor

#endif  // BIFACTOR_IO_HPP
