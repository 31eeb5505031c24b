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

// Data model for degree-bounded factors of bipartite multigraphs: the
// instance, a factor (chosen edge multiplicities), and a violating set-pair
// certificate, together with the counting and verification primitives the
// solver, the checkers and the oracle are built on.

#ifndef BIFACTOR_INSTANCE_HPP
#define BIFACTOR_INSTANCE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bifactor {

// All degree bounds, multiplicities and deficiency sums are 63-bit signed.
using Count = std::int64_t;

inline constexpr Count kCountMax = std::numeric_limits<Count>::max();

// Truncated difference max{0, a - b}.
constexpr Count monus(Count a, Count b) noexcept { return a > b ? a - b : 0; }

struct VertexPair {
  std::size_t x = 0;
  std::size_t y = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

using EdgeMap = std::map<VertexPair, Count>;

// A bipartite multigraph G[X,Y] with lower bounds g and upper bounds f on X
// and upper bounds f on Y. Lower bounds on Y are zero and not stored.
struct Instance {
  std::size_t x_count = 0;
  std::size_t y_count = 0;
  EdgeMap multiplicity;  // absent pairs have multiplicity 0
  std::vector<Count> g_x;
  std::vector<Count> f_x;
  std::vector<Count> f_y;

  Count m(std::size_t x, std::size_t y) const {
    auto it = multiplicity.find({x, y});
    return it == multiplicity.end() ? 0 : it->second;
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Chosen multiplicity c(x,y) per edge; zero entries are omitted.
struct Factor {
  EdgeMap chosen;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// (A, B) with A a subset of X and B a subset of Y such that
// f(B) < sum over A of g(x) monus e_G(x, Y \ B). Sets are sorted, unique.
struct Certificate {
  std::vector<std::size_t> a_set;
  std::vector<std::size_t> b_set;
  Count deficiency = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

using SolveOutcome = std::variant<Factor, Certificate>;

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(std::vector<std::string> problems)
      : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out = "invalid instance";
    for (const auto& p : problems) {
      out += "; ";
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

namespace detail {

// Adds b to acc; returns false instead of wrapping around.
inline bool accumulate(Count& acc, Count b) noexcept {
  Count out = 0;
  if (__builtin_add_overflow(acc, b, &out)) return false;
  acc = out;
  return true;
}

inline std::string where_x(std::size_t x) { return "x=" + std::to_string(x); }
inline std::string where_y(std::size_t y) { return "y=" + std::to_string(y); }
inline std::string where_xy(VertexPair p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline bool strictly_increasing(std::span<const std::size_t> s) {
  return std::adjacent_find(s.begin(), s.end(),
                            [](std::size_t a, std::size_t b) { return a >= b; }) ==
         s.end();
}

}  // namespace detail

// Lists every violated instance invariant; empty means valid.
inline std::vector<std::string> instance_problems(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.x_count == 0) out.emplace_back("x_count must be positive");
  if (inst.y_count == 0) out.emplace_back("y_count must be positive");
  auto check_len = [&](const std::vector<Count>& v, std::size_t n, const char* name) {
    if (v.size() != n) {
      out.push_back(std::string(name) + " has " + std::to_string(v.size()) +
                    " entries, expected " + std::to_string(n));
      return false;
    }
    return true;
  };
  const bool gx_ok = check_len(inst.g_x, inst.x_count, "g_x");
  const bool fx_ok = check_len(inst.f_x, inst.x_count, "f_x");
  check_len(inst.f_y, inst.y_count, "f_y");

  Count bound_total = 0;
  bool bound_overflow = false;
  auto tally = [&](Count v) {
    if (v > 0 && !detail::accumulate(bound_total, v)) bound_overflow = true;
  };
  for (std::size_t x = 0; x < inst.g_x.size(); ++x) {
    if (inst.g_x[x] < 0) out.push_back("negative g at " + detail::where_x(x));
    tally(inst.g_x[x]);
  }
  for (std::size_t x = 0; x < inst.f_x.size(); ++x) {
    if (inst.f_x[x] < 0) out.push_back("negative f at " + detail::where_x(x));
    tally(inst.f_x[x]);
  }
  for (std::size_t y = 0; y < inst.f_y.size(); ++y) {
    if (inst.f_y[y] < 0) out.push_back("negative f at " + detail::where_y(y));
    tally(inst.f_y[y]);
  }
  if (gx_ok && fx_ok) {
    for (std::size_t x = 0; x < inst.x_count; ++x) {
      if (inst.g_x[x] > inst.f_x[x]) out.push_back("g exceeds f at " + detail::where_x(x));
    }
  }
  if (bound_overflow) out.emplace_back("sum of degree bounds exceeds 63-bit range");

  Count total = 0;
  bool mult_overflow = false;
  for (const auto& [p, m] : inst.multiplicity) {
    if (p.x >= inst.x_count || p.y >= inst.y_count) {
      out.push_back("edge " + detail::where_xy(p) + " out of range");
    }
    if (m == 0) {
      out.push_back("zero multiplicity stored at " + detail::where_xy(p));
    } else if (m < 0) {
      out.push_back("negative multiplicity at " + detail::where_xy(p));
    } else if (!detail::accumulate(total, m)) {
      mult_overflow = true;
    }
  }
  if (mult_overflow) out.emplace_back("total edge multiplicity exceeds 63-bit range");
  return out;
}

// Returns `raw` unchanged when it satisfies every invariant, otherwise throws
// InvalidInstance listing all problems.
inline const Instance& validate_instance(const Instance& raw) {
  auto problems = instance_problems(raw);
  if (!problems.empty()) throw InvalidInstance(std::move(problems));
  return raw;
}

// e_G(x, S): total multiplicity between x and the Y-vertices in `ys`.
inline Count edge_count(const Instance& inst, std::size_t x,
                        std::span<const std::size_t> ys) {
  if (x >= inst.x_count) throw std::out_of_range("edge_count: x out of range");
  Count total = 0;
  for (std::size_t y : ys) {
    if (y >= inst.y_count) throw std::out_of_range("edge_count: y out of range");
    total += inst.m(x, y);
  }
  return total;
}

// deg_G(x), counting multiplicity.
inline Count degree_x(const Instance& inst, std::size_t x) {
  Count total = 0;
  for (auto it = inst.multiplicity.lower_bound({x, 0});
       it != inst.multiplicity.end() && it->first.x == x; ++it) {
    total += it->second;
  }
  return total;
}

inline Count degree_y(const Instance& inst, std::size_t y) {
  Count total = 0;
  for (const auto& [p, m] : inst.multiplicity) {
    if (p.y == y) total += m;
  }
  return total;
}

// N_G(S) for S a subset of X, sorted ascending.
inline std::vector<std::size_t> neighborhood(const Instance& inst,
                                             std::span<const std::size_t> xs) {
  std::vector<bool> hit(inst.y_count, false);
  for (std::size_t x : xs) {
    if (x >= inst.x_count) throw std::out_of_range("neighborhood: x out of range");
    for (auto it = inst.multiplicity.lower_bound({x, 0});
         it != inst.multiplicity.end() && it->first.x == x; ++it) {
      hit[it->first.y] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < inst.y_count; ++y) {
    if (hit[y]) out.push_back(y);
  }
  return out;
}

// Complement of a sorted subset of {0, ..., n-1}.
inline std::vector<std::size_t> complement(std::span<const std::size_t> s, std::size_t n) {
  std::vector<bool> in(n, false);
  for (std::size_t v : s) in.at(v) = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

inline Count sum_over(std::span<const Count> values, std::span<const std::size_t> s) {
  Count total = 0;
  for (std::size_t v : s) total += values[v];
  return total;
}

enum class Side { kX, kY };

struct FactorViolation {
  enum class Kind { kCapacity, kLowerBound, kUpperBound };
  Kind kind;
  Side side = Side::kX;       // vertex side for bound violations
  std::size_t vertex = 0;     // vertex index for bound violations
  VertexPair edge{};          // edge for capacity violations
  Count value = 0;            // c(x,y) or deg_F(v)
  Count bound = 0;            // m(x,y), g(v) or f(v)

  std::string message() const {
    const std::string at = kind == Kind::kCapacity
                               ? detail::where_xy(edge)
                               : (side == Side::kX ? detail::where_x(vertex)
                                                   : detail::where_y(vertex));
    switch (kind) {
      case Kind::kCapacity:
        return "capacity at " + at + ": chosen " + std::to_string(value) +
               " exceeds multiplicity " + std::to_string(bound);
      case Kind::kLowerBound:
        return "lower bound at " + at + ": degree " + std::to_string(value) +
               " below g " + std::to_string(bound);
      case Kind::kUpperBound:
        return "upper bound at " + at + ": degree " + std::to_string(value) +
               " exceeds f " + std::to_string(bound);
    }
    return {};
  }
};

struct FactorReport {
  std::vector<std::string> structural;       // edges absent from the instance etc.
  std::vector<FactorViolation> violations;   // capacity and degree bounds

  bool valid() const { return structural.empty() && violations.empty(); }
};

// deg_F(v) for every vertex on both sides. Ignores pairs outside the ranges.
inline std::pair<std::vector<Count>, std::vector<Count>> factor_degrees(
    const Instance& inst, const Factor& fac) {
  std::vector<Count> dx(inst.x_count, 0), dy(inst.y_count, 0);
  for (const auto& [p, c] : fac.chosen) {
    if (p.x < inst.x_count && p.y < inst.y_count) {
      dx[p.x] += c;
      dy[p.y] += c;
    }
  }
  return {std::move(dx), std::move(dy)};
}

// Checks g(x) <= deg_F(x) <= f(x) on X, g_y(y) <= deg_F(y) <= f(y) on Y
// (g_y taken as zero when absent) and c <= m on every edge.
inline FactorReport verify_factor(const Instance& inst, const Factor& fac,
                                  std::optional<std::span<const Count>> g_y = std::nullopt) {
  FactorReport report;
  for (const auto& [p, c] : fac.chosen) {
    if (p.x >= inst.x_count || p.y >= inst.y_count) {
      report.structural.push_back("edge " + detail::where_xy(p) + " out of range");
      continue;
    }
    const Count m = inst.m(p.x, p.y);
    if (m == 0) {
      report.structural.push_back("edge " + detail::where_xy(p) + " not in instance");
      continue;
    }
    if (c <= 0) {
      report.structural.push_back("non-positive chosen multiplicity at " +
                                  detail::where_xy(p));
      continue;
    }
    if (c > m) {
      report.violations.push_back(
          {FactorViolation::Kind::kCapacity, Side::kX, 0, p, c, m});
    }
  }
  if (g_y && g_y->size() != inst.y_count) {
    report.structural.emplace_back("g_y length does not match y_count");
    g_y.reset();
  }
  const auto [dx, dy] = factor_degrees(inst, fac);
  using K = FactorViolation::Kind;
  for (std::size_t x = 0; x < inst.x_count; ++x) {
    if (dx[x] < inst.g_x[x]) report.violations.push_back({K::kLowerBound, Side::kX, x, {}, dx[x], inst.g_x[x]});
    if (dx[x] > inst.f_x[x]) report.violations.push_back({K::kUpperBound, Side::kX, x, {}, dx[x], inst.f_x[x]});
  }
  for (std::size_t y = 0; y < inst.y_count; ++y) {
    const Count gy = g_y ? (*g_y)[y] : 0;
    if (dy[y] < gy) report.violations.push_back({K::kLowerBound, Side::kY, y, {}, dy[y], gy});
    if (dy[y] > inst.f_y[y]) report.violations.push_back({K::kUpperBound, Side::kY, y, {}, dy[y], inst.f_y[y]});
  }
  return report;
}

// Left side minus right side of the violated inequality:
// sum over A of (g(x) monus e_G(x, Y \ B)) minus f(B).
inline Count set_pair_deficiency(const Instance& inst, std::span<const std::size_t> a_set,
                                 std::span<const std::size_t> b_set) {
  const auto outside_b = complement(b_set, inst.y_count);
  Count demand = 0;
  for (std::size_t x : a_set) demand += monus(inst.g_x.at(x), edge_count(inst, x, outside_b));
  return demand - sum_over(inst.f_y, b_set);
}

struct CertificateReport {
  std::vector<std::string> structural;
  Count recomputed = 0;
  bool stale = false;  // stored deficiency differs from the recomputed one

  bool valid() const { return structural.empty() && !stale && recomputed >= 1; }
};

inline CertificateReport verify_certificate(const Instance& inst, const Certificate& cert) {
  CertificateReport report;
  auto check_set = [&](std::span<const std::size_t> s, std::size_t n, const char* name) {
    if (!detail::strictly_increasing(s)) {
      report.structural.push_back(std::string(name) + " is not sorted and duplicate-free");
    }
    for (std::size_t v : s) {
      if (v >= n) {
        report.structural.push_back(std::string(name) + " contains out-of-range index " +
                                    std::to_string(v));
      }
    }
  };
  check_set(cert.a_set, inst.x_count, "A");
  check_set(cert.b_set, inst.y_count, "B");
  if (!report.structural.empty()) return report;
  report.recomputed = set_pair_deficiency(inst, cert.a_set, cert.b_set);
  report.stale = report.recomputed != cert.deficiency;
  return report;
}

}  // namespace bifactor

#endif  // BIFACTOR_INSTANCE_HPP
