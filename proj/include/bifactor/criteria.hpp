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

// Exhaustive subset-enumeration checkers for the known factor criteria on
// bipartite multigraphs. They are exponential and meant as independent
// oracles for the solver, not as production deciders.
//
// Every checker enumerates subsets by binary counting (bit i is vertex i) and
// reports the first violated inequality it meets, so witnesses are
// reproducible. A witness always satisfies demand > supply, except for Ore's
// balance condition where it records f(X) != f(Y).

#ifndef BIFACTOR_CRITERIA_HPP
#define BIFACTOR_CRITERIA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bifactor/instance.hpp"

namespace bifactor {

// Largest vertex count any checker will enumerate subsets of.
struct ExhaustionLimit {
  std::size_t max_vertices = 22;
};

class ExhaustionLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Raised when the multiplicity-floor preconditions of the Hall-type
// condition do not hold; this is not a verdict.
class CorollaryNotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CriterionWitness {
  std::string family;  // which inequality family failed
  std::vector<std::size_t> a_set;
  std::vector<std::size_t> b_set;
  Count supply = 0;
  Count demand = 0;
};

struct CriterionReport {
  bool holds = true;
  std::optional<CriterionWitness> witness;
};

namespace detail {

using Mask = std::uint64_t;

inline void require_within(std::size_t n, const ExhaustionLimit& limit, const char* what) {
  if (n > limit.max_vertices || n >= 63) {
    throw ExhaustionLimitExceeded(std::string(what) + ": " + std::to_string(n) +
                                  " vertices exceed exhaustion limit " +
                                  std::to_string(limit.max_vertices));
  }
}

inline bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }

inline std::vector<std::size_t> members(Mask m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (has(m, i)) out.push_back(i);
  }
  return out;
}

inline std::vector<Count> lower_y_or_zero(const Instance& inst,
                                          std::optional<std::span<const Count>> g_y) {
  if (!g_y) return std::vector<Count>(inst.y_count, 0);
  if (g_y->size() != inst.y_count) throw std::invalid_argument("g_y length does not match y_count");
  return {g_y->begin(), g_y->end()};
}

inline CriterionReport violated(CriterionWitness w) { return {false, std::move(w)}; }

}  // namespace detail

// f(B) >= sum over A of (g(x) monus e_G(x, Y\B)) for all A in X, B in Y.
// For a fixed B the right side is largest when A holds exactly the x with
// g(x) > e_G(x, Y\B), so only B is enumerated.
inline CriterionReport check_new_criterion(const Instance& inst,
                                           const ExhaustionLimit& limit = {}) {
  detail::require_within(inst.y_count, limit, "new criterion");
  const detail::Mask end = detail::Mask{1} << inst.y_count;
  std::vector<Count> outside(inst.x_count);
  for (detail::Mask b = 0; b < end; ++b) {
    std::fill(outside.begin(), outside.end(), 0);
    for (const auto& [p, m] : inst.multiplicity) {
      if (!detail::has(b, p.y)) outside[p.x] += m;
    }
    Count demand = 0;
    for (std::size_t x = 0; x < inst.x_count; ++x) demand += monus(inst.g_x[x], outside[x]);
    Count supply = 0;
    for (std::size_t y = 0; y < inst.y_count; ++y) {
      if (detail::has(b, y)) supply += inst.f_y[y];
    }
    if (demand > supply) {
      CriterionWitness w{"A,B", {}, detail::members(b, inst.y_count), supply, demand};
      for (std::size_t x = 0; x < inst.x_count; ++x) {
        if (inst.g_x[x] > outside[x]) w.a_set.push_back(x);
      }
      return detail::violated(std::move(w));
    }
  }
  return {};
}

// g(A) <= sum over y of min{f(y), e_G(y, A)} for all A in X, and
// g(B) <= sum over x of min{f(x), e_G(x, B)} for all B in Y.
// The second family is skipped when g_y is absent or identically zero.
inline CriterionReport check_cymer_kano(const Instance& inst,
                                        std::optional<std::span<const Count>> g_y = std::nullopt,
                                        const ExhaustionLimit& limit = {}) {
  const auto gy = detail::lower_y_or_zero(inst, g_y);
  detail::require_within(inst.x_count, limit, "Cymer-Kano criterion (X side)");
  std::vector<Count> into(std::max(inst.x_count, inst.y_count));

  const detail::Mask x_end = detail::Mask{1} << inst.x_count;
  for (detail::Mask a = 0; a < x_end; ++a) {
    std::fill(into.begin(), into.end(), 0);
    for (const auto& [p, m] : inst.multiplicity) {
      if (detail::has(a, p.x)) into[p.y] += m;
    }
    Count supply = 0;
    for (std::size_t y = 0; y < inst.y_count; ++y) supply += std::min(inst.f_y[y], into[y]);
    Count demand = 0;
    for (std::size_t x = 0; x < inst.x_count; ++x) {
      if (detail::has(a, x)) demand += inst.g_x[x];
    }
    if (demand > supply) {
      return detail::violated({"A", detail::members(a, inst.x_count), {}, supply, demand});
    }
  }

  if (std::all_of(gy.begin(), gy.end(), [](Count v) { return v == 0; })) return {};
  detail::require_within(inst.y_count, limit, "Cymer-Kano criterion (Y side)");
  const detail::Mask y_end = detail::Mask{1} << inst.y_count;
  for (detail::Mask b = 0; b < y_end; ++b) {
    std::fill(into.begin(), into.end(), 0);
    for (const auto& [p, m] : inst.multiplicity) {
      if (detail::has(b, p.y)) into[p.x] += m;
    }
    Count supply = 0;
    for (std::size_t x = 0; x < inst.x_count; ++x) supply += std::min(inst.f_x[x], into[x]);
    Count demand = 0;
    for (std::size_t y = 0; y < inst.y_count; ++y) {
      if (detail::has(b, y)) demand += gy[y];
    }
    if (demand > supply) {
      return detail::violated({"B", {}, detail::members(b, inst.y_count), supply, demand});
    }
  }
  return {};
}

// f(A) >= sum over u not in A of (g(u) monus deg_{G-A}(u)) for all A in X u Y.
// The witness splits A into its X part (a_set) and Y part (b_set).
inline CriterionReport check_heinrich(const Instance& inst,
                                      std::optional<std::span<const Count>> g_y = std::nullopt,
                                      const ExhaustionLimit& limit = {}) {
  const auto gy = detail::lower_y_or_zero(inst, g_y);
  const std::size_t nx = inst.x_count;
  const std::size_t n = nx + inst.y_count;
  detail::require_within(n, limit, "Heinrich criterion");
  std::vector<Count> deg_rest_x(nx), deg_rest_y(inst.y_count);
  const detail::Mask end = detail::Mask{1} << n;
  for (detail::Mask a = 0; a < end; ++a) {
    std::fill(deg_rest_x.begin(), deg_rest_x.end(), 0);
    std::fill(deg_rest_y.begin(), deg_rest_y.end(), 0);
    for (const auto& [p, m] : inst.multiplicity) {
      const bool x_in = detail::has(a, p.x);
      const bool y_in = detail::has(a, nx + p.y);
      if (!y_in) deg_rest_x[p.x] += m;
      if (!x_in) deg_rest_y[p.y] += m;
    }
    Count supply = 0;
    Count demand = 0;
    for (std::size_t x = 0; x < nx; ++x) {
      if (detail::has(a, x)) {
        supply += inst.f_x[x];
      } else {
        demand += monus(inst.g_x[x], deg_rest_x[x]);
      }
    }
    for (std::size_t y = 0; y < inst.y_count; ++y) {
      if (detail::has(a, nx + y)) {
        supply += inst.f_y[y];
      } else {
        demand += monus(gy[y], deg_rest_y[y]);
      }
    }
    if (demand > supply) {
      return detail::violated({"A", detail::members(a & ((detail::Mask{1} << nx) - 1), nx),
                               detail::members(a >> nx, inst.y_count), supply, demand});
    }
  }
  return {};
}

// Ore's f-factor condition, reading f_x and f_y as exact degrees (g_x is
// ignored): f(X) = f(Y) and f(A) <= sum over y of min{f(y), e_G(y, A)}.
inline CriterionReport check_ore_f_factor(const Instance& inst,
                                          const ExhaustionLimit& limit = {}) {
  detail::require_within(inst.x_count, limit, "Ore criterion");
  const Count fx_total = sum_over(inst.f_x, complement({}, inst.x_count));
  const Count fy_total = sum_over(inst.f_y, complement({}, inst.y_count));
  if (fx_total != fy_total) {
    return detail::violated({"balance", complement({}, inst.x_count),
                             complement({}, inst.y_count), fy_total, fx_total});
  }
  std::vector<Count> into(inst.y_count);
  const detail::Mask end = detail::Mask{1} << inst.x_count;
  for (detail::Mask a = 0; a < end; ++a) {
    std::fill(into.begin(), into.end(), 0);
    for (const auto& [p, m] : inst.multiplicity) {
      if (detail::has(a, p.x)) into[p.y] += m;
    }
    Count supply = 0;
    for (std::size_t y = 0; y < inst.y_count; ++y) supply += std::min(inst.f_y[y], into[y]);
    Count demand = 0;
    for (std::size_t x = 0; x < inst.x_count; ++x) {
      if (detail::has(a, x)) demand += inst.f_x[x];
    }
    if (demand > supply) {
      return detail::violated({"A", detail::members(a, inst.x_count), {}, supply, demand});
    }
  }
  return {};
}

// Lists why the Hall-type condition is not applicable; empty when it is.
inline std::vector<std::string> hall_condition_obstacles(const Instance& inst, Count m_floor) {
  std::vector<std::string> out;
  if (m_floor < 1) out.emplace_back("multiplicity floor must be positive");
  for (const auto& [p, m] : inst.multiplicity) {
    if (m < m_floor) {
      out.push_back("multiplicity " + std::to_string(m) + " below floor at " +
                    detail::where_xy(p));
    }
  }
  for (std::size_t y = 0; y < inst.y_count; ++y) {
    if (inst.f_y[y] > m_floor) out.push_back("f exceeds floor at " + detail::where_y(y));
  }
  return out;
}

// f(N_G(S)) >= g(S) for all S in X. Only meaningful when every edge has
// multiplicity at least m_floor and f(y) <= m_floor on Y.
inline CriterionReport check_hall_condition(const Instance& inst, Count m_floor,
                                            const ExhaustionLimit& limit = {}) {
  if (auto obstacles = hall_condition_obstacles(inst, m_floor); !obstacles.empty()) {
    std::string msg = "corollary not applicable";
    for (const auto& o : obstacles) msg += "; " + o;
    throw CorollaryNotApplicable(msg);
  }
  detail::require_within(inst.x_count, limit, "Hall condition");
  std::vector<char> hit(inst.y_count);
  const detail::Mask end = detail::Mask{1} << inst.x_count;
  for (detail::Mask s = 0; s < end; ++s) {
    std::fill(hit.begin(), hit.end(), 0);
    for (const auto& [p, m] : inst.multiplicity) {
      if (detail::has(s, p.x)) hit[p.y] = 1;
    }
    Count supply = 0;
    std::vector<std::size_t> nbrs;
    for (std::size_t y = 0; y < inst.y_count; ++y) {
      if (hit[y]) {
        supply += inst.f_y[y];
        nbrs.push_back(y);
      }
    }
    Count demand = 0;
    for (std::size_t x = 0; x < inst.x_count; ++x) {
      if (detail::has(s, x)) demand += inst.g_x[x];
    }
    if (demand > supply) {
      return detail::violated({"S", detail::members(s, inst.x_count), std::move(nbrs), supply, demand});
    }
  }
  return {};
}

}  // namespace bifactor

#endif  // BIFACTOR_CRITERIA_HPP
