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

// Brute-force ground truth: enumerates multiplicity assignments 0 <= c <= m
// edge by edge in (x,y) order, counting each edge 0..m, so the first
// satisfying assignment found is the lexicographically first one.

#ifndef BIFACTOR_ORACLE_HPP
#define BIFACTOR_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bifactor/instance.hpp"

namespace bifactor {

struct OracleBudget {
  std::uint64_t max_configurations = 10'000'000;  // cap on the product of (m(e) + 1)
};

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Product of (m(e) + 1) over all edges, saturating just past `cap`.
inline std::uint64_t configuration_count(const Instance& inst, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const auto& [p, m] : inst.multiplicity) {
    const auto choices = static_cast<std::uint64_t>(m) + 1;
    if (total > cap / choices) return cap + 1;
    total *= choices;
  }
  return total;
}

namespace detail {

// Depth-first enumeration with bound pruning. A branch is cut as soon as an
// endpoint exceeds f or can no longer reach its lower bound with the edges
// still unassigned.
class FactorSearch {
 public:
  FactorSearch(const Instance& inst, std::optional<std::span<const Count>> g_y)
      : inst_(inst), deg_x_(inst.x_count, 0), deg_y_(inst.y_count, 0),
        spare_x_(inst.x_count, 0), spare_y_(inst.y_count, 0), g_y_(inst.y_count, 0) {
    if (g_y) {
      if (g_y->size() != inst.y_count) throw std::invalid_argument("g_y length does not match y_count");
      g_y_.assign(g_y->begin(), g_y->end());
    }
    for (const auto& [p, m] : inst.multiplicity) {
      edges_.push_back({p.x, p.y, m});
      spare_x_[p.x] += m;
      spare_y_[p.y] += m;
    }
    chosen_.assign(edges_.size(), 0);
  }

  template <class Visit>
  void run(Visit&& visit) {
    for (std::size_t x = 0; x < inst_.x_count; ++x) {
      if (!feasible_x(x)) return;
    }
    for (std::size_t y = 0; y < inst_.y_count; ++y) {
      if (!feasible_y(y)) return;
    }
    recurse(0, visit);
  }

  Factor current() const {
    Factor f;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (chosen_[i] > 0) f.chosen.emplace(VertexPair{edges_[i].x, edges_[i].y}, chosen_[i]);
    }
    return f;
  }

 private:
  struct Edge {
    std::size_t x;
    std::size_t y;
    Count m;
  };

  bool feasible_x(std::size_t x) const {
    return deg_x_[x] <= inst_.f_x[x] && deg_x_[x] + spare_x_[x] >= inst_.g_x[x];
  }
  bool feasible_y(std::size_t y) const {
    return deg_y_[y] <= inst_.f_y[y] && deg_y_[y] + spare_y_[y] >= g_y_[y];
  }

  // Returns false to stop the enumeration.
  template <class Visit>
  bool recurse(std::size_t i, Visit& visit) {
    if (i == edges_.size()) return visit(*this);
    const Edge& e = edges_[i];
    spare_x_[e.x] -= e.m;
    spare_y_[e.y] -= e.m;
    bool go_on = true;
    for (Count c = 0; c <= e.m && go_on; ++c) {
      chosen_[i] = c;
      deg_x_[e.x] += c;
      deg_y_[e.y] += c;
      if (feasible_x(e.x) && feasible_y(e.y)) go_on = recurse(i + 1, visit);
      deg_x_[e.x] -= c;
      deg_y_[e.y] -= c;
    }
    chosen_[i] = 0;
    spare_x_[e.x] += e.m;
    spare_y_[e.y] += e.m;
    return go_on;
  }

  const Instance& inst_;
  std::vector<Edge> edges_;
  std::vector<Count> chosen_;
  std::vector<Count> deg_x_, deg_y_;
  std::vector<Count> spare_x_, spare_y_;
  std::vector<Count> g_y_;
};

inline void require_budget(const Instance& inst, const OracleBudget& budget) {
  if (configuration_count(inst, budget.max_configurations) > budget.max_configurations) {
    throw BudgetExceeded("oracle: instance has more than " +
                         std::to_string(budget.max_configurations) + " configurations");
  }
}

}  // namespace detail

// Lexicographically first assignment with g <= deg_F <= f on both sides
// (lower bounds on Y are zero unless g_y is given), or nullopt.
inline std::optional<Factor> brute_force_factor(
    const Instance& inst, std::optional<std::span<const Count>> g_y = std::nullopt,
    const OracleBudget& budget = {}) {
  detail::require_budget(inst, budget);
  std::optional<Factor> found;
  detail::FactorSearch search(inst, g_y);
  search.run([&](const detail::FactorSearch& s) {
    found = s.current();
    return false;
  });
  return found;
}

inline std::uint64_t count_factors(const Instance& inst,
                                   std::optional<std::span<const Count>> g_y = std::nullopt,
                                   const OracleBudget& budget = {}) {
  detail::require_budget(inst, budget);
  std::uint64_t count = 0;
  detail::FactorSearch search(inst, g_y);
  search.run([&](const detail::FactorSearch&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace bifactor

#endif  // BIFACTOR_ORACLE_HPP
