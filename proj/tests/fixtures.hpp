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

// Shared instances and slow reference implementations for the test suites.
// The references deliberately avoid the library's code paths: they work on
// std::set and full enumeration only.

#ifndef BIFACTOR_TESTS_FIXTURES_HPP
#define BIFACTOR_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "bifactor/generator.hpp"
#include "bifactor/instance.hpp"

namespace bifactor::testing {

inline Instance make(std::size_t nx, std::size_t ny,
                     std::initializer_list<std::pair<VertexPair, Count>> edges,
                     std::vector<Count> g_x, std::vector<Count> f_x, std::vector<Count> f_y) {
  Instance inst;
  inst.x_count = nx;
  inst.y_count = ny;
  for (const auto& [p, m] : edges) inst.multiplicity.emplace(p, m);
  inst.g_x = std::move(g_x);
  inst.f_x = std::move(f_x);
  inst.f_y = std::move(f_y);
  return inst;
}

// X={0}, Y={0}, one simple edge, all bounds 1.
inline Instance single_edge() { return make(1, 1, {{{0, 0}, 1}}, {1}, {1}, {1}); }

// X={0,1}, Y={0}: both x need one edge into the single y of capacity 1.
inline Instance two_x_one_y() {
  return make(2, 1, {{{0, 0}, 1}, {{1, 0}, 1}}, {1, 1}, {1, 1}, {1});
}

// X={0}, Y={0}, m=3, g=2, f_x=3, f_y=2.
inline Instance triple_edge() { return make(1, 1, {{{0, 0}, 3}}, {2}, {3}, {2}); }

inline std::vector<std::size_t> to_vec(const std::set<std::size_t>& s) { return {s.begin(), s.end()}; }

// Deficiency of (A, B) computed straight from the definition.
inline Count reference_deficiency(const Instance& inst, const std::set<std::size_t>& a,
                                  const std::set<std::size_t>& b) {
  Count demand = 0;
  for (std::size_t x : a) {
    Count outside = 0;
    for (std::size_t y = 0; y < inst.y_count; ++y) {
      if (!b.count(y)) outside += inst.m(x, y);
    }
    demand += std::max<Count>(0, inst.g_x[x] - outside);
  }
  Count fb = 0;
  for (std::size_t y : b) fb += inst.f_y[y];
  return demand - fb;
}

// Every assignment 0 <= c <= m, no pruning, in lexicographic edge order.
inline void enumerate_assignments(const Instance& inst,
                                  const std::function<bool(const Factor&)>& visit) {
  std::vector<std::pair<VertexPair, Count>> edges(inst.multiplicity.begin(), inst.multiplicity.end());
  std::vector<Count> c(edges.size(), 0);
  for (;;) {
    Factor f;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (c[i] > 0) f.chosen.emplace(edges[i].first, c[i]);
    }
    if (!visit(f)) return;
    // Odometer with the last edge least significant.
    std::size_t i = edges.size();
    while (i > 0) {
      --i;
      if (c[i] < edges[i].second) {
        ++c[i];
        break;
      }
      c[i] = 0;
      if (i == 0) return;
    }
    if (edges.empty()) return;
  }
}

inline bool satisfies(const Instance& inst, const Factor& f, const std::vector<Count>& g_y) {
  std::vector<Count> dx(inst.x_count, 0), dy(inst.y_count, 0);
  for (const auto& [p, c] : f.chosen) {
    dx[p.x] += c;
    dy[p.y] += c;
  }
  for (std::size_t x = 0; x < inst.x_count; ++x) {
    if (dx[x] < inst.g_x[x] || dx[x] > inst.f_x[x]) return false;
  }
  for (std::size_t y = 0; y < inst.y_count; ++y) {
    if (dy[y] < g_y[y] || dy[y] > inst.f_y[y]) return false;
  }
  return true;
}

// Unpruned reference: first satisfying assignment, or nullopt.
inline std::optional<Factor> reference_factor(const Instance& inst, std::vector<Count> g_y = {}) {
  if (g_y.empty()) g_y.assign(inst.y_count, 0);
  std::optional<Factor> found;
  enumerate_assignments(inst, [&](const Factor& f) {
    if (satisfies(inst, f, g_y)) {
      found = f;
      return false;
    }
    return true;
  });
  return found;
}

inline std::uint64_t reference_count(const Instance& inst, std::vector<Count> g_y = {}) {
  if (g_y.empty()) g_y.assign(inst.y_count, 0);
  std::uint64_t n = 0;
  enumerate_assignments(inst, [&](const Factor& f) {
    if (satisfies(inst, f, g_y)) ++n;
    return true;
  });
  return n;
}

// A small random instance; the draw sizes are chosen from the seed too.
inline Instance micro_instance(std::uint64_t seed, std::size_t max_side = 3, Count max_mult = 2) {
  SplitMix64 pick(seed ^ 0xA5A5A5A5ULL);
  GenParams p;
  p.x_count = 1 + pick.below(max_side);
  p.y_count = 1 + pick.below(max_side);
  static constexpr Probability kProbs[] = {{3, 10}, {6, 10}, {9, 10}};
  p.edge_prob = kProbs[pick.below(3)];
  p.max_mult = 1 + static_cast<Count>(pick.below(static_cast<std::uint64_t>(max_mult)));
  p.g_max = static_cast<Count>(pick.below(3));
  p.f_slack = static_cast<Count>(pick.below(3));
  p.seed = seed;
  return gen_random(p);
}

}  // namespace bifactor::testing

#endif  // BIFACTOR_TESTS_FIXTURES_HPP
