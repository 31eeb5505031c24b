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

// Constructive decision procedure for (g,f)-factors with g = 0 on Y.
//
// The solver keeps a (0,f)-factor F and its deficiency
//   delta = sum over x of (g(x) monus deg_F(x)),
// and repeatedly looks for a "nice" alternating path: it starts at a deficient
// X-vertex, leaves X along an edge with spare multiplicity (c < m), returns to
// X along an edge of F (c >= 1), and ends either at a Y-vertex below its upper
// bound or at a non-deficient X-vertex above its lower bound. Flipping such a
// path lowers delta by exactly one and keeps F a (0,f)-factor.
//
// When no nice path exists, the set W of vertices reachable by nice paths
// yields A = W n X and B = W n Y, and
//   sum over A of (g(x) monus e_G(x, Y\B)) - f(B) = delta >= 1,
// so (A, B) certifies that no factor exists.

#ifndef BIFACTOR_SOLVER_HPP
#define BIFACTOR_SOLVER_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bifactor/instance.hpp"

namespace bifactor {

// Edges of an instance in (x,y) order with per-vertex incidence lists.
struct EdgeIndex {
  struct Edge {
    std::size_t x;
    std::size_t y;
    Count capacity;
  };

  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> at_x;  // edge ids, ascending y
  std::vector<std::vector<std::size_t>> at_y;  // edge ids, ascending x

  EdgeIndex() = default;
  explicit EdgeIndex(const Instance& inst) : at_x(inst.x_count), at_y(inst.y_count) {
    edges.reserve(inst.multiplicity.size());
    for (const auto& [p, m] : inst.multiplicity) {
      at_x[p.x].push_back(edges.size());
      at_y[p.y].push_back(edges.size());
      edges.push_back({p.x, p.y, m});
    }
  }
};

struct Vertex {
  Side side;
  std::size_t index;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

enum class PathEnd {
  kUnsaturatedY,  // ends at y with deg_F(y) < f(y)
  kSurplusX,      // ends at x outside R with deg_F(x) > g(x)
};

struct NicePath {
  std::vector<Vertex> vertices;     // vertices[0] is deficient; sides alternate
  std::vector<std::size_t> edges;   // edges[i] joins vertices[i] and vertices[i+1]
  PathEnd end = PathEnd::kUnsaturatedY;
};

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

// Working state of the augmentation loop. `chosen`, `deg_x` and `deg_y` always
// describe a (0,f)-factor; `deficient` is R = {x : g(x) > deg_F(x)} in
// ascending order. The reachability labels are W only after an exhausted
// search.
struct AugmentState {
  EdgeIndex index;
  std::vector<Count> chosen;  // c per edge id
  std::vector<Count> deg_x;
  std::vector<Count> deg_y;
  std::vector<std::size_t> deficient;
  Count delta = 0;

  std::vector<char> reached_x;
  std::vector<char> reached_y;
  std::vector<std::size_t> parent_x;  // edge used to enter x, kNoEdge for roots
  std::vector<std::size_t> parent_y;

  // The empty factor.
  static AugmentState empty(const Instance& inst) {
    AugmentState s;
    s.index = EdgeIndex(inst);
    s.chosen.assign(s.index.edges.size(), 0);
    s.deg_x.assign(inst.x_count, 0);
    s.deg_y.assign(inst.y_count, 0);
    s.refresh_deficiency(inst);
    return s;
  }

  // Saturates edges in (x,y) order up to the remaining f-capacity of both ends.
  static AugmentState greedy(const Instance& inst) {
    AugmentState s = empty(inst);
    for (std::size_t e = 0; e < s.index.edges.size(); ++e) {
      const auto& edge = s.index.edges[e];
      const Count add = std::min({edge.capacity, inst.f_x[edge.x] - s.deg_x[edge.x],
                                  inst.f_y[edge.y] - s.deg_y[edge.y]});
      if (add <= 0) continue;
      s.chosen[e] += add;
      s.deg_x[edge.x] += add;
      s.deg_y[edge.y] += add;
    }
    s.refresh_deficiency(inst);
    return s;
  }

  void refresh_deficiency(const Instance& inst) {
    deficient.clear();
    delta = 0;
    for (std::size_t x = 0; x < inst.x_count; ++x) {
      if (inst.g_x[x] > deg_x[x]) {
        deficient.push_back(x);
        delta += inst.g_x[x] - deg_x[x];
      }
    }
  }

  bool is_deficient(std::size_t x) const {
    return std::binary_search(deficient.begin(), deficient.end(), x);
  }

  Factor factor() const {
    Factor f;
    for (std::size_t e = 0; e < chosen.size(); ++e) {
      if (chosen[e] > 0) f.chosen.emplace(VertexPair{index.edges[e].x, index.edges[e].y}, chosen[e]);
    }
    return f;
  }
};

namespace detail {

inline NicePath trace_back(const AugmentState& s, Vertex end, PathEnd kind) {
  NicePath path;
  path.end = kind;
  Vertex v = end;
  path.vertices.push_back(v);
  for (;;) {
    const std::size_t e = v.side == Side::kX ? s.parent_x[v.index] : s.parent_y[v.index];
    if (e == kNoEdge) break;
    const auto& edge = s.index.edges[e];
    v = v.side == Side::kX ? Vertex{Side::kY, edge.y} : Vertex{Side::kX, edge.x};
    path.edges.push_back(e);
    path.vertices.push_back(v);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

}  // namespace detail

// Breadth-first search for a nice path, seeded with all of R at once. Roots
// and neighbours are scanned in ascending index order. Returns nullopt when no
// nice path exists; the labels in `state` then describe W.
inline std::optional<NicePath> find_nice_path(const Instance& inst, AugmentState& state) {
  if (state.deficient.empty()) {
    throw std::logic_error("find_nice_path: no deficient vertex to start from");
  }
  state.reached_x.assign(inst.x_count, 0);
  state.reached_y.assign(inst.y_count, 0);
  state.parent_x.assign(inst.x_count, kNoEdge);
  state.parent_y.assign(inst.y_count, kNoEdge);

  std::deque<Vertex> queue;
  for (std::size_t r : state.deficient) {
    state.reached_x[r] = 1;
    queue.push_back({Side::kX, r});
  }
  const auto& edges = state.index.edges;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v.side == Side::kX) {
      for (std::size_t e : state.index.at_x[v.index]) {
        const std::size_t y = edges[e].y;
        if (state.reached_y[y] || state.chosen[e] >= edges[e].capacity) continue;
        state.reached_y[y] = 1;
        state.parent_y[y] = e;
        if (state.deg_y[y] < inst.f_y[y]) {
          return detail::trace_back(state, {Side::kY, y}, PathEnd::kUnsaturatedY);
        }
        queue.push_back({Side::kY, y});
      }
    } else {
      for (std::size_t e : state.index.at_y[v.index]) {
        const std::size_t x = edges[e].x;
        if (state.reached_x[x] || state.chosen[e] == 0) continue;
        state.reached_x[x] = 1;
        state.parent_x[x] = e;
        // Every deficient vertex is a root, so x is outside R here.
        if (state.deg_x[x] > inst.g_x[x]) {
          return detail::trace_back(state, {Side::kX, x}, PathEnd::kSurplusX);
        }
        queue.push_back({Side::kX, x});
      }
    }
  }
  return std::nullopt;
}

// Replaces F by F xor P: +1 on edges leaving X, -1 on edges entering X.
inline void flip_path(const Instance& inst, AugmentState& state, const NicePath& path) {
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const std::size_t e = path.edges[i];
    const auto& edge = state.index.edges[e];
    const Count step = path.vertices[i].side == Side::kX ? 1 : -1;
    state.chosen[e] += step;
    state.deg_x[edge.x] += step;
    state.deg_y[edge.y] += step;
  }
  const std::size_t root = path.vertices.front().index;
  if (state.deg_x[root] >= inst.g_x[root]) {
    auto it = std::lower_bound(state.deficient.begin(), state.deficient.end(), root);
    if (it != state.deficient.end() && *it == root) state.deficient.erase(it);
  }
  --state.delta;
}

// Numeric record of the structure W induces after an exhausted search. The
// certificate chain is
//   demand = deficit_r + factor_ab,  deficit_r > 0,
//   factor_ab = degree_b = f_b,
// where demand is the left side of the violated inequality.
struct ExhaustionAudit {
  std::vector<std::size_t> a_set;
  std::vector<std::size_t> b_set;
  Count demand = 0;     // sum over A of g(x) monus e_G(x, Y\B)
  Count deficit_r = 0;  // sum over R of g(x) - deg_F(x)
  Count factor_ab = 0;  // e_F(A, B)
  Count graph_ab = 0;   // e_G(A, B)
  Count degree_b = 0;   // sum over B of deg_F(y)
  Count f_b = 0;        // f(B)
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks, on the current labels, that:
//  (a) every F-edge into B starts in A;
//  (b) every edge from A with spare multiplicity ends in B;
//  (c) e_G(x, Y\B) = deg_F(x) - e_F(x, B) for x in A;
//  (d) deg_F(y) = f(y) for y in B;
//  (e) deg_F(x) = g(x) for x in A \ R;
//  (f) e_G(x, Y\B) <= g(x) for x in A;
// and that the certificate chain holds with exact integers.
inline ExhaustionAudit audit_exhaustion(const Instance& inst, const AugmentState& state) {
  ExhaustionAudit audit;
  auto fail = [&](std::string what) { audit.failures.push_back(std::move(what)); };
  for (std::size_t x = 0; x < inst.x_count; ++x) {
    if (state.reached_x[x]) audit.a_set.push_back(x);
  }
  for (std::size_t y = 0; y < inst.y_count; ++y) {
    if (state.reached_y[y]) audit.b_set.push_back(y);
  }
  for (std::size_t r : state.deficient) {
    if (!state.reached_x[r]) fail("R not contained in A at x=" + std::to_string(r));
  }

  std::vector<Count> outside_b(inst.x_count, 0);  // e_G(x, Y\B)
  std::vector<Count> factor_into_b(inst.x_count, 0);
  for (std::size_t e = 0; e < state.index.edges.size(); ++e) {
    const auto& edge = state.index.edges[e];
    const bool in_a = state.reached_x[edge.x];
    const bool in_b = state.reached_y[edge.y];
    const std::string at = detail::where_xy({edge.x, edge.y});
    if (state.chosen[e] >= 1 && in_b && !in_a) fail("(a) factor edge into B from outside A at " + at);
    if (state.chosen[e] < edge.capacity && in_a && !in_b) fail("(b) spare edge from A leaves B at " + at);
    if (in_b) {
      factor_into_b[edge.x] += state.chosen[e];
      if (in_a) {
        audit.factor_ab += state.chosen[e];
        audit.graph_ab += edge.capacity;
      }
    } else {
      outside_b[edge.x] += edge.capacity;
    }
  }
  for (std::size_t x : audit.a_set) {
    const std::string at = detail::where_x(x);
    if (outside_b[x] != state.deg_x[x] - factor_into_b[x]) fail("(c) at " + at);
    const bool in_r = state.is_deficient(x);
    if (!in_r && state.deg_x[x] != inst.g_x[x]) fail("(e) deg_F != g at " + at);
    if (outside_b[x] > inst.g_x[x]) fail("(f) e_G(x, Y\\B) > g at " + at);
    audit.demand += monus(inst.g_x[x], outside_b[x]);
    if (in_r) audit.deficit_r += inst.g_x[x] - state.deg_x[x];
  }
  for (std::size_t y : audit.b_set) {
    if (state.deg_y[y] != inst.f_y[y]) fail("(d) deg_F != f at " + detail::where_y(y));
    audit.degree_b += state.deg_y[y];
    audit.f_b += inst.f_y[y];
  }
  if (audit.demand != audit.deficit_r + audit.factor_ab) fail("chain: demand != deficit_r + e_F(A,B)");
  if (audit.deficit_r <= 0) fail("chain: deficit over R is not positive");
  if (audit.deficit_r != state.delta) fail("chain: deficit over R differs from delta");
  if (audit.factor_ab != audit.degree_b) fail("chain: e_F(A,B) != sum of deg_F over B");
  if (audit.degree_b != audit.f_b) fail("chain: sum of deg_F over B != f(B)");
  return audit;
}

inline Certificate certificate_from(const Instance& inst, const ExhaustionAudit& audit) {
  if (!audit.ok()) {
    std::string msg = "certificate extraction: inconsistent exhausted state";
    for (const auto& f : audit.failures) msg += "; " + f;
    throw std::logic_error(msg);
  }
  Certificate cert{audit.a_set, audit.b_set, audit.demand - audit.f_b};
  const auto check = verify_certificate(inst, cert);
  if (!check.valid()) {
    throw std::logic_error("certificate extraction: recomputed deficiency " +
                           std::to_string(check.recomputed) + " does not certify");
  }
  return cert;
}

// Requires an exhausted search (labels describe W) and R nonempty.
inline Certificate extract_certificate(const Instance& inst, const AugmentState& state) {
  if (state.deficient.empty()) {
    throw std::logic_error("extract_certificate: no deficient vertex");
  }
  return certificate_from(inst, audit_exhaustion(inst, state));
}

struct SolveOptions {
  bool greedy_start = false;
};

// Observers may implement any of
//   on_start(const AugmentState&)
//   on_flip(const NicePath&, const AugmentState&, Count delta_before)
//   on_exhausted(const AugmentState&, const ExhaustionAudit&)
struct NoObserver {};

// Decides the instance and returns either a factor or a certificate. The
// instance must already be valid (see validate_instance).
template <class Observer = NoObserver>
SolveOutcome solve(const Instance& inst, const SolveOptions& options = {},
                   Observer&& observer = Observer{}) {
  AugmentState state =
      options.greedy_start ? AugmentState::greedy(inst) : AugmentState::empty(inst);
  if constexpr (requires { observer.on_start(state); }) observer.on_start(state);
  while (!state.deficient.empty()) {
    auto path = find_nice_path(inst, state);
    if (!path) {
      auto audit = audit_exhaustion(inst, state);
      if constexpr (requires { observer.on_exhausted(state, audit); }) {
        observer.on_exhausted(state, audit);
      }
      return certificate_from(inst, audit);
    }
    const Count before = state.delta;
    flip_path(inst, state, *path);
    if constexpr (requires { observer.on_flip(*path, state, before); }) {
      observer.on_flip(*path, state, before);
    }
  }
  return state.factor();
}

}  // namespace bifactor

#endif  // BIFACTOR_SOLVER_HPP
