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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bifactor/bifactor.hpp"

namespace {

using namespace bifactor;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Corpus for criteria 1, 2: |X|,|Y| <= 4, max_mult <= 2, edge_prob in
// {0.3, 0.6, 0.9}, g_max <= 2, f_slack <= 2; three seeds per shape.
std::vector<Instance> small_corpus() {
  std::vector<Instance> out;
  const Probability probs[] = {{3, 10}, {6, 10}, {9, 10}};
  std::uint64_t seed = 1000;
  for (std::size_t nx = 1; nx <= 4; ++nx)
    for (std::size_t ny = 1; ny <= 4; ++ny)
      for (Count mult = 1; mult <= 2; ++mult)
        for (const auto& prob : probs)
          for (Count g_max = 0; g_max <= 2; ++g_max)
            for (Count slack = 0; slack <= 2; ++slack)
              for (int rep = 0; rep < 3; ++rep) {
                out.push_back(gen_random({nx, ny, prob, mult, g_max, slack, std::nullopt, seed++}));
              }
  return out;
}

// Corpus for criterion 3: multiplicity floor m in {1, 2, 3}, f_y clamped to m.
std::vector<std::pair<Instance, Count>> floor_corpus() {
  std::vector<std::pair<Instance, Count>> out;
  for (Count floor = 1; floor <= 3; ++floor) {
    for (std::uint64_t i = 0; i < 400; ++i) {
      SplitMix64 pick(i * 31 + static_cast<std::uint64_t>(floor));
      GenParams p;
      p.x_count = 1 + pick.below(5);
      p.y_count = 1 + pick.below(5);
      p.edge_prob = {1 + pick.below(9), 10};
      p.max_mult = floor + static_cast<Count>(pick.below(2));
      p.g_max = 1 + static_cast<Count>(pick.below(3));
      p.f_slack = static_cast<Count>(pick.below(3));
      p.min_mult_floor = floor;
      p.seed = 50'000 + i * 3 + static_cast<std::uint64_t>(floor);
      out.emplace_back(gen_random(p), floor);
    }
  }
  return out;
}

// Corpus for criterion 4: simple bigraphs with g = f = 1 on X and f = 1 on Y.
std::vector<Instance> marriage_corpus() {
  std::vector<Instance> out;
  for (std::uint64_t i = 0; i < 600; ++i) {
    SplitMix64 pick(i + 7);
    GenParams p;
    p.x_count = 1 + pick.below(6);
    p.y_count = 1 + pick.below(6);
    p.edge_prob = {1 + pick.below(9), 10};
    p.max_mult = 1;
    p.g_max = 1;
    p.f_slack = 0;
    p.seed = 90'000 + i;
    Instance inst = gen_random(p);
    inst.g_x.assign(inst.x_count, 1);
    inst.f_x.assign(inst.x_count, 1);
    inst.f_y.assign(inst.y_count, 1);
    out.push_back(std::move(inst));
  }
  return out;
}

// Brute-force maximum matching size by trying every Y partner for each x.
std::size_t max_matching(const Instance& inst, std::size_t x, std::vector<char>& used) {
  if (x == inst.x_count) return 0;
  std::size_t best = max_matching(inst, x + 1, used);
  for (std::size_t y = 0; y < inst.y_count; ++y) {
    if (used[y] || inst.m(x, y) == 0) continue;
    used[y] = 1;
    best = std::max(best, 1 + max_matching(inst, x + 1, used));
    used[y] = 0;
  }
  return best;
}

// Counts every failed proof-internal assertion during a solve.
struct ProofAudit {
  const Instance* inst = nullptr;
  std::size_t flips = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }

  void on_flip(const NicePath&, const AugmentState& s, Count before) {
    ++flips;
    if (s.delta != before - 1) fail("delta did not drop by exactly one");
    for (std::size_t e = 0; e < s.index.edges.size(); ++e) {
      if (s.chosen[e] < 0 || s.chosen[e] > s.index.edges[e].capacity) fail("0 <= c <= m broken");
    }
    std::vector<Count> dx(inst->x_count, 0), dy(inst->y_count, 0);
    for (std::size_t e = 0; e < s.index.edges.size(); ++e) {
      dx[s.index.edges[e].x] += s.chosen[e];
      dy[s.index.edges[e].y] += s.chosen[e];
    }
    if (dx != s.deg_x || dy != s.deg_y) fail("degree bookkeeping drifted");
    for (std::size_t x = 0; x < inst->x_count; ++x) {
      if (dx[x] > inst->f_x[x]) fail("deg_F(x) > f(x)");
    }
    for (std::size_t y = 0; y < inst->y_count; ++y) {
      if (dy[y] > inst->f_y[y]) fail("deg_F(y) > f(y)");
    }
    Count delta = 0;
    std::vector<std::size_t> r;
    for (std::size_t x = 0; x < inst->x_count; ++x) {
      if (inst->g_x[x] > dx[x]) {
        r.push_back(x);
        delta += inst->g_x[x] - dx[x];
      }
    }
    if (r != s.deficient || delta != s.delta) fail("R or delta out of date");
  }

  void on_exhausted(const AugmentState&, const ExhaustionAudit& a) {
    for (const auto& f : a.failures) fail(f);
    if (a.demand != a.deficit_r + a.factor_ab) fail("sum over A != sum over R + e_F(A,B)");
    if (a.deficit_r <= 0) fail("sum over R not positive");
    if (a.factor_ab != a.degree_b) fail("e_F(A,B) != sum deg_F over B");
    if (a.degree_b != a.f_b) fail("sum deg_F over B != f(B)");
  }
};

struct Criterion {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

}  // namespace

int main() {
  std::vector<Criterion> results;
  const auto corpus = small_corpus();
  const auto floors = floor_corpus();
  const auto marriages = marriage_corpus();
  ProofAudit proof_total;
  std::size_t proof_runs = 0;

  auto audited_solve = [&](const Instance& inst, SolveOptions options = {}) {
    ProofAudit audit;
    audit.inst = &inst;
    auto out = solve(inst, options, audit);
    ++proof_runs;
    Count g_total = 0;
    for (Count g : inst.g_x) g_total += g;
    if (static_cast<Count>(audit.flips) > g_total) audit.fail("more flips than g(X)");
    proof_total.flips += audit.flips;
    if (audit.failures > 0 && proof_total.failures == 0) proof_total.first_failure = audit.first_failure;
    proof_total.failures += audit.failures;
    return out;
  };

  // 1. Oracle equivalence.
  {
    const auto t0 = Clock::now();
    std::size_t mismatches = 0, bad_factors = 0, bad_certs = 0, feasible = 0;
    for (const auto& inst : corpus) {
      const auto out = audited_solve(inst);
      const auto oracle = brute_force_factor(inst, std::nullopt, OracleBudget{100'000'000});
      const bool is_factor = std::holds_alternative<Factor>(out);
      feasible += is_factor;
      if (is_factor != oracle.has_value()) ++mismatches;
      if (const auto* f = std::get_if<Factor>(&out)) {
        if (!verify_factor(inst, *f).valid()) ++bad_factors;
      } else if (!verify_certificate(inst, std::get<Certificate>(out)).valid()) {
        ++bad_certs;
      }
    }
    const double t = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu instances (%zu feasible), %zu mismatches, %zu bad factors, %zu bad certificates, %.2fs",
                  corpus.size(), feasible, mismatches, bad_factors, bad_certs, t);
    results.push_back({1, "oracle equivalence",
                       corpus.size() >= 2000 && mismatches == 0 && bad_factors == 0 &&
                           bad_certs == 0 && t < 60.0,
                       buf});
  }

  // 2. Criterion agreement with g_y = 0.
  {
    std::size_t disagreements = 0;
    for (const auto& inst : corpus) {
      const bool feasible = std::holds_alternative<Factor>(solve(inst));
      if (check_new_criterion(inst).holds != feasible) ++disagreements;
      if (check_cymer_kano(inst).holds != feasible) ++disagreements;
      if (check_heinrich(inst).holds != feasible) ++disagreements;
    }
    results.push_back({2, "criterion agreement (new, Cymer-Kano, Heinrich)", disagreements == 0,
                       std::to_string(corpus.size()) + " instances x 3 criteria, " +
                           std::to_string(disagreements) + " disagreements"});
  }

  // 3. Hall-type condition under a multiplicity floor.
  {
    std::size_t disagreements = 0, not_applicable = 0;
    for (const auto& [inst, floor] : floors) {
      const bool feasible = std::holds_alternative<Factor>(audited_solve(inst));
      try {
        if (check_hall_condition(inst, floor).holds != feasible) ++disagreements;
      } catch (const CorollaryNotApplicable&) {
        ++not_applicable;
      }
    }
    results.push_back({3, "multiplicity-floor Hall condition",
                       floors.size() >= 1000 && disagreements == 0 && not_applicable == 0,
                       std::to_string(floors.size()) + " instances (m in {1,2,3}), " +
                           std::to_string(disagreements) + " disagreements, " +
                           std::to_string(not_applicable) + " not applicable"});
  }

  // 4. Hall's marriage theorem.
  {
    std::size_t disagreements = 0, saturated = 0;
    for (const auto& inst : marriages) {
      std::vector<char> used(inst.y_count, 0);
      const bool saturates = max_matching(inst, 0, used) == inst.x_count;
      saturated += saturates;
      if (std::holds_alternative<Factor>(audited_solve(inst)) != saturates) ++disagreements;
    }
    results.push_back({4, "Hall's marriage specialization",
                       marriages.size() >= 500 && disagreements == 0,
                       std::to_string(marriages.size()) + " simple bigraphs (" +
                           std::to_string(saturated) + " X-saturating), " +
                           std::to_string(disagreements) + " disagreements"});
  }

  // 6. Performance smoke.
  {
    const Instance big = gen_random({1000, 1000, {1, 100}, 3, 2, 2, std::nullopt, 20261018});
    Count g_total = 0;
    for (Count g : big.g_x) g_total += g;
    std::size_t flips = 0;
    struct Counter {
      std::size_t* flips;
      void on_flip(const NicePath&, const AugmentState&, Count) { ++*flips; }
    };
    const auto t0 = Clock::now();
    const auto out = solve(big, {}, Counter{&flips});
    const double t = seconds_since(t0);
    const bool sound = std::holds_alternative<Factor>(out)
                           ? verify_factor(big, std::get<Factor>(out)).valid()
                           : verify_certificate(big, std::get<Certificate>(out)).valid();
    audited_solve(big);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%zu edges, %s, %zu augmentations <= g(X) = %lld, %.3fs",
                  big.multiplicity.size(),
                  std::holds_alternative<Factor>(out) ? "factor" : "certificate", flips,
                  static_cast<long long>(g_total), t);
    results.push_back({6, "performance smoke",
                       t < 5.0 && static_cast<Count>(flips) <= g_total && sound, buf});
  }

  // 5. Proof-internal invariants, collected over every audited solve above.
  // The greedy start reaches exhaustion from different factors.
  for (const auto& inst : corpus) audited_solve(inst, {.greedy_start = true});
  results.push_back({5, "proof-internal invariants", proof_total.failures == 0,
                     std::to_string(proof_runs) + " instrumented solves, " +
                         std::to_string(proof_total.flips) + " flips, " +
                         std::to_string(proof_total.failures) + " assertion failures" +
                         (proof_total.failures ? " (first: " + proof_total.first_failure + ")" : "")});

  // 7. Determinism and round-trip.
  {
    std::size_t gen_diffs = 0, round_trip_diffs = 0, solve_diffs = 0, total = 0;
    std::uint64_t seed = 1000;
    const Probability probs[] = {{3, 10}, {6, 10}, {9, 10}};
    for (std::size_t nx = 1; nx <= 4; ++nx)
      for (std::size_t ny = 1; ny <= 4; ++ny)
        for (Count mult = 1; mult <= 2; ++mult)
          for (const auto& prob : probs)
            for (Count g_max = 0; g_max <= 2; ++g_max)
              for (Count slack = 0; slack <= 2; ++slack)
                for (int rep = 0; rep < 3; ++rep) {
                  const GenParams p{nx, ny, prob, mult, g_max, slack, std::nullopt, seed++};
                  if (emit_instance(gen_random(p)) != emit_instance(gen_random(p))) ++gen_diffs;
                }
    auto round_trip = [&](const Instance& inst) {
      ++total;
      const auto text = emit_instance(inst);
      const auto back = parse_instance(text);
      if (back.instance != inst || emit_instance(back) != text) ++round_trip_diffs;
      if (render(outcome_document(solve(inst))) != render(outcome_document(solve(back.instance)))) {
        ++solve_diffs;
      }
    };
    for (const auto& inst : corpus) round_trip(inst);
    for (const auto& [inst, floor] : floors) round_trip(inst);
    for (const auto& inst : marriages) round_trip(inst);
    results.push_back({7, "determinism and round-trip",
                       gen_diffs == 0 && round_trip_diffs == 0 && solve_diffs == 0,
                       std::to_string(total) + " instances, " + std::to_string(gen_diffs) +
                           " generator diffs, " + std::to_string(round_trip_diffs) +
                           " round-trip diffs, " + std::to_string(solve_diffs) + " solve diffs"});
  }

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %d. %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
  return all ? 0 : 1;
}
