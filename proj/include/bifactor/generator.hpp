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

// Seeded random instances. The stream is SplitMix64 and every draw is fully
// specified so that other implementations can reproduce a corpus exactly:
//
//   next():      state += 0x9E3779B97F4A7C15
//                z = state
//                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                return z ^ (z >> 31)
//   below(n):    high 64 bits of the 128-bit product next() * n
//   in(lo, hi):  lo + below(hi - lo + 1)
//
// Draw order: for each x in 0..|X|-1, for each y in 0..|Y|-1 one presence
// draw `below(den) < num`, followed by a multiplicity draw `in(lo, max_mult)`
// only when present; then g_x for all x; then the f_x slack for all x; then
// f_y for all y.

#ifndef BIFACTOR_GENERATOR_HPP
#define BIFACTOR_GENERATOR_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bifactor/instance.hpp"

namespace bifactor {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  std::int64_t in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// Probability num/den with 0 <= num <= den.
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Accepts "p/q", a decimal such as "0.3", or an integer 0 or 1.
  static Probability parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("bad probability '" + std::string(text) + "'"); };
    auto read = [&](std::string_view s) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw fail();
      return v;
    };
    Probability p;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      p = {read(text.substr(0, slash)), read(text.substr(slash + 1))};
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
      const auto frac = text.substr(dot + 1);
      if (frac.size() > 18) throw fail();
      p.den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
      p.num = read(text.substr(0, dot).empty() ? "0" : text.substr(0, dot)) * p.den +
              (frac.empty() ? 0 : read(frac));
    } else {
      p = {read(text), 1};
    }
    if (p.den == 0 || p.num > p.den) throw fail();
    return p;
  }
};

struct GenParams {
  std::size_t x_count = 4;
  std::size_t y_count = 4;
  Probability edge_prob{1, 2};
  Count max_mult = 1;
  Count g_max = 1;
  Count f_slack = 1;
  std::optional<Count> min_mult_floor;
  std::uint64_t seed = 0;
};

inline void validate_params(const GenParams& p) {
  if (p.x_count == 0 || p.y_count == 0) throw std::invalid_argument("gen: vertex counts must be positive");
  if (p.edge_prob.den == 0 || p.edge_prob.num > p.edge_prob.den) {
    throw std::invalid_argument("gen: edge probability outside [0,1]");
  }
  if (p.max_mult < 1) throw std::invalid_argument("gen: max_mult must be positive");
  if (p.g_max < 0 || p.f_slack < 0) throw std::invalid_argument("gen: g_max and f_slack must be non-negative");
  if (p.g_max > (kCountMax >> 32) || p.f_slack > (kCountMax >> 32) || p.max_mult > (kCountMax >> 32)) {
    throw std::invalid_argument("gen: bounds too large");
  }
  if (p.min_mult_floor) {
    if (*p.min_mult_floor < 1) throw std::invalid_argument("gen: min_mult_floor must be positive");
    if (*p.min_mult_floor > p.max_mult) throw std::invalid_argument("gen: min_mult_floor exceeds max_mult");
  }
}

inline Instance gen_random(const GenParams& p) {
  validate_params(p);
  SplitMix64 rng(p.seed);
  Instance inst;
  inst.x_count = p.x_count;
  inst.y_count = p.y_count;
  const Count mult_lo = p.min_mult_floor.value_or(1);
  for (std::size_t x = 0; x < p.x_count; ++x) {
    for (std::size_t y = 0; y < p.y_count; ++y) {
      if (rng.below(p.edge_prob.den) < p.edge_prob.num) {
        inst.multiplicity.emplace(VertexPair{x, y}, rng.in(mult_lo, p.max_mult));
      }
    }
  }
  inst.g_x.resize(p.x_count);
  inst.f_x.resize(p.x_count);
  inst.f_y.resize(p.y_count);
  for (auto& g : inst.g_x) g = rng.in(0, p.g_max);
  for (std::size_t x = 0; x < p.x_count; ++x) inst.f_x[x] = inst.g_x[x] + rng.in(0, p.f_slack);
  for (auto& f : inst.f_y) {
    f = rng.in(0, p.g_max + p.f_slack);
    if (p.min_mult_floor) f = std::min(f, *p.min_mult_floor);
  }
  return inst;
}

}  // namespace bifactor

#endif  // BIFACTOR_GENERATOR_HPP
