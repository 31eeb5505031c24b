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

// Command-line front end. Exit status: 0 feasible / holds / verified,
// 1 infeasible / fails / rejected, 2 input or usage error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bifactor/bifactor.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bifactor::InstanceDocument load(const std::string& path) {
  auto doc = bifactor::parse_instance(slurp(path));
  bifactor::validate_instance(doc.instance);
  if (doc.g_y) {
    for (std::size_t y = 0; y < doc.g_y->size(); ++y) {
      if ((*doc.g_y)[y] < 0 || (*doc.g_y)[y] > doc.instance.f_y[y]) {
        throw bifactor::InvalidInstance({"gy out of [0, f] at y=" + std::to_string(y)});
      }
    }
  }
  return doc;
}

bifactor::ExhaustionLimit limit_from_env() {
  bifactor::ExhaustionLimit limit;
  if (const char* env = std::getenv("BIFACTOR_EXHAUSTION_LIMIT")) {
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), limit.max_vertices);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("BIFACTOR_EXHAUSTION_LIMIT must be a non-negative integer");
    }
  }
  return limit;
}

std::optional<std::span<const bifactor::Count>> lower_y(const bifactor::InstanceDocument& doc) {
  if (!doc.g_y) return std::nullopt;
  return std::span<const bifactor::Count>(*doc.g_y);
}

int emit(const bifactor::Document& d, bool positive) {
  std::cout << bifactor::render(d);
  return positive ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-bounded factors of bipartite multigraphs"};
  app.require_subcommand(1);

  std::string input;
  std::string result_input;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("instance", input, "Instance file (default: stdin)");

  bool greedy = false;
  auto* solve = app.add_subcommand("solve", "Construct a factor or an infeasibility certificate");
  solve->add_option("instance", input, "Instance file (default: stdin)");
  solve->add_flag("--greedy-start", greedy, "Start from a greedily saturated factor");

  std::string criterion;
  bifactor::Count m_floor = 1;
  auto* check = app.add_subcommand("check", "Evaluate a feasibility criterion exhaustively");
  check->add_option("instance", input, "Instance file (default: stdin)");
  check->add_option("--criterion", criterion, "Criterion to evaluate")
      ->required()
      ->check(CLI::IsMember({"new", "cymer-kano", "heinrich", "ore", "hall"}));
  check->add_option("--m-floor", m_floor, "Multiplicity floor for the hall criterion");

  bool count = false;
  std::uint64_t budget = bifactor::OracleBudget{}.max_configurations;
  auto* oracle = app.add_subcommand("oracle", "Brute-force search for a factor");
  oracle->add_option("instance", input, "Instance file (default: stdin)");
  oracle->add_flag("--count", count, "Count all factors instead");
  oracle->add_option("--budget", budget, "Maximum number of configurations");

  bifactor::GenParams params;
  std::string edge_prob = "1/2";
  std::optional<bifactor::Count> floor;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--x", params.x_count, "|X|")->required();
  gen->add_option("--y", params.y_count, "|Y|")->required();
  gen->add_option("--edge-prob", edge_prob, "Edge probability, e.g. 0.3 or 3/10");
  gen->add_option("--max-mult", params.max_mult, "Largest edge multiplicity");
  gen->add_option("--g-max", params.g_max, "Largest lower bound on X");
  gen->add_option("--f-slack", params.f_slack, "Largest f - g gap on X");
  gen->add_option("--min-mult-floor", floor, "Smallest multiplicity; clamps f on Y");
  gen->add_option("--seed", params.seed, "Random seed")->required();

  std::string instance_path;
  auto* verify_factor = app.add_subcommand("verify-factor", "Check a factor document");
  verify_factor->add_option("instance", instance_path, "Instance file")->required();
  verify_factor->add_option("result", result_input, "Factor document (default: stdin)");

  auto* verify_cert = app.add_subcommand("verify-cert", "Check a certificate document");
  verify_cert->add_option("instance", instance_path, "Instance file")->required();
  verify_cert->add_option("result", result_input, "Certificate document (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (validate->parsed()) {
      auto doc = bifactor::parse_instance(slurp(input));
      const auto problems = bifactor::instance_problems(doc.instance);
      return emit(bifactor::validation_document(problems), problems.empty());
    }
    if (solve->parsed()) {
      auto doc = load(input);
      if (doc.g_y && std::any_of(doc.g_y->begin(), doc.g_y->end(), [](auto v) { return v != 0; })) {
        throw UsageError("solve handles zero lower bounds on Y only; gy has nonzero entries");
      }
      const auto outcome = bifactor::solve(doc.instance, {.greedy_start = greedy});
      return emit(bifactor::outcome_document(outcome),
                  std::holds_alternative<bifactor::Factor>(outcome));
    }
    if (check->parsed()) {
      auto doc = load(input);
      const auto limit = limit_from_env();
      bifactor::CriterionReport report;
      if (criterion == "new") {
        report = bifactor::check_new_criterion(doc.instance, limit);
      } else if (criterion == "cymer-kano") {
        report = bifactor::check_cymer_kano(doc.instance, lower_y(doc), limit);
      } else if (criterion == "heinrich") {
        report = bifactor::check_heinrich(doc.instance, lower_y(doc), limit);
      } else if (criterion == "ore") {
        report = bifactor::check_ore_f_factor(doc.instance, limit);
      } else {
        report = bifactor::check_hall_condition(doc.instance, m_floor, limit);
      }
      return emit(bifactor::criterion_document(criterion, report), report.holds);
    }
    if (oracle->parsed()) {
      auto doc = load(input);
      const bifactor::OracleBudget b{budget};
      if (count) {
        const auto n = bifactor::count_factors(doc.instance, lower_y(doc), b);
        return emit(bifactor::oracle_count_document(n), n > 0);
      }
      const auto found = bifactor::brute_force_factor(doc.instance, lower_y(doc), b);
      return emit(bifactor::oracle_document(found), found.has_value());
    }
    if (gen->parsed()) {
      params.edge_prob = bifactor::Probability::parse(edge_prob);
      params.min_mult_floor = floor;
      std::cout << bifactor::emit_instance(bifactor::gen_random(params));
      return kOk;
    }
    if (verify_factor->parsed() || verify_cert->parsed()) {
      if ((instance_path.empty() || instance_path == "-") &&
          (result_input.empty() || result_input == "-")) {
        throw UsageError("instance and result cannot both come from stdin");
      }
      auto doc = load(instance_path);
      const auto outcome = bifactor::parse_outcome(slurp(result_input));
      if (verify_factor->parsed()) {
        const auto* f = std::get_if<bifactor::Factor>(&outcome);
        if (!f) throw UsageError("verify-factor expects a factor document");
        const auto report = bifactor::verify_factor(doc.instance, *f, lower_y(doc));
        return emit(bifactor::factor_check_document(report), report.valid());
      }
      const auto* c = std::get_if<bifactor::Certificate>(&outcome);
      if (!c) throw UsageError("verify-cert expects a certificate document");
      const auto report = bifactor::verify_certificate(doc.instance, *c);
      return emit(bifactor::certificate_check_document(*c, report), report.valid());
    }
  } catch (const bifactor::ParseError& e) {
    std::cerr << "bifactor: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const bifactor::InvalidInstance& e) {
    std::cerr << "bifactor: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "bifactor: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
