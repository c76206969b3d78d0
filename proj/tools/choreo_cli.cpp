// Copyright 2026 The Choreo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "choreo/document.hpp"
#include "choreo/error.hpp"
#include "choreo/generator.hpp"
#include "choreo/report.hpp"
#include "json.hpp"

namespace {

using choreo::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kCycleDetected:
    case ErrorCode::kDuplicateVertexId:
    case ErrorCode::kNegativeCost:
    case ErrorCode::kNoPathExists:
    case ErrorCode::kInvalidParameters:
      return kExitValidation;
    case ErrorCode::kNoAffordablePath:
    case ErrorCode::kNoStableImputation:
    case ErrorCode::kMissingAnnouncedPrices:
    case ErrorCode::kUnavoidableVertex:
      return kExitPrecondition;
    case ErrorCode::kTooManyPlayers:
      return kExitCap;
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
  }
  return kExitUsage;
}

int report_error(const choreo::Error& e) {
  nlohmann::ordered_json out;
  out["errors"] = nlohmann::ordered_json::array();
  for (const auto& d : e.diagnostics()) {
    out["errors"].push_back(
        {{"code", choreo::error_code_name(d.code)}, {"message", d.message}});
  }
  std::cerr << out.dump(2) << "\n";
  return exit_code_for(e.code());
}

int report_failure(const std::string& message) {
  nlohmann::ordered_json out;
  out["errors"] = nlohmann::ordered_json::array();
  out["errors"].push_back({{"code", "IoError"}, {"message", message}});
  std::cerr << out.dump(2) << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pricing analysis for service choreography games"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check a game document");
  validate->add_option("file", file, "Game document (JSON)")->required();

  choreo::AnalyzeOptions opt;
  std::string tolerance = "0";
  auto* analyze = app.add_subcommand("analyze", "Run analyses on a game document");
  analyze->add_option("file", file, "Game document (JSON)")->required();
  analyze->add_flag("--values", opt.values, "Characteristic function table");
  analyze->add_flag("--core", opt.core, "Core emptiness");
  analyze->add_flag("--imputation", opt.imputation, "Stable imputation");
  analyze->add_flag("--threshold", opt.threshold, "Minimal stable budget");
  analyze->add_flag("--vcg", opt.vcg, "VCG payments and equivalence check");
  analyze->add_flag("--detect", opt.detect, "Alliance detection from announced prices");
  analyze->add_option("--tolerance", tolerance, "Detection tolerance (exact rational)");
  analyze->add_flag("--oracle", opt.oracle, "Bargaining-set check of the stable imputation");

  choreo::GeneratorParams gen;
  std::string budget;
  std::string output;
  auto* generate = app.add_subcommand("generate", "Emit a random layered game document");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--vertices", gen.vertices, "Number of services");
  generate->add_option("--layers", gen.layers, "Number of layers");
  auto* players = generate->add_option("--players", "Number of owners")->type_name("UINT");
  generate->add_option("--ratio", gen.ratio, "Owners per service, in (0, 1]");
  generate->add_flag("--per-vertex", gen.per_vertex, "One owner per service");
  generate->add_option("--min-cost", gen.min_cost, "Smallest service cost");
  generate->add_option("--max-cost", gen.max_cost, "Largest service cost");
  generate->add_option("--budget", budget, "Budget (defaults to the total cost)");
  generate->add_option("-o,--output", output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) {
      choreo::GameInstance instance = choreo::load_game_file(file);
      nlohmann::ordered_json out;
      out["valid"] = true;
      out["summary"] = choreo::validation_summary(instance);
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
    if (*analyze) {
      auto tol = choreo::parse_rational(tolerance);
      if (!tol) {
        throw choreo::Error(ErrorCode::kInvalidArgument,
                            "tolerance '" + tolerance + "' is not a number");
      }
      opt.tolerance = *tol;
      opt.limits = choreo::EnumerationLimits::from_environment();
      choreo::GameInstance instance = choreo::load_game_file(file);
      std::cout << choreo::analyze_report(instance, opt);
      return kExitOk;
    }
    if (*generate) {
      if (*players) gen.players = players->as<std::size_t>();
      if (!budget.empty()) {
        auto b = choreo::parse_rational(budget);
        if (!b) {
          throw choreo::Error(ErrorCode::kInvalidParameters,
                              "budget '" + budget + "' is not a number");
        }
        gen.budget = *b;
      }
      std::string doc = choreo::emit_game(choreo::generate_instance(gen));
      if (output.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!(out << doc)) return report_failure("cannot write '" + output + "'");
      }
      return kExitOk;
    }
  } catch (const choreo::Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    return report_failure(e.what());
  }
  return kExitUsage;
}
