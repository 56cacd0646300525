// Copyright 2026 The ratioclust Authors
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

// ratioclust: cluster an edge-list graph and print a JSON report.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratioclust/cli.hpp"

namespace {

int emit(const nlohmann::json& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "stdout") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  namespace rc = ratioclust;
  rc::cli::RunOptions opts;
  std::string output = "stdout";

  CLI::App app{"Ratio-objective graph clustering"};
  app.add_option("--graph", opts.graph_path, "Edge-list file")->required();
  app.add_option("--weights", opts.weights, "deg | unit | PATH to a weight file")
      ->capture_default_str();
  app.add_option("--lambda", opts.lambda, "Per-cluster reward lambda")->capture_default_str();
  app.add_option("--algo", opts.algo, "Algorithm")
      ->check(CLI::IsMember({"pipeline", "agglomerative", "mst-greedy", "oracle"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", opts.trials, "Independent pipeline runs (best is kept)")
      ->capture_default_str();
  app.add_flag("--bounds", opts.bounds, "Emit the spanning-forest bound certificate");
  app.add_option("--output", output, "Output path or 'stdout'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const rc::Error err(rc::ErrorCode::kInvalidArgument, e.what());
    emit(rc::cli::error_json(err), "stdout");
    return rc::cli::kExitInputError;
  }

  try {
    const nlohmann::json report = rc::cli::run(opts);
    return emit(report, output) == 0 ? rc::cli::kExitOk : rc::cli::kExitInputError;
  } catch (const rc::Error& e) {
    emit(rc::cli::error_json(e), output);
    return rc::cli::kExitInputError;
  } catch (const std::exception& e) {
    emit({{"error", {{"code", "Internal"}, {"message", e.what()}}}}, output);
    return rc::cli::kExitInternalError;
  }
}
