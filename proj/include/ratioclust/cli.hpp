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

// Text formats and the JSON report behind the `ratioclust` command.
//
// Edge list: one "u v" pair per line, whitespace separated, '#' starts a
// comment, blank lines ignored. Tokens are arbitrary strings and get dense
// ids in order of first appearance.
//
// Weight file: one "v w" pair per line with w a positive number; every graph
// vertex must appear exactly once.

#ifndef RATIOCLUST_CLI_HPP_
#define RATIOCLUST_CLI_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "ratioclust/bounds.hpp"
#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"
#include "ratioclust/objectives.hpp"
#include "ratioclust/oracle.hpp"
#include "ratioclust/pipeline.hpp"

namespace ratioclust::cli {

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> names;                    // id -> token
  std::unordered_map<std::string, VertexId> ids;     // token -> id
};

namespace detail {

/// Splits a line into whitespace-separated tokens, dropping any '#' comment.
inline std::vector<std::string_view> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    fn(++line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace detail

/// Throws kParseError, kSelfLoop or kDuplicateEdge carrying the line number.
inline ParsedGraph parse_edge_list(std::string_view text) {
  ParsedGraph parsed;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = parsed.ids.try_emplace(std::string(token),
                                                 static_cast<VertexId>(parsed.names.size()));
    if (inserted) parsed.names.emplace_back(token);
    return it->second;
  };
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = detail::tokens_of(line);
    if (tokens.empty()) return;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected two vertex tokens", line_no);
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorCode::kSelfLoop, "line " + std::to_string(line_no) + ": self-loop",
                  line_no);
    }
    const VertexId u = intern(tokens[0]);
    const VertexId v = intern(tokens[1]);
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "line " + std::to_string(line_no) + ": duplicate edge", line_no);
    }
    edges.push_back({u, v});
  });
  parsed.graph = Graph::build(parsed.names.size(), edges);
  return parsed;
}

/// Canonical writer; parse_edge_list(write_edge_list(g)) reproduces g for
/// graphs without isolated vertices.
inline std::string write_edge_list(const ParsedGraph& g) {
  std::string out;
  for (const Edge& e : g.graph.edges()) {
    out += g.names[e.u];
    out += ' ';
    out += g.names[e.v];
    out += '\n';
  }
  return out;
}

/// Explicit weights from a weight file. Throws kParseError for malformed
/// lines, unknown or repeated vertices; kNonPositiveWeight; and
/// kMissingVertexWeight when a graph vertex has no entry.
inline WeightAssignment parse_weight_file(std::string_view text, const ParsedGraph& g) {
  const std::size_t n = g.graph.num_vertices();
  std::vector<double> weights(n, 0.0);
  std::vector<bool> given(n, false);
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = detail::tokens_of(line);
    if (tokens.empty()) return;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParseError, where + "expected \"vertex weight\"", line_no);
    }
    const auto it = g.ids.find(std::string(tokens[0]));
    if (it == g.ids.end()) {
      throw Error(ErrorCode::kParseError, where + "unknown vertex " + std::string(tokens[0]),
                  line_no);
    }
    if (given[it->second]) {
      throw Error(ErrorCode::kParseError, where + "repeated vertex " + std::string(tokens[0]),
                  line_no);
    }
    double value = 0.0;
    const char* first = tokens[1].data();
    const char* last = first + tokens[1].size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw Error(ErrorCode::kParseError, where + "malformed weight", line_no);
    }
    if (value <= 0.0) {
      throw Error(ErrorCode::kNonPositiveWeight, where + "weight must be positive", line_no);
    }
    weights[it->second] = value;
    given[it->second] = true;
  });
  for (std::size_t v = 0; v < n; ++v) {
    if (!given[v]) {
      throw Error(ErrorCode::kMissingVertexWeight, "no weight for vertex " + g.names[v]);
    }
  }
  return WeightAssignment::explicit_weights(std::move(weights));
}

/// `mode` is "deg", "unit", or "file" (then `file_text` is the weight file).
inline WeightAssignment parse_weights(std::string_view mode, const ParsedGraph& g,
                                      std::string_view file_text = {}) {
  if (mode == "deg") return WeightAssignment::degree(g.graph);
  if (mode == "unit") return WeightAssignment::unit(g.graph);
  if (mode == "file") return parse_weight_file(file_text, g);
  throw Error(ErrorCode::kInvalidArgument, "unknown weight mode " + std::string(mode));
}

struct RunOptions {
  std::string graph_path;
  std::string weights = "deg";  // deg | unit | path to a weight file
  double lambda = 0.0;
  std::string algo = "pipeline";  // pipeline | agglomerative | mst-greedy | oracle
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  bool bounds = false;
};

/// Runs one algorithm on an already parsed graph and builds the report.
inline nlohmann::json run_on(const ParsedGraph& g, const WeightAssignment& w,
                             const RunOptions& opts) {
  if (!std::isfinite(opts.lambda)) {
    throw Error(ErrorCode::kLambdaOutOfRange, "lambda must be finite");
  }
  const Graph& graph = g.graph;
  const auto start = std::chrono::steady_clock::now();
  Clustering clustering;
  if (opts.algo == "pipeline") {
    clustering = solve_best_of(graph, w, opts.lambda, opts.trials, opts.seed);
  } else if (opts.algo == "agglomerative") {
    clustering = greedy_agglomerative(graph, w, opts.lambda);
  } else if (opts.algo == "mst-greedy") {
    clustering = mst_greedy_clustering(graph);
  } else if (opts.algo == "oracle") {
    clustering = exact_opt(graph, w, opts.lambda).clustering;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm " + opts.algo);
  }
  clustering = Clustering::canonical(clustering.labels());
  std::optional<BoundCertificate> cert;
  if (opts.bounds) cert = mst_bound(graph);
  const double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json report;
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& members : clustering.clusters()) {
    nlohmann::json names = nlohmann::json::array();
    for (VertexId v : members) names.push_back(g.names[v]);
    clusters.push_back(std::move(names));
  }
  report["clusters"] = std::move(clusters);
  report["k"] = clustering.num_clusters();

  const bool degree_mode = w.mode() == WeightMode::kDegree;
  const bool volumes_defined = !graph.has_isolated_vertex() && graph.num_edges() > 0;
  nlohmann::json metrics;
  metrics["q_lambda"] = objective(graph, w, clustering, opts.lambda);
  metrics["q0"] = objective(graph, w, clustering, 0.0);
  metrics["nassoc"] = volumes_defined ? nlohmann::json(nassoc(graph, clustering)) : nullptr;
  metrics["density_sum"] = density_sum(graph, clustering);
  if (degree_mode && volumes_defined) {
    metrics["ncut"] = ncut(graph, clustering);
    metrics["modularity"] = modularity(graph, clustering);
    metrics["normalized_modularity"] = normalized_modularity(graph, clustering);
  } else {
    metrics["ncut"] = nullptr;
    metrics["modularity"] = nullptr;
    metrics["normalized_modularity"] = nullptr;
    report["warning"] = degree_mode
                            ? "ncut, modularity and normalized_modularity need at least one edge"
                            : "ncut, modularity and normalized_modularity are reported only "
                              "under degree weights";
  }
  report["metrics"] = std::move(metrics);
  if (cert) {
    report["bounds"] = {{"M", cert->M}, {"lower", cert->lower}, {"upper", cert->upper}};
  }
  report["seed"] = opts.seed;
  report["algo"] = opts.algo;
  report["runtime_ms"] = runtime_ms;
  return report;
}

/// Loads the graph and weights named by opts and runs. Throws Error.
inline nlohmann::json run(const RunOptions& opts) {
  const ParsedGraph g = parse_edge_list(detail::read_file(opts.graph_path));
  WeightAssignment w = opts.weights == "deg" || opts.weights == "unit"
                           ? parse_weights(opts.weights, g)
                           : parse_weights("file", g, detail::read_file(opts.weights));
  return run_on(g, w, opts);
}

inline nlohmann::json error_json(const Error& e) {
  nlohmann::json err = {{"code", error_code_name(e.code())}, {"message", e.what()}};
  if (e.line()) err["line"] = *e.line();
  return {{"error", std::move(err)}};
}

/// Exit codes: 0 success, 1 input error, 2 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

}  // namespace ratioclust::cli

#endif  // RATIOCLUST_CLI_HPP_
