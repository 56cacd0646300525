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

// Randomized constant-factor approximation for Q^lambda_w, lambda in [0, 1].
//
//   1. bipartize G (random colouring, keep heavy-to-light cross edges);
//   2. solve CVWAP on the bipartite graph greedily;
//   3. lift each nonempty CVWAP cluster to a cluster of G;
//   4. complete with singletons;
//   5. for lambda > 0 return the better of that and the all-singleton
//      clustering.
//
// In expectation step 4 is within 1/168 of the Q^0 optimum and step 5 within
// 1/169 of the Q^lambda optimum. Runs in linear time for integer weights.

#ifndef RATIOCLUST_PIPELINE_HPP_
#define RATIOCLUST_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ratioclust/bipartize.hpp"
#include "ratioclust/cvwap.hpp"
#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"
#include "ratioclust/objectives.hpp"

namespace ratioclust {

/// Intermediate products of one Q^0 pipeline run.
struct PipelineTrace {
  BipartiteInstance bipartite;
  CvwapInstance instance;
  Assignment assignment;
  PartialClustering partial;  // restricted partial clustering on G's ids
  Clustering clustering;
};

inline PipelineTrace solve_q0_traced(const Graph& g, const WeightAssignment& w, Rng& rng) {
  w.check_matches(g);
  PipelineTrace trace;
  trace.bipartite = bipartize(g, w, rng);
  trace.instance = CvwapInstance::from_bipartite(trace.bipartite);
  trace.assignment = greedy_cvwap(trace.instance);
  trace.partial = to_partial_clustering(trace.instance, trace.assignment);
  trace.clustering = extend_partial(trace.partial);
  return trace;
}

inline Clustering solve_q0(const Graph& g, const WeightAssignment& w, Rng& rng) {
  return solve_q0_traced(g, w, rng).clustering;
}

inline Clustering solve_q0(const Graph& g, const WeightAssignment& w, std::uint64_t seed) {
  Rng rng(seed);
  return solve_q0(g, w, rng);
}

/// Throws kLambdaOutOfRange unless 0 <= lambda <= 1.
inline Clustering solve_qlambda(const Graph& g, const WeightAssignment& w, double lambda,
                                Rng& rng) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::kLambdaOutOfRange, "lambda must lie in [0, 1]");
  }
  Clustering candidate = solve_q0(g, w, rng);
  if (lambda == 0.0) return candidate;
  Clustering singletons = Clustering::singletons(g.num_vertices());
  if (objective(g, w, singletons, lambda) > objective(g, w, candidate, lambda)) {
    return singletons;
  }
  return candidate;
}

inline Clustering solve_qlambda(const Graph& g, const WeightAssignment& w, double lambda,
                                std::uint64_t seed) {
  Rng rng(seed);
  return solve_qlambda(g, w, lambda, rng);
}

/// Seed of trial i in solve_best_of. Trial 0 reuses the base seed.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return seed + static_cast<std::uint64_t>(trial);
}

/// Best of `trials` independent solve_qlambda runs; ties go to the lowest
/// trial index. Throws kInvalidTrials when trials = 0.
inline Clustering solve_best_of(const Graph& g, const WeightAssignment& w, double lambda,
                                std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kInvalidTrials, "trials must be at least 1");
  Clustering best = solve_qlambda(g, w, lambda, trial_seed(seed, 0));
  double best_value = objective(g, w, best, lambda);
  for (std::size_t i = 1; i < trials; ++i) {
    Clustering c = solve_qlambda(g, w, lambda, trial_seed(seed, i));
    const double value = objective(g, w, c, lambda);
    if (value > best_value) {
      best = std::move(c);
      best_value = value;
    }
  }
  return best;
}

/// Greedy agglomerative baseline: starting from singletons, repeatedly merge
/// the adjacent pair of clusters whose union increases Q^lambda_w the most,
/// until no merge helps. Equal gains go to the smallest (id, id) pair; the
/// merged cluster keeps the smaller id.
inline Clustering greedy_agglomerative(const Graph& g, const WeightAssignment& w, double lambda) {
  w.check_matches(g);
  const std::size_t n = g.num_vertices();
  std::vector<ClusterId> parent(n);
  std::vector<double> weight(n);
  std::vector<std::int64_t> internal(n, 0);
  std::vector<std::uint64_t> version(n, 0);
  std::vector<bool> alive(n, true);
  std::vector<std::unordered_map<ClusterId, std::int64_t>> links(n);
  for (std::size_t v = 0; v < n; ++v) {
    parent[v] = static_cast<ClusterId>(v);
    weight[v] = w[static_cast<VertexId>(v)];
  }
  for (const Edge& e : g.edges()) {
    ++links[e.u][e.v];
    ++links[e.v][e.u];
  }

  auto quality = [&](std::int64_t edges, double wt) { return 2.0 * static_cast<double>(edges) / wt; };
  auto gain = [&](ClusterId a, ClusterId b, std::int64_t between) {
    return quality(internal[a] + internal[b] + between, weight[a] + weight[b]) -
           quality(internal[a], weight[a]) - quality(internal[b], weight[b]) - lambda;
  };

  struct Candidate {
    double gain;
    ClusterId a;  // a < b
    ClusterId b;
    std::uint64_t version_a;
    std::uint64_t version_b;
  };
  auto worse = [](const Candidate& x, const Candidate& y) {
    if (x.gain != y.gain) return x.gain < y.gain;
    return std::tie(x.a, x.b) > std::tie(y.a, y.b);
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(worse)> heap(worse);
  auto push = [&](ClusterId a, ClusterId b, std::int64_t between) {
    if (a > b) std::swap(a, b);
    const double delta = gain(a, b, between);
    if (delta > 0.0) heap.push({delta, a, b, version[a], version[b]});
  };
  for (const Edge& e : g.edges()) push(e.u, e.v, 1);

  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (!alive[top.a] || !alive[top.b] || version[top.a] != top.version_a ||
        version[top.b] != top.version_b) {
      continue;
    }
    const ClusterId keep = top.a;
    const ClusterId gone = top.b;
    const std::int64_t between = links[keep][gone];
    internal[keep] += internal[gone] + between;
    weight[keep] += weight[gone];
    alive[gone] = false;
    parent[gone] = keep;
    ++version[keep];
    links[keep].erase(gone);
    links[gone].erase(keep);
    for (const auto& [other, count] : links[gone]) {
      links[keep][other] += count;
      auto& back = links[other];
      back.erase(gone);
      back[keep] += count;
    }
    links[gone].clear();
    for (const auto& [other, count] : links[keep]) push(keep, other, count);
  }

  std::vector<ClusterId> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    ClusterId root = static_cast<ClusterId>(v);
    while (parent[root] != root) root = parent[root];
    labels[v] = root;
  }
  return Clustering::canonical(labels);
}

}  // namespace ratioclust

#endif  // RATIOCLUST_PIPELINE_HPP_
