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

#include "ratioclust/pipeline.hpp"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "ratioclust/oracle.hpp"
#include "test_support.hpp"

namespace ratioclust {
namespace {

using testing::TestRng;

template <typename Fn>
void ExpectErrorCode(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

Graph Triangle() { return Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(PipelineTest, EdgelessGraphGivesSingletons) {
  const Graph g = Graph::build(4, std::vector<Edge>{});
  const auto w = WeightAssignment::unit(g);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(solve_q0(g, w, seed), Clustering::singletons(4));
    EXPECT_DOUBLE_EQ(objective(g, w, solve_qlambda(g, w, 1.0, seed), 1.0), 4.0);
  }
}

TEST(PipelineTest, TriangleMeanAboveGuarantee) {
  const Graph g = Triangle();
  const auto w = WeightAssignment::degree(g);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) total += objective(g, w, solve_q0(g, w, seed), 0.0);
  EXPECT_GE(total / 1000.0, 1.0 / 168.0);
}

TEST(PipelineTest, StarClustersCentreWithLeaves) {
  // K_{1,3}, degree weights: the centre (weight 3) can host every leaf.
  const Graph g = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto w = WeightAssignment::degree(g);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PipelineTrace trace = [&] {
      Rng rng(seed);
      return solve_q0_traced(g, w, rng);
    }();
    const Clustering& c = trace.clustering;
    if (trace.bipartite.side[0] == Side::kT) {
      // A light leaf cannot host the centre.
      EXPECT_EQ(c, Clustering::singletons(4));
      continue;
    }
    for (VertexId leaf = 1; leaf < 4; ++leaf) {
      const bool opposite = trace.bipartite.side[leaf] == Side::kT;
      EXPECT_EQ(c.cluster_of(leaf) == c.cluster_of(0), opposite);
    }
  }
}

TEST(PipelineTest, TraceIsConsistent) {
  TestRng gen(61);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected_graph(6 + trial % 20, 0.2, gen);
    const auto w = WeightAssignment::degree(g);
    Rng rng(static_cast<std::uint64_t>(trial));
    const PipelineTrace t = solve_q0_traced(g, w, rng);
    EXPECT_TRUE(is_feasible(t.instance, t.assignment));
    EXPECT_EQ(t.clustering, extend_partial(t.partial));
    EXPECT_EQ(t.clustering, solve_q0(g, w, static_cast<std::uint64_t>(trial)));
    EXPECT_NEAR(objective(g, w, t.clustering, 0.0), objective(g, w, t.partial, 0.0), 1e-12);
  }
}

// v(C) <= Q^0_w(C) <= 3 v(C) on the bipartite graph, exactly.
TEST(PipelineTest, ValueSandwichOnBipartiteGraph) {
  TestRng gen(67);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + trial % 12;
    const Graph g = testing::random_connected_graph(n, 0.3, gen);
    const auto w = WeightAssignment::explicit_integers(testing::random_int_weights(n, 1, 5, gen));
    Rng rng(static_cast<std::uint64_t>(trial));
    const PipelineTrace t = solve_q0_traced(g, w, rng);
    const Rational v = cvwap_value_exact(t.instance, t.assignment);
    const Rational q = objective_exact(t.instance.as_graph(), w, t.partial, Rational(0));
    EXPECT_LE(v, q);
    EXPECT_LE(q, 3 * v);
    // On G the restricted clusters only gain internal edges.
    EXPECT_LE(q, objective_exact(g, w, t.partial, Rational(0)));
  }
}

TEST(SolveQLambdaTest, TriangleAtOnePrefersSingletons) {
  const Graph g = Triangle();
  const auto w = WeightAssignment::degree(g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(solve_qlambda(g, w, 1.0, seed), Clustering::singletons(3));
    EXPECT_EQ(solve_qlambda(g, w, 0.0, seed), solve_q0(g, w, seed));
  }
}

TEST(SolveQLambdaTest, NeverBelowSingletonFloor) {
  TestRng gen(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 15;
    const Graph g = testing::random_connected_graph(n, 0.3, gen);
    const auto w = WeightAssignment::degree(g);
    for (double lambda : {0.25, 0.5, 1.0}) {
      const Clustering c = solve_qlambda(g, w, lambda, static_cast<std::uint64_t>(trial));
      EXPECT_GE(objective(g, w, c, lambda), lambda * static_cast<double>(n) - 1e-12);
    }
  }
}

TEST(SolveQLambdaTest, LambdaOutOfRange) {
  const Graph g = Triangle();
  const auto w = WeightAssignment::degree(g);
  for (double lambda : {-0.1, 1.5, std::nan("")}) {
    ExpectErrorCode(ErrorCode::kLambdaOutOfRange, [&] { solve_qlambda(g, w, lambda, 0); });
  }
}

TEST(SolveBestOfTest, SingleTrialIsPlainRun) {
  TestRng gen(73);
  const Graph g = testing::random_connected_graph(30, 0.1, gen);
  const auto w = WeightAssignment::degree(g);
  for (std::uint64_t seed : {0ULL, 7ULL, 1000ULL}) {
    EXPECT_EQ(solve_best_of(g, w, 0.5, 1, seed), solve_qlambda(g, w, 0.5, seed));
  }
  static_assert(trial_seed(10, 3) == 13);
}

TEST(SolveBestOfTest, MonotoneInTrials) {
  TestRng gen(79);
  const Graph g = testing::random_connected_graph(25, 0.15, gen);
  const auto w = WeightAssignment::degree(g);
  double previous = -1.0;
  for (std::size_t trials = 1; trials <= 12; ++trials) {
    const double value = objective(g, w, solve_best_of(g, w, 0.0, trials, 5), 0.0);
    EXPECT_GE(value, previous);
    previous = value;
  }
}

TEST(SolveBestOfTest, TriangleUsuallyFindsAnEdge) {
  // A run clusters an edge whenever the colouring is not monochromatic
  // (probability 3/4), so 50 runs all miss with probability 4^-50.
  const Graph g = Triangle();
  const auto w = WeightAssignment::degree(g);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (objective(g, w, solve_best_of(g, w, 0.0, 50, seed * 1000), 0.0) >= 0.5) ++hits;
  }
  EXPECT_EQ(hits, 100);
}

TEST(SolveBestOfTest, ZeroTrialsRejected) {
  const Graph g = Triangle();
  ExpectErrorCode(ErrorCode::kInvalidTrials,
                  [&] { solve_best_of(g, WeightAssignment::degree(g), 0.0, 0, 0); });
}

TEST(AgglomerativeTest, Examples) {
  const Graph tri = Triangle();
  EXPECT_EQ(greedy_agglomerative(tri, WeightAssignment::degree(tri), 1.0),
            Clustering::singletons(3));
  EXPECT_EQ(greedy_agglomerative(tri, WeightAssignment::degree(tri), 0.0),
            Clustering::single_cluster(3));

  const Graph two = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto w = WeightAssignment::degree(two);
  const Clustering c = greedy_agglomerative(two, w, 0.0);
  EXPECT_DOUBLE_EQ(objective(two, w, c, 0.0), 2.0);
  EXPECT_EQ(c.num_clusters(), 2u);

  const Graph empty = Graph::build(3, std::vector<Edge>{});
  EXPECT_EQ(greedy_agglomerative(empty, WeightAssignment::unit(empty), 0.0),
            Clustering::singletons(3));
}

// Reference: quadratic rescan of every adjacent cluster pair.
Clustering NaiveAgglomerative(const Graph& g, const WeightAssignment& w, double lambda) {
  const std::size_t n = g.num_vertices();
  std::vector<ClusterId> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = static_cast<ClusterId>(v);
  auto q = [&](ClusterId c) {
    double weight = 0.0;
    double edges = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (label[v] == c) weight += w[static_cast<VertexId>(v)];
    }
    for (const Edge& e : g.edges()) {
      if (label[e.u] == c && label[e.v] == c) edges += 1.0;
    }
    return 2.0 * edges / weight;
  };
  while (true) {
    double best = 0.0;
    ClusterId ba = 0;
    ClusterId bb = 0;
    bool found = false;
    for (const Edge& e : g.edges()) {
      ClusterId a = label[e.u];
      ClusterId b = label[e.v];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      const double before = q(a) + q(b);
      std::vector<ClusterId> saved = label;
      for (auto& c : label) {
        if (c == b) c = a;
      }
      const double gain = q(a) - before - lambda;
      label = saved;
      if (gain > 0.0 && (!found || gain > best || (gain == best && std::tie(a, b) < std::tie(ba, bb)))) {
        best = gain;
        ba = a;
        bb = b;
        found = true;
      }
    }
    if (!found) break;
    for (auto& c : label) {
      if (c == bb) c = ba;
    }
  }
  return Clustering::canonical(label);
}

TEST(AgglomerativeTest, MatchesNaiveRescan) {
  TestRng gen(83);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 12;
    const Graph g = testing::random_graph(n, 0.35, gen);
    const auto w = WeightAssignment::explicit_integers(testing::random_int_weights(n, 1, 4, gen));
    for (double lambda : {0.0, 0.2}) {
      const Clustering fast = greedy_agglomerative(g, w, lambda);
      const Clustering slow = NaiveAgglomerative(g, w, lambda);
      EXPECT_NEAR(objective(g, w, fast, lambda), objective(g, w, slow, lambda), 1e-9)
          << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace ratioclust
