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

#include "ratioclust/bipartize.hpp"

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "ratioclust/oracle.hpp"
#include "test_support.hpp"

namespace ratioclust {
namespace {

using testing::TestRng;

double three_sigma(double p, std::size_t trials) {
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

void ExpectStructurallyValid(const Graph& g, const WeightAssignment& w,
                             const BipartiteInstance& h) {
  ASSERT_EQ(h.side.size(), g.num_vertices());
  ASSERT_EQ(h.kept_edges.size(), h.kept_ids.size());
  std::set<std::pair<VertexId, VertexId>> origin;
  for (const Edge& e : g.edges()) origin.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (std::size_t i = 0; i < h.kept_edges.size(); ++i) {
    const Edge& e = h.kept_edges[i];
    EXPECT_EQ(h.side[e.u], Side::kS);
    EXPECT_EQ(h.side[e.v], Side::kT);
    EXPECT_GE(w[e.u], w[e.v]);
    EXPECT_TRUE(origin.count({std::min(e.u, e.v), std::max(e.u, e.v)}));
    const Edge& src = g.edge(h.kept_ids[i]);
    EXPECT_TRUE((src.u == e.u && src.v == e.v) || (src.u == e.v && src.v == e.u));
  }
}

TEST(RandomStreamTest, GeneratorIsStandardMt19937_64) {
  // The C++ standard pins the 10000th output of a default-constructed engine.
  Rng rng;
  rng.discard(9999);
  EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(BipartizeTest, FollowsCoinContract) {
  const Graph g = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const auto w = WeightAssignment::unit(g);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xDEADBEEFULL}) {
    Rng manual(seed);
    std::vector<bool> colour(6);
    for (auto&& c : colour) c = (manual() >> 63) != 0;
    const bool s_colour = (manual() >> 63) != 0;
    const BipartiteInstance h = bipartize(g, w, seed);
    for (std::size_t v = 0; v < 6; ++v) {
      EXPECT_EQ(h.side[v], colour[v] == s_colour ? Side::kS : Side::kT);
    }
  }
}

TEST(BipartizeTest, DeterministicPerSeedAndValid) {
  TestRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 20;
    const Graph g = testing::random_graph(n, 0.4, rng);
    const auto w = WeightAssignment::explicit_integers(testing::random_int_weights(n, 1, 4, rng));
    const BipartiteInstance a = bipartize(g, w, static_cast<std::uint64_t>(trial));
    const BipartiteInstance b = bipartize(g, w, static_cast<std::uint64_t>(trial));
    EXPECT_EQ(a, b);
    ExpectStructurallyValid(g, w, a);
  }
}

TEST(BipartizeTest, SingleEdgeTieKeptHalfTheTime) {
  const Graph g = Graph::build(2, {{0, 1}});
  const auto w = WeightAssignment::unit(g);
  std::size_t kept = 0;
  constexpr std::size_t kSeeds = 10000;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const BipartiteInstance h = bipartize(g, w, seed);
    kept += h.kept_edges.size();
    EXPECT_EQ(h.kept_edges.size() == 1, h.side[0] != h.side[1]);
  }
  EXPECT_NEAR(static_cast<double>(kept) / kSeeds, 0.5, 0.02);
}

TEST(BipartizeTest, TriangleExpectedKeptEdges) {
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto w = WeightAssignment::degree(g);
  std::size_t kept = 0;
  constexpr std::size_t kSeeds = 10000;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) kept += bipartize(g, w, seed).kept_edges.size();
  EXPECT_NEAR(static_cast<double>(kept) / kSeeds, 1.5, 0.05);
}

TEST(KeepAuditTest, DistinctAndEqualWeights) {
  // Edge 0: weights 1 vs 3 (kept only when the heavy end is S); edge 1: 3 vs 3.
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}});
  const auto w = WeightAssignment::explicit_weights({1.0, 3.0, 3.0});
  Rng rng(2024);
  constexpr std::size_t kTrials = 20000;
  const auto freq = keep_probability_audit(g, w, kTrials, rng);
  ASSERT_EQ(freq.size(), 2u);
  EXPECT_NEAR(freq[0], 0.25, three_sigma(0.25, kTrials));
  EXPECT_NEAR(freq[1], 0.5, three_sigma(0.5, kTrials));
}

TEST(KeepAuditTest, EveryEdgeAtLeastAQuarter) {
  TestRng gen(29);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = testing::random_connected_graph(8, 0.4, gen);
    const auto w = WeightAssignment::explicit_integers(testing::random_int_weights(8, 1, 4, gen));
    Rng rng(static_cast<std::uint64_t>(trial));
    constexpr std::size_t kTrials = 4000;
    for (double f : keep_probability_audit(g, w, kTrials, rng)) {
      EXPECT_GE(f, 0.25 - three_sigma(0.25, kTrials));
    }
  }
}

TEST(KeepAuditTest, ZeroTrialsRejected) {
  const Graph g = Graph::build(2, {{0, 1}});
  Rng rng(1);
  try {
    keep_probability_audit(g, WeightAssignment::unit(g), 0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTrials);
  }
}

// E[Q^0_w(Opt_H)] >= Q^0_w(Opt_G) / 4, estimated over seeds with exact optima.
TEST(BipartizeTest, OptimumPreservedInExpectation) {
  TestRng gen(31);
  for (int trial = 0; trial < 3; ++trial) {
    const std::size_t n = 5 + trial;
    const Graph g = testing::random_connected_graph(n, 0.4, gen);
    const auto w = WeightAssignment::explicit_integers(testing::random_int_weights(n, 1, 4, gen));
    const double opt_g = exact_opt(g, w, 0.0).value;
    std::vector<double> samples;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const BipartiteInstance h = bipartize(g, w, seed);
      samples.push_back(exact_opt(h.as_graph(), w, 0.0).value);
    }
    const auto stats = testing::sample_stats(samples);
    EXPECT_GE(stats.mean, opt_g / 4.0 - 3.0 * stats.std_error);
  }
}

}  // namespace
}  // namespace ratioclust
