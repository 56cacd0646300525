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

// Randomized reduction to a bipartite graph whose kept edges all point from a
// heavier (or equal) S-vertex to a lighter T-vertex.
//
// Random stream contract (bit-exact across runs and platforms):
//   * the generator is std::mt19937_64 seeded with a 64-bit value;
//   * a coin is the top bit of one 64-bit draw;
//   * one coin per vertex in vertex-id order gives its colour, then one more
//     coin picks which colour is S.

#ifndef RATIOCLUST_BIPARTIZE_HPP_
#define RATIOCLUST_BIPARTIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"

namespace ratioclust {

using Rng = std::mt19937_64;

inline bool draw_coin(Rng& rng) { return (rng() >> 63) != 0; }

enum class Side : std::uint8_t { kS, kT };

/// Bipartite subgraph H of an origin graph. Holds non-owning pointers to the
/// origin graph and weights, which must outlive it.
struct BipartiteInstance {
  std::vector<Side> side;
  std::vector<Edge> kept_edges;     // (u, v) = (s, t)
  std::vector<EdgeId> kept_ids;     // origin edge index of each kept edge
  const Graph* origin = nullptr;
  const WeightAssignment* weights = nullptr;

  /// H as a standalone graph on the origin's vertex set.
  Graph as_graph() const { return Graph::build(side.size(), kept_edges); }

  friend bool operator==(const BipartiteInstance& a, const BipartiteInstance& b) {
    return a.side == b.side && a.kept_edges == b.kept_edges;
  }
};

inline BipartiteInstance bipartize(const Graph& g, const WeightAssignment& w, Rng& rng) {
  w.check_matches(g);
  const std::size_t n = g.num_vertices();
  std::vector<bool> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = draw_coin(rng);
  const bool s_colour = draw_coin(rng);

  BipartiteInstance h;
  h.origin = &g;
  h.weights = &w;
  h.side.resize(n);
  for (std::size_t v = 0; v < n; ++v) h.side[v] = colour[v] == s_colour ? Side::kS : Side::kT;

  const bool exact = w.integral();
  for (const Edge& e : g.edges()) {
    if (h.side[e.u] == h.side[e.v]) continue;
    const VertexId s = h.side[e.u] == Side::kS ? e.u : e.v;
    const VertexId t = s == e.u ? e.v : e.u;
    const bool heavier = exact ? w.integers()[s] >= w.integers()[t] : w[s] >= w[t];
    if (heavier) {
      h.kept_edges.push_back({s, t});
      h.kept_ids.push_back(static_cast<EdgeId>(&e - g.edges().data()));
    }
  }
  return h;
}

inline BipartiteInstance bipartize(const Graph& g, const WeightAssignment& w,
                                   std::uint64_t seed) {
  Rng rng(seed);
  return bipartize(g, w, rng);
}

/// Empirical per-edge keep frequency over `trials` consecutive draws from rng.
inline std::vector<double> keep_probability_audit(const Graph& g, const WeightAssignment& w,
                                                  std::size_t trials, Rng& rng) {
  if (trials == 0) throw Error(ErrorCode::kInvalidTrials, "trials must be at least 1");
  std::vector<std::size_t> kept(g.num_edges(), 0);
  for (std::size_t i = 0; i < trials; ++i) {
    const BipartiteInstance h = bipartize(g, w, rng);
    for (EdgeId e : h.kept_ids) ++kept[e];
  }
  std::vector<double> freq(kept.size());
  for (std::size_t e = 0; e < kept.size(); ++e) {
    freq[e] = static_cast<double>(kept[e]) / static_cast<double>(trials);
  }
  return freq;
}

}  // namespace ratioclust

#endif  // RATIOCLUST_BIPARTIZE_HPP_
