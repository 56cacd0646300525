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

// Builds a small graph, clusters it with the randomized pipeline and the exact
// oracle, and prints both clusterings with their scores.

#include <cstdint>
#include <iostream>
#include <vector>

#include "ratioclust/ratioclust.hpp"

namespace {

void Print(const char* name, const ratioclust::Graph& g, const ratioclust::WeightAssignment& w,
           const ratioclust::Clustering& c, double lambda) {
  std::cout << name << ": Q = " << ratioclust::objective(g, w, c, lambda)
            << ", NCut = " << ratioclust::ncut(g, c) << ", clusters =";
  for (const auto& members : c.clusters()) {
    std::cout << " {";
    for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? " " : "") << members[i];
    std::cout << "}";
  }
  std::cout << "\n";
}

}  // namespace

int main() {
  using namespace ratioclust;
  // Two 4-cliques joined by one edge.
  std::vector<Edge> edges;
  for (VertexId base : {0u, 4u}) {
    for (VertexId u = 0; u < 4; ++u) {
      for (VertexId v = u + 1; v < 4; ++v) edges.push_back({base + u, base + v});
    }
  }
  edges.push_back({3, 4});
  const Graph g = Graph::build(8, edges);
  const auto w = WeightAssignment::degree(g);
  const double lambda = 0.1;

  Print("pipeline (best of 32)", g, w, solve_best_of(g, w, lambda, 32, 1), lambda);
  Print("agglomerative", g, w, greedy_agglomerative(g, w, lambda), lambda);
  Print("exact", g, w, exact_opt(g, w, lambda).clustering, lambda);

  const BoundCertificate cert = mst_bound(g);
  std::cout << "Q^0 optimum lies in [" << cert.lower << ", " << cert.upper << "]\n";
  return 0;
}
