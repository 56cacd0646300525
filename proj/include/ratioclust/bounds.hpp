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

// Spanning-forest certificate for the degree-weighted Q^0 optimum.
//
// With edge weights W(u, v) = 1 / max(deg u, deg v) and M the weight of a
// maximum spanning forest,
//
//   M / (3 sqrt(n)) - 1/3  <=  max Q^0  <=  2 M.

#ifndef RATIOCLUST_BOUNDS_HPP_
#define RATIOCLUST_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"

namespace ratioclust {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if x and y were already connected.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

struct BoundCertificate {
  std::vector<EdgeId> forest_edges;  // in selection order (non-increasing W)
  double M = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

inline double forest_edge_weight(const Graph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return 1.0 / static_cast<double>(std::max(g.degree(edge.u), g.degree(edge.v)));
}

/// Maximum spanning forest under W via Kruskal. Ties are broken by edge index.
/// On disconnected graphs the forest spans each component and n in the lower
/// bound is the total vertex count. Throws kEmptyGraph when n = 0.
inline BoundCertificate mst_bound(const Graph& g) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  // Non-increasing W is non-decreasing max degree, an exact integer key.
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  auto key = [&](EdgeId e) {
    return std::max(g.degree(g.edge(e).u), g.degree(g.edge(e).v));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return key(a) < key(b); });

  BoundCertificate cert;
  DisjointSet dsu(g.num_vertices());
  for (EdgeId e : order) {
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) {
      cert.forest_edges.push_back(e);
      cert.M += forest_edge_weight(g, e);
    }
  }
  const double root_n = std::sqrt(static_cast<double>(g.num_vertices()));
  cert.lower = cert.M / (3.0 * root_n) - 1.0 / 3.0;
  cert.upper = 2.0 * cert.M;
  return cert;
}

/// Constructive witness of the lower bound: drop forest edges with
/// W <= 1/sqrt(n), then greedily pair the endpoints of the heaviest remaining
/// edge and discard its neighbours. Everything else is a singleton.
inline Clustering mst_greedy_clustering(const Graph& g) {
  const BoundCertificate cert = mst_bound(g);
  const std::size_t n = g.num_vertices();
  std::vector<ClusterId> labels(n, PartialClustering::kUnassigned);
  ClusterId next = 0;
  // forest_edges is already in non-increasing W order with index tie-break.
  for (EdgeId e : cert.forest_edges) {
    const Edge& edge = g.edge(e);
    const std::size_t d = std::max(g.degree(edge.u), g.degree(edge.v));
    if (d * d >= n) continue;  // W = 1/d <= 1/sqrt(n)
    if (labels[edge.u] != PartialClustering::kUnassigned ||
        labels[edge.v] != PartialClustering::kUnassigned) {
      continue;
    }
    labels[edge.u] = next;
    labels[edge.v] = next;
    ++next;
  }
  for (ClusterId& c : labels) {
    if (c == PartialClustering::kUnassigned) c = next++;
  }
  return Clustering(std::move(labels));
}

}  // namespace ratioclust

#endif  // RATIOCLUST_BOUNDS_HPP_
