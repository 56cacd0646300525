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

// Clustering objectives.
//
// For a cluster C with internal edge set E(C) and weight w(C) the quality is
// q_w(C) = 2|E(C)| / w(C). A (partial) clustering scores
//
//   Q^lambda_w = sum over clusters of (lambda + q_w(C_i)).
//
// With degree weights Q^0 is the normalized association, and
// Q^lambda + NCut = (lambda + 1) k. The remaining evaluators (modularity,
// normalized modularity, edge density) are related to Q^0 by closed forms.

#ifndef RATIOCLUST_OBJECTIVES_HPP_
#define RATIOCLUST_OBJECTIVES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"
#include "ratioclust/rational.hpp"

namespace ratioclust {

namespace detail {

/// Per-cluster sums needed by every evaluator, collected in O(n + m).
struct ClusterTally {
  std::vector<std::int64_t> internal_edges;
  std::vector<std::int64_t> cut_edges;
  std::vector<std::int64_t> size;
  std::vector<std::int64_t> volume;
  std::vector<double> weight;
  std::vector<std::int64_t> int_weight;  // filled only for integral weights
};

inline void check_labels(const Graph& g, std::size_t labelled) {
  if (labelled != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidClustering,
                "clustering covers " + std::to_string(labelled) + " vertices, graph has " +
                    std::to_string(g.num_vertices()));
  }
}

inline ClusterTally tally(const Graph& g, const WeightAssignment* w,
                          std::span<const ClusterId> labels, std::size_t k) {
  check_labels(g, labels.size());
  ClusterTally t;
  t.internal_edges.assign(k, 0);
  t.cut_edges.assign(k, 0);
  t.size.assign(k, 0);
  t.volume.assign(k, 0);
  const bool with_weights = w != nullptr;
  const bool with_ints = with_weights && w->integral();
  if (with_weights) {
    w->check_matches(g);
    t.weight.assign(k, 0.0);
    if (with_ints) t.int_weight.assign(k, 0);
  }
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const ClusterId c = labels[v];
    if (c == PartialClustering::kUnassigned) continue;
    ++t.size[c];
    t.volume[c] += static_cast<std::int64_t>(g.degree(static_cast<VertexId>(v)));
    if (with_weights) {
      t.weight[c] += (*w)[static_cast<VertexId>(v)];
      if (with_ints) t.int_weight[c] += w->integers()[v];
    }
  }
  for (const Edge& e : g.edges()) {
    const ClusterId cu = labels[e.u];
    const ClusterId cv = labels[e.v];
    if (cu == cv) {
      if (cu != PartialClustering::kUnassigned) ++t.internal_edges[cu];
    } else {
      if (cu != PartialClustering::kUnassigned) ++t.cut_edges[cu];
      if (cv != PartialClustering::kUnassigned) ++t.cut_edges[cv];
    }
  }
  return t;
}

inline void require_no_isolated(const Graph& g) {
  if (g.has_isolated_vertex()) {
    throw Error(ErrorCode::kIsolatedVertex,
                "objective is defined on volumes and needs a graph without isolated vertices");
  }
}

inline void require_integral(const WeightAssignment& w) {
  if (!w.integral()) {
    throw Error(ErrorCode::kInvalidWeights, "exact evaluation requires integer weights");
  }
}

inline double q_lambda_from(const ClusterTally& t, double lambda) {
  double total = 0.0;
  for (std::size_t c = 0; c < t.size.size(); ++c) {
    total += lambda + 2.0 * static_cast<double>(t.internal_edges[c]) / t.weight[c];
  }
  return total;
}

inline Rational q_lambda_exact_from(const ClusterTally& t, const Rational& lambda) {
  Rational total = 0;
  for (std::size_t c = 0; c < t.size.size(); ++c) {
    total += lambda + make_rational(2 * t.internal_edges[c], t.int_weight[c]);
  }
  return total;
}

}  // namespace detail

/// q_w(C) for an explicit vertex set. Throws kEmptyCluster on an empty set,
/// kVertexOutOfRange for ids outside the graph, kInvalidArgument for repeats.
inline double cluster_quality(const Graph& g, const WeightAssignment& w,
                              std::span<const VertexId> cluster) {
  if (cluster.empty()) throw Error(ErrorCode::kEmptyCluster, "cluster is empty");
  w.check_matches(g);
  std::vector<bool> member(g.num_vertices(), false);
  double weight = 0.0;
  for (VertexId v : cluster) {
    if (v >= g.num_vertices()) {
      throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    if (member[v]) {
      throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " repeated");
    }
    member[v] = true;
    weight += w[v];
  }
  std::int64_t internal = 0;
  for (VertexId v : cluster) {
    for (EdgeId e : g.incident(v)) {
      const VertexId u = g.other(e, v);
      if (member[u] && u > v) ++internal;
    }
  }
  return 2.0 * static_cast<double>(internal) / weight;
}

/// Q^lambda_w of a clustering.
inline double objective(const Graph& g, const WeightAssignment& w, const Clustering& c,
                        double lambda) {
  return detail::q_lambda_from(detail::tally(g, &w, c.labels(), c.num_clusters()), lambda);
}

/// Q^lambda_w of a partial clustering: sums only over the clusters present.
inline double objective(const Graph& g, const WeightAssignment& w, const PartialClustering& c,
                        double lambda) {
  return detail::q_lambda_from(detail::tally(g, &w, c.labels(), c.num_clusters()), lambda);
}

/// Exact Q^lambda_w; requires integral weights.
inline Rational objective_exact(const Graph& g, const WeightAssignment& w, const Clustering& c,
                                const Rational& lambda) {
  detail::require_integral(w);
  return detail::q_lambda_exact_from(detail::tally(g, &w, c.labels(), c.num_clusters()),
                                     lambda);
}

inline Rational objective_exact(const Graph& g, const WeightAssignment& w,
                                const PartialClustering& c, const Rational& lambda) {
  detail::require_integral(w);
  return detail::q_lambda_exact_from(detail::tally(g, &w, c.labels(), c.num_clusters()),
                                     lambda);
}

/// NCut = sum_i |E_out(C_i)| / vol(C_i), counted from boundary edges.
inline double ncut(const Graph& g, const Clustering& c) {
  detail::require_no_isolated(g);
  const auto t = detail::tally(g, nullptr, c.labels(), c.num_clusters());
  double total = 0.0;
  for (std::size_t i = 0; i < t.size.size(); ++i) {
    total += static_cast<double>(t.cut_edges[i]) / static_cast<double>(t.volume[i]);
  }
  return total;
}

/// NAssoc = Q^0 under degree weights.
inline double nassoc(const Graph& g, const Clustering& c) {
  detail::require_no_isolated(g);
  return objective(g, WeightAssignment::degree(g), c, 0.0);
}

/// Mod = sum_i (1/m)(|E(C_i)| - vol(C_i)^2 / m), with the per-cluster term
/// taken literally as vol^2/m (not the vol^2/(4m) of Newman's convention).
inline double modularity(const Graph& g, const Clustering& c) {
  if (g.num_edges() == 0) throw Error(ErrorCode::kEmptyGraph, "modularity needs m > 0");
  const auto t = detail::tally(g, nullptr, c.labels(), c.num_clusters());
  const double m = static_cast<double>(g.num_edges());
  double total = 0.0;
  for (std::size_t i = 0; i < t.size.size(); ++i) {
    const double vol = static_cast<double>(t.volume[i]);
    total += (static_cast<double>(t.internal_edges[i]) - vol * vol / m) / m;
  }
  return total;
}

/// NMod = sum_i (|E(C_i)| - vol(C_i)^2 / (2m)) / (m vol(C_i)), which equals
/// (Q^0_deg / 2 - 1) / m.
inline double normalized_modularity(const Graph& g, const Clustering& c) {
  if (g.num_edges() == 0) throw Error(ErrorCode::kEmptyGraph, "normalized modularity needs m > 0");
  detail::require_no_isolated(g);
  const auto t = detail::tally(g, nullptr, c.labels(), c.num_clusters());
  const double m = static_cast<double>(g.num_edges());
  double total = 0.0;
  for (std::size_t i = 0; i < t.size.size(); ++i) {
    const double vol = static_cast<double>(t.volume[i]);
    total += (static_cast<double>(t.internal_edges[i]) - vol * vol / (2.0 * m)) / (m * vol);
  }
  return total;
}

/// Sum of edge densities |E(C_i)| / |C_i|.
inline double density_sum(const Graph& g, const Clustering& c) {
  const auto t = detail::tally(g, nullptr, c.labels(), c.num_clusters());
  double total = 0.0;
  for (std::size_t i = 0; i < t.size.size(); ++i) {
    total += static_cast<double>(t.internal_edges[i]) / static_cast<double>(t.size[i]);
  }
  return total;
}

inline Rational density_sum_exact(const Graph& g, const Clustering& c) {
  const auto t = detail::tally(g, nullptr, c.labels(), c.num_clusters());
  Rational total = 0;
  for (std::size_t i = 0; i < t.size.size(); ++i) {
    total += make_rational(t.internal_edges[i], t.size[i]);
  }
  return total;
}

/// Completes a partial clustering: each unassigned vertex becomes a singleton
/// cluster. Existing cluster ids are preserved; new ids follow in vertex order.
inline Clustering extend_partial(const PartialClustering& p) {
  std::vector<ClusterId> labels = p.labels();
  auto next = static_cast<ClusterId>(p.num_clusters());
  for (ClusterId& c : labels) {
    if (c == PartialClustering::kUnassigned) c = next++;
  }
  return Clustering(std::move(labels));
}

/// Splits every cluster into the connected components of its induced
/// subgraph.
inline Clustering split_into_components(const Graph& g, const Clustering& c) {
  detail::check_labels(g, c.num_vertices());
  constexpr ClusterId kUnset = PartialClustering::kUnassigned;
  std::vector<ClusterId> labels(g.num_vertices(), kUnset);
  std::vector<VertexId> stack;
  ClusterId next = 0;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (labels[root] != kUnset) continue;
    labels[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        const VertexId u = g.other(e, v);
        if (labels[u] == kUnset && c.cluster_of(u) == c.cluster_of(v)) {
          labels[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return Clustering(std::move(labels));
}

}  // namespace ratioclust

#endif  // RATIOCLUST_OBJECTIVES_HPP_
