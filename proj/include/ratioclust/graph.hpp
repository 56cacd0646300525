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

// Graph, vertex-weight and clustering data model.
//
// All types are immutable after construction. Vertex ids are dense integers
// in [0, n).

#ifndef RATIOCLUST_GRAPH_HPP_
#define RATIOCLUST_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratioclust/error.hpp"

namespace ratioclust {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ClusterId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph in compressed incidence form.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph. Throws kSelfLoop, kDuplicateEdge or
  /// kVertexOutOfRange; the message names the offending edge index.
  static Graph build(std::size_t n, std::span<const Edge> edges) {
    if (n > std::numeric_limits<VertexId>::max()) {
      throw Error(ErrorCode::kTooLarge, "vertex count exceeds 32-bit id range");
    }
    if (edges.size() > std::numeric_limits<EdgeId>::max()) {
      throw Error(ErrorCode::kTooLarge, "edge count exceeds 32-bit id range");
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(edges.begin(), edges.end());
    g.degrees_.assign(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "edge " + std::to_string(i) + " references a vertex outside [0, " +
                        std::to_string(n) + ")");
      }
      if (e.u == e.v) {
        throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(i) + " is a self-loop");
      }
      ++g.degrees_[e.u];
      ++g.degrees_[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
    g.incident_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      g.incident_[cursor[edges[i].u]++] = static_cast<EdgeId>(i);
      g.incident_[cursor[edges[i].v]++] = static_cast<EdgeId>(i);
    }
    // Duplicate detection: scan each vertex's neighbours with a marker array.
    std::vector<EdgeId> seen_from(n, std::numeric_limits<EdgeId>::max());
    std::vector<VertexId> stamp(n, std::numeric_limits<VertexId>::max());
    for (VertexId v = 0; v < n; ++v) {
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.other(e, v);
        if (stamp[w] == v) {
          const EdgeId later = std::max(e, seen_from[w]);
          throw Error(ErrorCode::kDuplicateEdge,
                      "edge " + std::to_string(later) + " duplicates an earlier edge");
        }
        stamp[w] = v;
        seen_from[w] = e;
      }
    }
    return g;
  }

  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::size_t degree(VertexId v) const { return degrees_[v]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }

  std::span<const EdgeId> incident(VertexId v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }

  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  bool has_isolated_vertex() const {
    return std::any_of(degrees_.begin(), degrees_.end(), [](std::size_t d) { return d == 0; });
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incident_;
};

enum class WeightMode { kDegree, kUnit, kExplicit };

/// Positive per-vertex weights. When every weight is an integer the
/// assignment is "integral" and supports the exact rational evaluators.
class WeightAssignment {
 public:
  /// w(v) = deg(v). Throws kIsolatedVertex if some vertex has degree 0.
  static WeightAssignment degree(const Graph& g) {
    if (g.has_isolated_vertex()) {
      throw Error(ErrorCode::kIsolatedVertex,
                  "degree weights require a graph without isolated vertices");
    }
    WeightAssignment w;
    w.mode_ = WeightMode::kDegree;
    w.ints_.reserve(g.num_vertices());
    for (std::size_t d : g.degrees()) w.ints_.push_back(static_cast<std::int64_t>(d));
    w.values_.assign(w.ints_.begin(), w.ints_.end());
    return w;
  }

  static WeightAssignment unit(const Graph& g) {
    WeightAssignment w;
    w.mode_ = WeightMode::kUnit;
    w.ints_.assign(g.num_vertices(), 1);
    w.values_.assign(g.num_vertices(), 1.0);
    return w;
  }

  /// Explicit real weights; integral iff every value is a (safe) integer.
  static WeightAssignment explicit_weights(std::vector<double> values) {
    WeightAssignment w;
    w.mode_ = WeightMode::kExplicit;
    bool integral = true;
    for (std::size_t v = 0; v < values.size(); ++v) {
      const double x = values[v];
      if (!std::isfinite(x) || x <= 0.0) {
        throw Error(ErrorCode::kNonPositiveWeight,
                    "weight of vertex " + std::to_string(v) + " is not strictly positive");
      }
      if (x != std::floor(x) || x > 9.0e15) integral = false;
    }
    if (integral) {
      w.ints_.reserve(values.size());
      for (double x : values) w.ints_.push_back(static_cast<std::int64_t>(x));
    }
    w.values_ = std::move(values);
    return w;
  }

  static WeightAssignment explicit_integers(const std::vector<std::int64_t>& values) {
    std::vector<double> real(values.begin(), values.end());
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (values[v] <= 0) {
        throw Error(ErrorCode::kNonPositiveWeight,
                    "weight of vertex " + std::to_string(v) + " is not strictly positive");
      }
    }
    return explicit_weights(std::move(real));
  }

  WeightMode mode() const { return mode_; }
  std::size_t size() const { return values_.size(); }
  double operator[](VertexId v) const { return values_[v]; }
  const std::vector<double>& values() const { return values_; }

  bool integral() const { return values_.empty() || !ints_.empty(); }
  /// Integer weights; only meaningful when integral().
  const std::vector<std::int64_t>& integers() const { return ints_; }

  double min_weight() const {
    return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
  }

  /// Throws kInvalidWeights unless this assignment covers exactly g's vertices.
  void check_matches(const Graph& g) const {
    if (values_.size() != g.num_vertices()) {
      throw Error(ErrorCode::kInvalidWeights,
                  "weight assignment has " + std::to_string(values_.size()) +
                      " entries for a graph with " + std::to_string(g.num_vertices()) +
                      " vertices");
    }
  }

 private:
  WeightAssignment() = default;

  WeightMode mode_ = WeightMode::kExplicit;
  std::vector<double> values_;
  std::vector<std::int64_t> ints_;
};

/// Full partition of [0, n): every vertex carries a cluster id in [0, k) and
/// every id is used.
class Clustering {
 public:
  Clustering() = default;

  /// Labels must already be dense: ids in [0, k) with each id present.
  explicit Clustering(std::vector<ClusterId> labels) : labels_(std::move(labels)) {
    ClusterId max_id = 0;
    for (ClusterId c : labels_) max_id = std::max(max_id, c);
    k_ = labels_.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
    std::vector<bool> used(k_, false);
    for (ClusterId c : labels_) used[c] = true;
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      throw Error(ErrorCode::kInvalidClustering, "cluster ids must be dense in [0, k)");
    }
  }

  /// Relabels arbitrary ids densely in order of first occurrence.
  static Clustering canonical(std::span<const ClusterId> labels) {
    std::vector<ClusterId> remap;
    std::vector<ClusterId> dense(labels.size());
    constexpr ClusterId kUnset = std::numeric_limits<ClusterId>::max();
    ClusterId next = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const ClusterId c = labels[v];
      if (c >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, kUnset);
      if (remap[c] == kUnset) remap[c] = next++;
      dense[v] = remap[c];
    }
    return Clustering(std::move(dense));
  }

  static Clustering singletons(std::size_t n) {
    std::vector<ClusterId> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<ClusterId>(v);
    return Clustering(std::move(labels));
  }

  static Clustering single_cluster(std::size_t n) {
    return Clustering(std::vector<ClusterId>(n, 0));
  }

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_clusters() const { return k_; }
  ClusterId cluster_of(VertexId v) const { return labels_[v]; }
  const std::vector<ClusterId>& labels() const { return labels_; }

  std::vector<std::vector<VertexId>> clusters() const {
    std::vector<std::vector<VertexId>> out(k_);
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      out[labels_[v]].push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<ClusterId> labels_;
  std::size_t k_ = 0;
};

/// Partition of a subset of [0, n). Unassigned vertices carry kUnassigned.
class PartialClustering {
 public:
  static constexpr ClusterId kUnassigned = std::numeric_limits<ClusterId>::max();

  PartialClustering() = default;

  /// Nothing assigned.
  explicit PartialClustering(std::size_t n) : labels_(n, kUnassigned) {}

  /// Assigned ids must be dense in [0, k).
  explicit PartialClustering(std::vector<ClusterId> labels) : labels_(std::move(labels)) {
    ClusterId max_id = 0;
    bool any = false;
    for (ClusterId c : labels_) {
      if (c == kUnassigned) continue;
      any = true;
      max_id = std::max(max_id, c);
    }
    k_ = any ? static_cast<std::size_t>(max_id) + 1 : 0;
    std::vector<bool> used(k_, false);
    for (ClusterId c : labels_) {
      if (c != kUnassigned) used[c] = true;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      throw Error(ErrorCode::kInvalidClustering, "cluster ids must be dense in [0, k)");
    }
  }

  static PartialClustering from_clustering(const Clustering& c) {
    return PartialClustering(c.labels());
  }

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_clusters() const { return k_; }
  std::optional<ClusterId> cluster_of(VertexId v) const {
    if (labels_[v] == kUnassigned) return std::nullopt;
    return labels_[v];
  }
  const std::vector<ClusterId>& labels() const { return labels_; }

  std::vector<std::vector<VertexId>> clusters() const {
    std::vector<std::vector<VertexId>> out(k_);
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      if (labels_[v] != kUnassigned) out[labels_[v]].push_back(static_cast<VertexId>(v));
    }
    return out;
  }

 private:
  std::vector<ClusterId> labels_;
  std::size_t k_ = 0;
};

}  // namespace ratioclust

#endif  // RATIOCLUST_GRAPH_HPP_
