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

// Capacitated vertex-weighted assignment (CVWAP).
//
// Input: bipartite graph ((S, T), E, w) with w(s) >= w(t) on every edge.
// A solution assigns each T-vertex to at most one adjacent S-vertex such that
// the T-weight owned by s is at most 2 w(s). Its value is
//
//   v = sum_s 2 |T_s| / (3 w(s)).
//
// greedy_cvwap scans edges by non-decreasing w(s) + w(t) and accepts an edge
// whenever t is free and s has room; this is a 1/2-approximation.

#ifndef RATIOCLUST_CVWAP_HPP_
#define RATIOCLUST_CVWAP_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ratioclust/bipartize.hpp"
#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"
#include "ratioclust/rational.hpp"

namespace ratioclust {

struct CvwapEdge {
  std::uint32_t s;  // index into S
  std::uint32_t t;  // index into T

  friend bool operator==(const CvwapEdge&, const CvwapEdge&) = default;
};

/// A CVWAP instance. S and T are indexed locally; s_vertices / t_vertices map
/// them to ids of an underlying vertex set of size num_vertices.
class CvwapInstance {
 public:
  CvwapInstance() = default;

  /// Standalone instance: S gets vertex ids [0, |S|), T gets [|S|, |S|+|T|).
  static CvwapInstance make(std::vector<double> s_weight, std::vector<double> t_weight,
                            std::vector<CvwapEdge> edges) {
    std::vector<VertexId> s_ids(s_weight.size());
    std::vector<VertexId> t_ids(t_weight.size());
    std::iota(s_ids.begin(), s_ids.end(), VertexId{0});
    std::iota(t_ids.begin(), t_ids.end(), static_cast<VertexId>(s_weight.size()));
    const std::size_t n = s_weight.size() + t_weight.size();
    return make_mapped(n, std::move(s_ids), std::move(t_ids),
                       std::move(s_weight), std::move(t_weight), std::move(edges));
  }

  /// Full constructor. Throws kInvalidInstance on any structural violation,
  /// including an edge with w(s) < w(t).
  static CvwapInstance make_mapped(std::size_t num_vertices, std::vector<VertexId> s_vertices,
                                   std::vector<VertexId> t_vertices, std::vector<double> s_weight,
                                   std::vector<double> t_weight, std::vector<CvwapEdge> edges) {
    CvwapInstance inst;
    inst.num_vertices_ = num_vertices;
    inst.s_vertices_ = std::move(s_vertices);
    inst.t_vertices_ = std::move(t_vertices);
    inst.s_weight_ = std::move(s_weight);
    inst.t_weight_ = std::move(t_weight);
    inst.edges_ = std::move(edges);
    inst.validate();
    return inst;
  }

  /// Instance induced by a bipartization: S/T from the side labels, edges from
  /// the kept edges (in kept order), weights inherited.
  static CvwapInstance from_bipartite(const BipartiteInstance& h) {
    const WeightAssignment& w = *h.weights;
    const std::size_t n = h.side.size();
    std::vector<std::uint32_t> local(n);
    std::vector<VertexId> s_ids;
    std::vector<VertexId> t_ids;
    std::vector<double> s_w;
    std::vector<double> t_w;
    for (std::size_t v = 0; v < n; ++v) {
      if (h.side[v] == Side::kS) {
        local[v] = static_cast<std::uint32_t>(s_ids.size());
        s_ids.push_back(static_cast<VertexId>(v));
        s_w.push_back(w[static_cast<VertexId>(v)]);
      } else {
        local[v] = static_cast<std::uint32_t>(t_ids.size());
        t_ids.push_back(static_cast<VertexId>(v));
        t_w.push_back(w[static_cast<VertexId>(v)]);
      }
    }
    std::vector<CvwapEdge> edges;
    edges.reserve(h.kept_edges.size());
    for (const Edge& e : h.kept_edges) edges.push_back({local[e.u], local[e.v]});
    return make_mapped(n, std::move(s_ids), std::move(t_ids), std::move(s_w), std::move(t_w),
                       std::move(edges));
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t s_count() const { return s_weight_.size(); }
  std::size_t t_count() const { return t_weight_.size(); }
  double s_weight(std::size_t s) const { return s_weight_[s]; }
  double t_weight(std::size_t t) const { return t_weight_[t]; }
  VertexId s_vertex(std::size_t s) const { return s_vertices_[s]; }
  VertexId t_vertex(std::size_t t) const { return t_vertices_[t]; }
  const std::vector<CvwapEdge>& edges() const { return edges_; }

  bool integral() const { return integral_; }
  std::int64_t s_int(std::size_t s) const { return s_int_[s]; }
  std::int64_t t_int(std::size_t t) const { return t_int_[t]; }

  /// The bipartite graph itself, on the underlying vertex ids.
  Graph as_graph() const {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const CvwapEdge& e : edges_) edges.push_back({s_vertices_[e.s], t_vertices_[e.t]});
    return Graph::build(num_vertices_, edges);
  }

  /// Vertex weights on the underlying ids. Requires S and T to cover them.
  WeightAssignment vertex_weights() const {
    std::vector<double> w(num_vertices_, 0.0);
    for (std::size_t s = 0; s < s_count(); ++s) w[s_vertices_[s]] = s_weight_[s];
    for (std::size_t t = 0; t < t_count(); ++t) w[t_vertices_[t]] = t_weight_[t];
    return WeightAssignment::explicit_weights(std::move(w));
  }

 private:
  void validate() {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidInstance, what); };
    if (s_vertices_.size() != s_weight_.size() || t_vertices_.size() != t_weight_.size()) {
      fail("vertex id and weight lists differ in length");
    }
    std::vector<bool> used(num_vertices_, false);
    for (const auto* ids : {&s_vertices_, &t_vertices_}) {
      for (VertexId v : *ids) {
        if (v >= num_vertices_ || used[v]) fail("S and T must be disjoint ids below num_vertices");
        used[v] = true;
      }
    }
    integral_ = true;
    for (const auto* ws : {&s_weight_, &t_weight_}) {
      for (double x : *ws) {
        if (!(x > 0.0) || !std::isfinite(x)) fail("weights must be positive");
        if (x != std::floor(x) || x > 9.0e15) integral_ = false;
      }
    }
    if (integral_) {
      s_int_.assign(s_weight_.begin(), s_weight_.end());
      t_int_.assign(t_weight_.begin(), t_weight_.end());
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const CvwapEdge& e = edges_[i];
      if (e.s >= s_count() || e.t >= t_count()) fail("edge " + std::to_string(i) + " out of range");
      if (s_weight_[e.s] < t_weight_[e.t]) {
        fail("edge " + std::to_string(i) + " has w(s) < w(t)");
      }
    }
  }

  std::size_t num_vertices_ = 0;
  std::vector<VertexId> s_vertices_;
  std::vector<VertexId> t_vertices_;
  std::vector<double> s_weight_;
  std::vector<double> t_weight_;
  std::vector<std::int64_t> s_int_;
  std::vector<std::int64_t> t_int_;
  std::vector<CvwapEdge> edges_;
  bool integral_ = true;
};

/// owner[t] is the local S index that owns t, or kNone. accepted lists the
/// instance edge indices in the order they entered the solution (greedy only).
struct Assignment {
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> owner;
  std::vector<std::uint32_t> accepted;

  static Assignment empty(const CvwapInstance& inst) {
    return Assignment{std::vector<std::uint32_t>(inst.t_count(), kNone), {}};
  }

  /// Cluster of every S-vertex: {s} followed by owned T indices (local ids).
  std::vector<std::vector<std::uint32_t>> owned_by(std::size_t s_count) const {
    std::vector<std::vector<std::uint32_t>> out(s_count);
    for (std::size_t t = 0; t < owner.size(); ++t) {
      if (owner[t] != kNone) out[owner[t]].push_back(static_cast<std::uint32_t>(t));
    }
    return out;
  }
};

/// True iff every owner is an instance neighbour and every S-capacity holds.
inline bool is_feasible(const CvwapInstance& inst, const Assignment& a) {
  if (a.owner.size() != inst.t_count()) return false;
  std::vector<std::vector<std::uint32_t>> nbrs(inst.t_count());
  for (const CvwapEdge& e : inst.edges()) nbrs[e.t].push_back(e.s);
  std::vector<double> load(inst.s_count(), 0.0);
  std::vector<std::int64_t> int_load(inst.s_count(), 0);
  for (std::size_t t = 0; t < a.owner.size(); ++t) {
    const std::uint32_t s = a.owner[t];
    if (s == Assignment::kNone) continue;
    if (std::find(nbrs[t].begin(), nbrs[t].end(), s) == nbrs[t].end()) return false;
    load[s] += inst.t_weight(t);
    if (inst.integral()) int_load[s] += inst.t_int(t);
  }
  for (std::size_t s = 0; s < inst.s_count(); ++s) {
    if (inst.integral() ? int_load[s] > 2 * inst.s_int(s)
                        : load[s] > 2.0 * inst.s_weight(s)) {
      return false;
    }
  }
  return true;
}

inline double cvwap_value(const CvwapInstance& inst, const Assignment& a) {
  double total = 0.0;
  for (std::uint32_t s : a.owner) {
    if (s != Assignment::kNone) total += 2.0 / (3.0 * inst.s_weight(s));
  }
  return total;
}

inline Rational cvwap_value_exact(const CvwapInstance& inst, const Assignment& a) {
  if (!inst.integral()) {
    throw Error(ErrorCode::kInvalidWeights, "exact evaluation requires integer weights");
  }
  std::vector<std::int64_t> count(inst.s_count(), 0);
  for (std::uint32_t s : a.owner) {
    if (s != Assignment::kNone) ++count[s];
  }
  Rational total = 0;
  for (std::size_t s = 0; s < count.size(); ++s) {
    if (count[s] > 0) total += make_rational(2 * count[s], 3 * inst.s_int(s));
  }
  return total;
}

enum class SortPath { kAuto, kRadix, kComparison };

namespace detail {

// Keys at or above this bound fall back to comparison sorting.
inline constexpr std::uint64_t kRadixKeyLimit = std::uint64_t{1} << 32;

/// Stable LSD radix sort of [0, keys.size()) by key, 16-bit digits.
inline std::vector<std::uint32_t> radix_order(const std::vector<std::uint64_t>& keys) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  if (keys.empty()) return order;
  const std::uint64_t max_key = *std::max_element(keys.begin(), keys.end());
  std::vector<std::uint32_t> buffer(keys.size());
  std::vector<std::size_t> count(std::size_t{1} << 16);
  for (int shift = 0; shift < 64 && (max_key >> shift) != 0; shift += 16) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t i : order) ++count[(keys[i] >> shift) & 0xFFFF];
    std::size_t sum = 0;
    for (std::size_t& c : count) {
      const std::size_t here = c;
      c = sum;
      sum += here;
    }
    for (std::uint32_t i : order) buffer[count[(keys[i] >> shift) & 0xFFFF]++] = i;
    order.swap(buffer);
  }
  return order;
}

}  // namespace detail

/// Edge indices in greedy processing order: non-decreasing w(s) + w(t), ties
/// by input index.
inline std::vector<std::uint32_t> greedy_edge_order(const CvwapInstance& inst,
                                                    SortPath path = SortPath::kAuto) {
  const auto& edges = inst.edges();
  bool radix = false;
  if (path != SortPath::kComparison && inst.integral()) {
    radix = true;
    if (path == SortPath::kAuto) {
      for (const CvwapEdge& e : edges) {
        if (static_cast<std::uint64_t>(inst.s_int(e.s) + inst.t_int(e.t)) >=
            detail::kRadixKeyLimit) {
          radix = false;
          break;
        }
      }
    }
  } else if (path == SortPath::kRadix) {
    throw Error(ErrorCode::kInvalidArgument, "radix ordering requires integer weights");
  }
  if (radix) {
    std::vector<std::uint64_t> keys(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      keys[i] = static_cast<std::uint64_t>(inst.s_int(edges[i].s) + inst.t_int(edges[i].t));
    }
    return detail::radix_order(keys);
  }
  std::vector<double> keys(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    keys[i] = inst.s_weight(edges[i].s) + inst.t_weight(edges[i].t);
  }
  std::vector<std::uint32_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  return order;
}

inline Assignment greedy_cvwap(const CvwapInstance& inst, SortPath path = SortPath::kAuto) {
  Assignment a = Assignment::empty(inst);
  const bool exact = inst.integral();
  std::vector<double> load(exact ? 0 : inst.s_count(), 0.0);
  std::vector<std::int64_t> int_load(exact ? inst.s_count() : 0, 0);
  for (std::uint32_t i : greedy_edge_order(inst, path)) {
    const CvwapEdge& e = inst.edges()[i];
    if (a.owner[e.t] != Assignment::kNone) continue;
    if (exact) {
      if (int_load[e.s] + inst.t_int(e.t) > 2 * inst.s_int(e.s)) continue;
      int_load[e.s] += inst.t_int(e.t);
    } else {
      if (load[e.s] + inst.t_weight(e.t) > 2.0 * inst.s_weight(e.s)) continue;
      load[e.s] += inst.t_weight(e.t);
    }
    a.owner[e.t] = e.s;
    a.accepted.push_back(i);
  }
  return a;
}

inline constexpr std::size_t kExactCvwapMaxT = 12;

/// Optimal assignment by exhaustive search over the owner of each T-vertex,
/// pruned by capacity and by an optimistic bound. Throws kInstanceTooLarge
/// when |T| > 12.
inline Assignment exact_cvwap(const CvwapInstance& inst) {
  if (inst.t_count() > kExactCvwapMaxT) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "exact CVWAP supports at most " + std::to_string(kExactCvwapMaxT) + " T-vertices");
  }
  const std::size_t nt = inst.t_count();
  std::vector<std::vector<std::uint32_t>> nbrs(nt);
  for (const CvwapEdge& e : inst.edges()) nbrs[e.t].push_back(e.s);
  // Best possible gain of each remaining T-vertex (its lightest neighbour).
  std::vector<double> suffix_bound(nt + 1, 0.0);
  for (std::size_t t = nt; t-- > 0;) {
    double best = 0.0;
    for (std::uint32_t s : nbrs[t]) best = std::max(best, 2.0 / (3.0 * inst.s_weight(s)));
    suffix_bound[t] = suffix_bound[t + 1] + best;
  }

  Assignment best = Assignment::empty(inst);
  double best_value = 0.0;
  Assignment current = Assignment::empty(inst);
  std::vector<double> remaining(inst.s_count());
  for (std::size_t s = 0; s < inst.s_count(); ++s) remaining[s] = 2.0 * inst.s_weight(s);
  constexpr double kEps = 1e-12;

  auto search = [&](auto&& self, std::size_t t, double value) -> void {
    if (value + suffix_bound[t] <= best_value + kEps) return;
    if (t == nt) {
      best_value = value;
      best.owner = current.owner;
      return;
    }
    for (std::uint32_t s : nbrs[t]) {
      if (inst.t_weight(t) > remaining[s]) continue;
      remaining[s] -= inst.t_weight(t);
      current.owner[t] = s;
      self(self, t + 1, value + 2.0 / (3.0 * inst.s_weight(s)));
      current.owner[t] = Assignment::kNone;
      remaining[s] += inst.t_weight(t);
    }
    self(self, t + 1, value);
  };
  search(search, 0, 0.0);
  return best;
}

/// Nonempty CVWAP clusters {s} + T_s as a partial clustering of the
/// underlying vertex set; cluster ids follow S order.
inline PartialClustering to_partial_clustering(const CvwapInstance& inst, const Assignment& a) {
  std::vector<ClusterId> labels(inst.num_vertices(), PartialClustering::kUnassigned);
  std::vector<ClusterId> id(inst.s_count(), PartialClustering::kUnassigned);
  std::vector<bool> nonempty(inst.s_count(), false);
  for (std::uint32_t s : a.owner) {
    if (s != Assignment::kNone) nonempty[s] = true;
  }
  ClusterId next = 0;
  for (std::size_t s = 0; s < inst.s_count(); ++s) {
    if (!nonempty[s]) continue;
    id[s] = next++;
    labels[inst.s_vertex(s)] = id[s];
  }
  for (std::size_t t = 0; t < a.owner.size(); ++t) {
    if (a.owner[t] != Assignment::kNone) labels[inst.t_vertex(t)] = id[a.owner[t]];
  }
  return PartialClustering(std::move(labels));
}

}  // namespace ratioclust

#endif  // RATIOCLUST_CVWAP_HPP_
