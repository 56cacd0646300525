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

// Exact brute-force optimisation over all set partitions of small graphs.
//
// Partitions are enumerated as restricted growth strings a[0..n) with
// a[0] = 0 and a[i] <= 1 + max(a[0..i)). Values are compared in floating
// point; near-ties are settled exactly in rational arithmetic when the weights
// are integral, so "first optimum in enumeration order" is well defined.

#ifndef RATIOCLUST_ORACLE_HPP_
#define RATIOCLUST_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratioclust/cvwap.hpp"
#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"
#include "ratioclust/objectives.hpp"
#include "ratioclust/rational.hpp"

namespace ratioclust {

inline constexpr std::size_t kOracleMaxVertices = 12;

class PartitionEnumerator {
 public:
  /// Throws kTooLarge for n > 12. n = 0 yields the single empty partition.
  explicit PartitionEnumerator(std::size_t n) : labels_(n, 0), prefix_max_(n, 0) {
    if (n > kOracleMaxVertices) {
      throw Error(ErrorCode::kTooLarge, "partition enumeration supports at most " +
                                            std::to_string(kOracleMaxVertices) + " vertices");
    }
  }

  const std::vector<ClusterId>& labels() const { return labels_; }
  std::size_t num_blocks() const {
    return labels_.empty() ? 0 : static_cast<std::size_t>(prefix_max_.back()) + 1;
  }
  Clustering current() const { return Clustering(labels_); }

  /// Moves to the next partition; returns false once all have been visited.
  bool advance() {
    const std::size_t n = labels_.size();
    for (std::size_t i = n; i-- > 1;) {
      if (labels_[i] <= prefix_max_[i - 1]) {
        ++labels_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          labels_[j] = 0;
          prefix_max_[j] = prefix_max_[i];
        }
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<ClusterId> labels_;
  std::vector<ClusterId> prefix_max_;
};

/// Number of partitions visited by PartitionEnumerator(n).
inline std::size_t count_partitions(std::size_t n) {
  PartitionEnumerator it(n);
  std::size_t count = 1;
  while (it.advance()) ++count;
  return count;
}

struct OptResult {
  Clustering clustering;
  double value = 0.0;
  std::optional<Rational> exact_value;  // present for integral weights
  std::size_t optimal_count = 0;        // partitions attaining the optimum
};

/// argmax of Q^lambda_w over all partitions; ties resolved to the first in
/// enumeration order. Throws kTooLarge for n > 12.
inline OptResult exact_opt(const Graph& g, const WeightAssignment& w, double lambda) {
  w.check_matches(g);
  const std::size_t n = g.num_vertices();
  PartitionEnumerator it(n);
  const bool exact = w.integral();
  const Rational exact_lambda = to_rational(lambda);

  std::vector<double> block_weight(n);
  std::vector<std::int64_t> block_edges(n);
  auto evaluate = [&](const std::vector<ClusterId>& labels, std::size_t k) {
    std::fill_n(block_weight.begin(), k, 0.0);
    std::fill_n(block_edges.begin(), k, 0);
    for (std::size_t v = 0; v < n; ++v) block_weight[labels[v]] += w[static_cast<VertexId>(v)];
    for (const Edge& e : g.edges()) {
      if (labels[e.u] == labels[e.v]) ++block_edges[labels[e.u]];
    }
    double total = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      total += lambda + 2.0 * static_cast<double>(block_edges[c]) / block_weight[c];
    }
    return total;
  };

  OptResult best;
  best.clustering = it.current();
  best.value = evaluate(it.labels(), it.num_blocks());
  best.optimal_count = 1;
  std::optional<Rational> best_exact;
  auto exact_of = [&](const Clustering& c) { return objective_exact(g, w, c, exact_lambda); };

  while (it.advance()) {
    const double value = evaluate(it.labels(), it.num_blocks());
    const double tol = 1e-9 * std::max(1.0, std::abs(best.value));
    if (value > best.value + tol) {
      best.clustering = it.current();
      best.value = value;
      best.optimal_count = 1;
      best_exact.reset();
    } else if (value >= best.value - tol) {
      if (!exact) {
        ++best.optimal_count;
        continue;
      }
      if (!best_exact) best_exact = exact_of(best.clustering);
      Clustering candidate = it.current();
      Rational candidate_exact = exact_of(candidate);
      if (candidate_exact > *best_exact) {
        best.clustering = std::move(candidate);
        best.value = value;
        best.optimal_count = 1;
        best_exact = std::move(candidate_exact);
      } else if (candidate_exact == *best_exact) {
        ++best.optimal_count;
      }
    }
  }
  if (exact) {
    best.exact_value = best_exact ? *best_exact : exact_of(best.clustering);
    best.value = to_double(*best.exact_value);
  }
  return best;
}

struct RestrictedOptResult {
  Assignment assignment;
  PartialClustering clustering;  // on the instance's underlying vertex ids
  double value = 0.0;            // Q^0_w over the bipartite graph
  std::optional<Rational> exact_value;
};

/// Maximises Q^0_w over restricted partial clusterings of the bipartite graph:
/// every cluster holds exactly one S-vertex and T-weight at most twice its
/// weight. T-vertices are only attached to adjacent S-vertices (a
/// non-adjacent one adds weight but no edge). Throws kTooLarge when
/// |S| + |T| > 12.
inline RestrictedOptResult exact_restricted_opt(const CvwapInstance& inst) {
  if (inst.s_count() + inst.t_count() > kOracleMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "restricted oracle supports |S| + |T| <= " +
                                          std::to_string(kOracleMaxVertices));
  }
  const std::size_t nt = inst.t_count();
  std::vector<std::vector<std::uint32_t>> nbrs(nt);
  for (const CvwapEdge& e : inst.edges()) nbrs[e.t].push_back(e.s);

  Assignment current = Assignment::empty(inst);
  Assignment best = current;
  double best_value = 0.0;
  std::vector<double> load(inst.s_count(), 0.0);
  std::vector<std::int64_t> count(inst.s_count(), 0);

  auto leaf_value = [&] {
    double total = 0.0;
    for (std::size_t s = 0; s < inst.s_count(); ++s) {
      if (count[s] > 0) total += 2.0 * static_cast<double>(count[s]) / (inst.s_weight(s) + load[s]);
    }
    return total;
  };
  auto search = [&](auto&& self, std::size_t t) -> void {
    if (t == nt) {
      const double value = leaf_value();
      if (value > best_value + 1e-12) {
        best_value = value;
        best.owner = current.owner;
      }
      return;
    }
    for (std::uint32_t s : nbrs[t]) {
      if (load[s] + inst.t_weight(t) > 2.0 * inst.s_weight(s)) continue;
      load[s] += inst.t_weight(t);
      ++count[s];
      current.owner[t] = s;
      self(self, t + 1);
      current.owner[t] = Assignment::kNone;
      --count[s];
      load[s] -= inst.t_weight(t);
    }
    self(self, t + 1);
  };
  search(search, 0);

  RestrictedOptResult result;
  result.assignment = best;
  result.clustering = to_partial_clustering(inst, best);
  result.value = best_value;
  if (inst.integral()) {
    result.exact_value =
        objective_exact(inst.as_graph(), inst.vertex_weights(), result.clustering, Rational(0));
    result.value = to_double(*result.exact_value);
  }
  return result;
}

}  // namespace ratioclust

#endif  // RATIOCLUST_ORACLE_HPP_
