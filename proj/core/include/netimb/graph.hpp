// Copyright 2026 the netimb authors
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

#ifndef NETIMB_GRAPH_HPP_
#define NETIMB_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace netimb {

using node_t = std::uint32_t;

/// Unordered node pair; where an orientation-free edge is produced by the
/// library, it is normalized to u < v.
struct Edge {
  node_t u = 0;
  node_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense node ids 0..n-1.
///
/// Invariants: no self-loops, no parallel edges, adjacency lists sorted
/// ascending and symmetric (u in adj(v) iff v in adj(u)). Instances are
/// immutable after construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// n isolated nodes.
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Takes ownership of raw adjacency lists; sorts them and validates every
  /// invariant. Throws std::invalid_argument on self-loops, duplicate
  /// neighbors, out-of-range ids, or asymmetry.
  explicit Graph(std::vector<std::vector<node_t>> adjacency);

  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  /// Sorted neighbor ids of u. Precondition: u < node_count().
  std::span<const node_t> neighbors(node_t u) const {
    return {adj_[u].data(), adj_[u].size()};
  }

  std::size_t degree(node_t u) const { return adj_[u].size(); }

  /// True when {u, v} is an edge (binary search; false for u == v or
  /// out-of-range ids).
  bool has_edge(node_t u, node_t v) const noexcept;

  /// All edges as u < v pairs in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<node_t>> adj_;
  std::size_t m_ = 0;

  [[nodiscard]] friend Graph add_edge(const Graph& g, node_t u, node_t v);
};

/// Copy of g with edge {u, v} added (value semantics; g is untouched).
/// Throws std::invalid_argument for self-loops, out-of-range ids, or an
/// already-present edge.
[[nodiscard]] Graph add_edge(const Graph& g, node_t u, node_t v);

/// All absent unordered pairs as u < v edges in lexicographic order.
std::vector<Edge> non_edges(const Graph& g);

}  // namespace netimb

#endif  // NETIMB_GRAPH_HPP_
