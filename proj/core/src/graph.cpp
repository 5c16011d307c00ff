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

#include "netimb/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace netimb {

Graph::Graph(std::vector<std::vector<node_t>> adjacency)
    : adj_(std::move(adjacency)) {
  const std::size_t n = adj_.size();
  if (n > std::numeric_limits<node_t>::max()) {
    throw std::invalid_argument("graph too large for 32-bit node ids");
  }
  std::size_t total_degree = 0;
  for (std::size_t u = 0; u < n; ++u) {
    auto& nbrs = adj_[u];
    std::sort(nbrs.begin(), nbrs.end());
    node_t prev = 0;
    bool first = true;
    for (const node_t v : nbrs) {
      if (v >= n) {
        throw std::invalid_argument("neighbor id out of range: " +
                                    std::to_string(v));
      }
      if (v == static_cast<node_t>(u)) {
        throw std::invalid_argument("self-loop at node " + std::to_string(u));
      }
      if (!first && v == prev) {
        throw std::invalid_argument("duplicate neighbor " + std::to_string(v) +
                                    " at node " + std::to_string(u));
      }
      prev = v;
      first = false;
    }
    total_degree += nbrs.size();
  }
  // Symmetry: every arc must have its reverse.
  for (std::size_t u = 0; u < n; ++u) {
    for (const node_t v : adj_[u]) {
      if (!std::binary_search(adj_[v].begin(), adj_[v].end(),
                              static_cast<node_t>(u))) {
        throw std::invalid_argument("asymmetric adjacency: " +
                                    std::to_string(u) + " -> " +
                                    std::to_string(v));
      }
    }
  }
  m_ = total_degree / 2;
}

bool Graph::has_edge(node_t u, node_t v) const noexcept {
  const std::size_t n = adj_.size();
  if (u >= n || v >= n || u == v) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(m_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (const node_t v : adj_[u]) {
      if (v > u) result.push_back({static_cast<node_t>(u), v});
    }
  }
  return result;
}

Graph add_edge(const Graph& g, node_t u, node_t v) {
  const std::size_t n = g.node_count();
  if (u >= n || v >= n) {
    throw std::invalid_argument("add_edge: node id out of range");
  }
  if (u == v) {
    throw std::invalid_argument("add_edge: self-loop rejected");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("add_edge: edge already present");
  }
  Graph out = g;  // sorted/symmetric by construction; insert in place
  auto& nu = out.adj_[u];
  nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
  auto& nv = out.adj_[v];
  nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
  ++out.m_;
  return out;
}

std::vector<Edge> non_edges(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<Edge> result;
  for (node_t u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    for (node_t v = u + 1; v < n; ++v) {
      while (it != nbrs.end() && *it < v) ++it;
      if (it != nbrs.end() && *it == v) continue;
      result.push_back({u, static_cast<node_t>(v)});
    }
  }
  return result;
}

}  // namespace netimb
