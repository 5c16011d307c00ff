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

#ifndef NETIMB_GENERATORS_HPP_
#define NETIMB_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "netimb/graph.hpp"

namespace netimb {

/// Seed for the deterministic generators. Identical (parameters, seed) pairs
/// produce byte-identical graphs on every platform: all randomness is drawn
/// from mt19937_64 through fixed uniform helpers, never through
/// implementation-defined standard distributions.
using Seed = std::uint64_t;

/// Complete graph K_n. Precondition: n >= 1.
Graph complete(std::size_t n);

/// Path graph P_n with edges {i, i+1}. Precondition: n >= 1.
Graph path(std::size_t n);

/// Ring (cycle) graph C_n with edges {i, (i+1) mod n}. Precondition: n >= 3.
Graph ring(std::size_t n);

/// Star S_n with hub 0 and leaves 1..n-1. Precondition: n >= 2.
Graph star(std::size_t n);

/// G(n, p): every unordered pair is an edge independently with probability p.
/// All C(n, 2) pairs are enumerated in lexicographic order with one uniform
/// draw each. Precondition: 0 <= p <= 1.
Graph erdos_renyi(std::size_t n, double p, Seed seed);

/// Preferential attachment. Starts from a complete seed graph on
/// max(m_attach, 2) nodes; every further node attaches to m_attach distinct
/// existing nodes, chosen degree-proportionally (repeated-endpoint list,
/// redrawing duplicates). Always connected.
/// Precondition: 1 <= m_attach < n.
Graph barabasi_albert(std::size_t n, std::size_t m_attach, Seed seed);

/// Small-world rewiring. Ring lattice joining each node to k/2 neighbors per
/// side; then, scanning lattice edges (i, i+j) by increasing j, each edge
/// still present is rewired with probability p to a uniformly random target
/// that is neither i nor a current neighbor of i. Edge count n*k/2 is
/// preserved for every p. Preconditions: k even, 0 < k < n, 0 <= p <= 1.
Graph watts_strogatz(std::size_t n, std::size_t k, double p, Seed seed);

/// Internal topology of each dumbbell cluster.
enum class ClusterTopology { kComplete, kRing, kErdosRenyi };

struct Dumbbell {
  Graph graph;
  Edge bridge;  // the single inter-cluster edge
};

/// Two clusters of `cluster_size` nodes each (A = 0..s-1, B = s..2s-1)
/// joined by exactly one bridge edge {0, cluster_size}. Erdos-Renyi clusters
/// are regenerated from the seed stream until internally connected.
/// Preconditions: cluster_size >= 2 (>= 3 for ring clusters); for
/// Erdos-Renyi clusters 0 < er_p <= 1.
Dumbbell dumbbell(std::size_t cluster_size, ClusterTopology topology,
                  Seed seed, double er_p = 0.15);

}  // namespace netimb

#endif  // NETIMB_GENERATORS_HPP_
