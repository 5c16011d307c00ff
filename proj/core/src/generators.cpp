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

#include "netimb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "netimb/hops.hpp"

namespace netimb {
namespace {

// Standard-library distributions are implementation-defined; these fixed
// mappings keep seeded graphs identical across compilers.

// Uniform double in [0, 1): top 53 bits of one mt19937_64 draw.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; unbiased. Precondition:
// bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::vector<node_t>> er_adjacency(std::size_t n, double p,
                                              std::mt19937_64& rng) {
  std::vector<std::vector<node_t>> adj(n);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) {
        adj[u].push_back(static_cast<node_t>(v));
        adj[v].push_back(static_cast<node_t>(u));
      }
    }
  }
  return adj;
}

std::vector<std::vector<node_t>> complete_adjacency(std::size_t n) {
  std::vector<std::vector<node_t>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    adj[u].reserve(n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) adj[u].push_back(static_cast<node_t>(v));
    }
  }
  return adj;
}

std::vector<std::vector<node_t>> ring_adjacency(std::size_t n) {
  std::vector<std::vector<node_t>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    adj[u].push_back(static_cast<node_t>((u + 1) % n));
    adj[u].push_back(static_cast<node_t>((u + n - 1) % n));
  }
  return adj;
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) +
                                " must be a probability in [0, 1]");
  }
}

}  // namespace

Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  return Graph(complete_adjacency(n));
}

Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::vector<node_t>> adj(n);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    adj[u].push_back(static_cast<node_t>(u + 1));
    adj[u + 1].push_back(static_cast<node_t>(u));
  }
  return Graph(std::move(adj));
}

Graph ring(std::size_t n) {
  if (n < 3) throw std::invalid_argument("ring: n must be >= 3");
  return Graph(ring_adjacency(n));
}

Graph star(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star: n must be >= 2");
  std::vector<std::vector<node_t>> adj(n);
  adj[0].reserve(n - 1);
  for (std::size_t v = 1; v < n; ++v) {
    adj[0].push_back(static_cast<node_t>(v));
    adj[v].push_back(0);
  }
  return Graph(std::move(adj));
}

Graph erdos_renyi(std::size_t n, double p, Seed seed) {
  require_probability(p, "erdos_renyi: p");
  std::mt19937_64 rng(seed);
  return Graph(er_adjacency(n, p, rng));
}

Graph barabasi_albert(std::size_t n, std::size_t m_attach, Seed seed) {
  if (m_attach < 1 || m_attach >= n) {
    throw std::invalid_argument(
        "barabasi_albert: need 1 <= m_attach < n");
  }
  const std::size_t seed_nodes = std::max<std::size_t>(m_attach, 2);
  std::mt19937_64 rng(seed);

  std::vector<std::vector<node_t>> adj(n);
  // Degree-proportional sampling: pick a uniform element of the list of
  // edge endpoints seen so far.
  std::vector<node_t> repeated;
  repeated.reserve(2 * (seed_nodes * (seed_nodes - 1) / 2 +
                        m_attach * (n - seed_nodes)));
  for (std::size_t u = 0; u < seed_nodes; ++u) {
    for (std::size_t v = u + 1; v < seed_nodes; ++v) {
      adj[u].push_back(static_cast<node_t>(v));
      adj[v].push_back(static_cast<node_t>(u));
      repeated.push_back(static_cast<node_t>(u));
      repeated.push_back(static_cast<node_t>(v));
    }
  }

  std::vector<node_t> chosen;
  chosen.reserve(m_attach);
  for (std::size_t newcomer = seed_nodes; newcomer < n; ++newcomer) {
    chosen.clear();
    while (chosen.size() < m_attach) {
      const node_t target = repeated[uniform_below(rng, repeated.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (const node_t target : chosen) {
      adj[newcomer].push_back(target);
      adj[target].push_back(static_cast<node_t>(newcomer));
      repeated.push_back(static_cast<node_t>(newcomer));
      repeated.push_back(target);
    }
  }
  return Graph(std::move(adj));
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, Seed seed) {
  if (k == 0 || k % 2 != 0 || k >= n) {
    throw std::invalid_argument(
        "watts_strogatz: k must be even with 0 < k < n");
  }
  require_probability(p, "watts_strogatz: p");
  std::mt19937_64 rng(seed);

  std::vector<std::set<node_t>> nbr(n);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const node_t a = static_cast<node_t>(i);
      const node_t b = static_cast<node_t>((i + j) % n);
      nbr[a].insert(b);
      nbr[b].insert(a);
    }
  }
  // Rewire lattice edges in scan order; an edge already displaced by an
  // earlier rewire is skipped.
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const node_t a = static_cast<node_t>(i);
      const node_t b = static_cast<node_t>((i + j) % n);
      if (!nbr[a].contains(b)) continue;
      if (uniform01(rng) >= p) continue;
      if (nbr[a].size() >= n - 1) continue;  // saturated; nothing to rewire to
      node_t target;
      do {
        target = static_cast<node_t>(uniform_below(rng, n));
      } while (target == a || nbr[a].contains(target));
      nbr[a].erase(b);
      nbr[b].erase(a);
      nbr[a].insert(target);
      nbr[target].insert(a);
    }
  }

  std::vector<std::vector<node_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    adj[i].assign(nbr[i].begin(), nbr[i].end());
  }
  return Graph(std::move(adj));
}

Dumbbell dumbbell(std::size_t cluster_size, ClusterTopology topology,
                  Seed seed, double er_p) {
  if (cluster_size < 2) {
    throw std::invalid_argument("dumbbell: cluster_size must be >= 2");
  }
  if (topology == ClusterTopology::kRing && cluster_size < 3) {
    throw std::invalid_argument("dumbbell: ring clusters need size >= 3");
  }
  if (topology == ClusterTopology::kErdosRenyi &&
      !(er_p > 0.0 && er_p <= 1.0)) {
    throw std::invalid_argument("dumbbell: er_p must be in (0, 1]");
  }

  std::mt19937_64 rng(seed);
  auto make_cluster = [&]() -> std::vector<std::vector<node_t>> {
    switch (topology) {
      case ClusterTopology::kComplete:
        return complete_adjacency(cluster_size);
      case ClusterTopology::kRing:
        return ring_adjacency(cluster_size);
      case ClusterTopology::kErdosRenyi:
        break;
    }
    // Regenerate until internally connected, drawing from the same stream.
    for (int attempt = 0; attempt < 100000; ++attempt) {
      auto adj = er_adjacency(cluster_size, er_p, rng);
      if (is_connected(Graph(adj))) return adj;
    }
    throw std::runtime_error(
        "dumbbell: gave up finding a connected er cluster; raise er_p");
  };

  const auto cluster_a = make_cluster();
  const auto cluster_b = make_cluster();

  const std::size_t n = 2 * cluster_size;
  std::vector<std::vector<node_t>> adj(n);
  for (std::size_t u = 0; u < cluster_size; ++u) {
    adj[u] = cluster_a[u];
    adj[cluster_size + u].reserve(cluster_b[u].size());
    for (const node_t v : cluster_b[u]) {
      adj[cluster_size + u].push_back(static_cast<node_t>(cluster_size + v));
    }
  }
  const Edge bridge{0, static_cast<node_t>(cluster_size)};
  adj[bridge.u].push_back(bridge.v);
  adj[bridge.v].push_back(bridge.u);
  return {Graph(std::move(adj)), bridge};
}

}  // namespace netimb
