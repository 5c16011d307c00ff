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

#ifndef NETIMB_HOPS_HPP_
#define NETIMB_HOPS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netimb/graph.hpp"

namespace netimb {

using hop_t = std::uint32_t;

/// Explicit sentinel for "no path"; never a valid hop count.
inline constexpr hop_t kUnreachable = std::numeric_limits<hop_t>::max();

/// Distribution of shortest hop counts over all ordered node pairs. This is
/// the sufficient statistic for every metric in the library: no n-by-n
/// distance matrix is ever materialized.
struct HopHistogram {
  /// Node count of the originating graph.
  std::size_t n = 0;
  /// (h, N_h) entries sorted by hop value h >= 1; zero counts are never
  /// stored. Every N_h is even: (u,v) and (v,u) both count.
  std::vector<std::pair<hop_t, std::uint64_t>> counts;
  /// Ordered pairs with no connecting path (also even).
  std::uint64_t unreachable = 0;

  /// n*(n-1), the number of ordered pairs.
  std::uint64_t ordered_pairs() const noexcept {
    return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  }
  std::uint64_t reachable_pairs() const noexcept;

  friend bool operator==(const HopHistogram&, const HopHistogram&) = default;
};

/// Single-source shortest hop counts; hops[source] = 0 and unreachable nodes
/// carry kUnreachable. Throws std::invalid_argument for an out-of-range
/// source.
std::vector<hop_t> bfs_hops(const Graph& g, node_t source);

/// Aggregates bfs_hops over every source into a HopHistogram. O(n(n+m)).
/// `threads` = 0 uses the default worker count; the result is identical for
/// any worker count (per-source counts are integers, so merges commute).
HopHistogram all_pairs_histogram(const Graph& g, unsigned threads = 0);

/// Largest finite hop: nullopt when any pair is unreachable (infinite
/// diameter); 0 for graphs with fewer than two nodes.
std::optional<hop_t> diameter(const HopHistogram& hist);

/// P(h) = N_h / (n(n-1)) over finite hops; the probabilities sum to the
/// reachable fraction. Throws std::invalid_argument when n < 2.
std::map<hop_t, double> hop_distribution(const HopHistogram& hist);

/// CSV with header "h,count", one row per finite hop, and a trailing
/// "inf,<unreachable>" row.
std::string to_csv(const HopHistogram& hist);

/// True when every node is reachable from node 0 (vacuously true for n <= 1).
bool is_connected(const Graph& g);

}  // namespace netimb

#endif  // NETIMB_HOPS_HPP_
