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

#include "netimb/hops.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "netimb/parallel.hpp"

namespace netimb {
namespace {

// Per-source BFS into caller-owned scratch. `queue` doubles as the FIFO and
// the visited list; `hops` must be pre-filled with kUnreachable.
void bfs_into(const Graph& g, node_t source, std::vector<hop_t>& hops,
              std::vector<node_t>& queue) {
  queue.clear();
  queue.push_back(source);
  hops[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const node_t u = queue[head];
    const hop_t next = hops[u] + 1;
    for (const node_t v : g.neighbors(u)) {
      if (hops[v] == kUnreachable) {
        hops[v] = next;
        queue.push_back(v);
      }
    }
  }
}

// Counts of hops[v] for v != source, accumulated into by_hop/unreachable.
void accumulate(const std::vector<hop_t>& hops, node_t source,
                std::vector<std::uint64_t>& by_hop,
                std::uint64_t& unreachable) {
  for (std::size_t v = 0; v < hops.size(); ++v) {
    if (v == source) continue;
    const hop_t h = hops[v];
    if (h == kUnreachable) {
      ++unreachable;
    } else {
      if (h >= by_hop.size()) by_hop.resize(h + 1, 0);
      ++by_hop[h];
    }
  }
}

}  // namespace

std::uint64_t HopHistogram::reachable_pairs() const noexcept {
  std::uint64_t total = 0;
  for (const auto& [h, count] : counts) total += count;
  return total;
}

std::vector<hop_t> bfs_hops(const Graph& g, node_t source) {
  if (source >= g.node_count()) {
    throw std::invalid_argument("bfs_hops: source out of range");
  }
  std::vector<hop_t> hops(g.node_count(), kUnreachable);
  std::vector<node_t> queue;
  queue.reserve(g.node_count());
  bfs_into(g, source, hops, queue);
  return hops;
}

HopHistogram all_pairs_histogram(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  HopHistogram hist;
  hist.n = n;
  if (n < 2) return hist;

  unsigned workers = resolve_thread_count(threads);
  if (n < 128) workers = 1;  // thread spin-up dominates tiny graphs

  std::vector<std::uint64_t> by_hop;
  std::uint64_t unreachable = 0;
  std::mutex merge_mutex;

  // Integer counts merge commutatively, so the result is identical for any
  // worker count and block schedule.
  parallel_for_blocks(
      n, workers, std::max<std::size_t>(1, n / (4 * workers)),
      [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint64_t> local_by_hop;
        std::uint64_t local_unreachable = 0;
        std::vector<hop_t> hops(n);
        std::vector<node_t> queue;
        queue.reserve(n);
        for (std::size_t s = begin; s < end; ++s) {
          std::fill(hops.begin(), hops.end(), kUnreachable);
          bfs_into(g, static_cast<node_t>(s), hops, queue);
          accumulate(hops, static_cast<node_t>(s), local_by_hop,
                     local_unreachable);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (local_by_hop.size() > by_hop.size()) {
          by_hop.resize(local_by_hop.size(), 0);
        }
        for (std::size_t h = 0; h < local_by_hop.size(); ++h) {
          by_hop[h] += local_by_hop[h];
        }
        unreachable += local_unreachable;
      });

  hist.unreachable = unreachable;
  for (std::size_t h = 1; h < by_hop.size(); ++h) {
    if (by_hop[h] > 0) {
      hist.counts.emplace_back(static_cast<hop_t>(h), by_hop[h]);
    }
  }
  return hist;
}

std::optional<hop_t> diameter(const HopHistogram& hist) {
  if (hist.n < 2) return hop_t{0};
  if (hist.unreachable > 0) return std::nullopt;
  return hist.counts.back().first;
}

std::map<hop_t, double> hop_distribution(const HopHistogram& hist) {
  if (hist.n < 2) {
    throw std::invalid_argument("hop_distribution: need n >= 2");
  }
  const double pairs = static_cast<double>(hist.ordered_pairs());
  std::map<hop_t, double> dist;
  for (const auto& [h, count] : hist.counts) {
    dist[h] = static_cast<double>(count) / pairs;
  }
  return dist;
}

std::string to_csv(const HopHistogram& hist) {
  std::string out = "h,count\n";
  for (const auto& [h, count] : hist.counts) {
    out += std::to_string(h);
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  out += "inf," + std::to_string(hist.unreachable) + "\n";
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  std::vector<hop_t> hops(n, kUnreachable);
  std::vector<node_t> queue;
  queue.reserve(n);
  bfs_into(g, 0, hops, queue);
  return queue.size() == n;
}

}  // namespace netimb
