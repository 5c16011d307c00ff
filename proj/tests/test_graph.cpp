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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "netimb/edge_list.hpp"
#include "netimb/errors.hpp"
#include "netimb/generators.hpp"
#include "netimb/graph.hpp"

using namespace netimb;

TEST_CASE("adjacency constructor validates invariants") {
  CHECK_NOTHROW(Graph({{1}, {0}}));
  // out-of-range neighbor
  CHECK_THROWS_AS(Graph({{2}, {0}}), std::invalid_argument);
  // self-loop
  CHECK_THROWS_AS(Graph({{0}, {}}), std::invalid_argument);
  // duplicate neighbor
  CHECK_THROWS_AS(Graph({{1, 1}, {0, 0}}), std::invalid_argument);
  // asymmetric
  CHECK_THROWS_AS(Graph({{1}, {}}), std::invalid_argument);
  // unsorted input is normalized, not rejected
  const Graph g({{2, 1}, {0}, {0}});
  CHECK(g.neighbors(0)[0] == 1);
  CHECK(g.neighbors(0)[1] == 2);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("has_edge, edges, and degree") {
  const Graph g = path(4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK_FALSE(g.has_edge(0, 99));
  CHECK(g.degree(1) == 2);
  const std::vector<Edge> expect = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(g.edges() == expect);
}

TEST_CASE("add_edge returns a modified copy and validates") {
  const Graph g = path(3);
  const Graph g2 = add_edge(g, 0, 2);
  CHECK(g.edge_count() == 2);   // source untouched
  CHECK(g2.edge_count() == 3);
  CHECK(g2.has_edge(0, 2));
  CHECK(g2 == ring(3));
  CHECK_THROWS_AS((void)add_edge(g, 0, 1), std::invalid_argument);  // present
  CHECK_THROWS_AS((void)add_edge(g, 1, 1), std::invalid_argument);  // loop
  CHECK_THROWS_AS((void)add_edge(g, 0, 3), std::invalid_argument);  // range
}

TEST_CASE("non_edges enumerates the complement in lexicographic order") {
  const Graph g = path(4);
  const std::vector<Edge> expect = {{0, 2}, {0, 3}, {1, 3}};
  CHECK(non_edges(g) == expect);
  CHECK(non_edges(complete(5)).empty());
  const auto all = non_edges(Graph(3));
  CHECK(all == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("deterministic generator structure") {
  CHECK(complete(6).edge_count() == 15);
  CHECK(path(1).edge_count() == 0);
  CHECK(ring(3) == complete(3));
  const Graph s = star(7);
  CHECK(s.edge_count() == 6);
  CHECK(s.degree(0) == 6);
  for (node_t leaf = 1; leaf < 7; ++leaf) CHECK(s.degree(leaf) == 1);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
  CHECK_THROWS_AS(ring(2), std::invalid_argument);
  CHECK_THROWS_AS(star(1), std::invalid_argument);
}

TEST_CASE("erdos_renyi endpoints and determinism") {
  CHECK(erdos_renyi(20, 0.0, 1).edge_count() == 0);
  CHECK(erdos_renyi(20, 1.0, 1) == complete(20));
  CHECK(erdos_renyi(40, 0.3, 7) == erdos_renyi(40, 0.3, 7));
  CHECK(erdos_renyi(40, 0.3, 7) != erdos_renyi(40, 0.3, 8));
  CHECK_THROWS_AS(erdos_renyi(10, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(10, 1.5, 1), std::invalid_argument);
}

TEST_CASE("barabasi_albert edge count, connectivity, determinism") {
  for (const std::size_t m : {std::size_t{1}, std::size_t{3}, std::size_t{5}}) {
    const Graph g = barabasi_albert(40, m, 11);
    // complete seed on max(m,2) nodes plus m edges per later node
    const std::size_t s = std::max<std::size_t>(m, 2);
    CHECK(g.edge_count() == s * (s - 1) / 2 + (40 - s) * m);
    // connected: every node attaches into the existing component
    std::set<node_t> seen = {0};
    std::vector<node_t> work = {0};
    while (!work.empty()) {
      const node_t u = work.back();
      work.pop_back();
      for (const node_t v : g.neighbors(u)) {
        if (seen.insert(v).second) work.push_back(v);
      }
    }
    CHECK(seen.size() == 40);
  }
  CHECK(barabasi_albert(50, 3, 5) == barabasi_albert(50, 3, 5));
  CHECK_THROWS_AS(barabasi_albert(5, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(barabasi_albert(5, 0, 1), std::invalid_argument);
}

TEST_CASE("barabasi_albert grows hubs") {
  // preferential attachment concentrates degree: the maximum degree ends
  // strictly above the median
  const Graph g = barabasi_albert(50, 3, 5);
  std::vector<std::size_t> degs;
  for (node_t u = 0; u < 50; ++u) degs.push_back(g.degree(u));
  std::sort(degs.begin(), degs.end());
  CHECK(degs.back() > degs[degs.size() / 2]);
}

TEST_CASE("watts_strogatz preserves edge count and simplicity") {
  for (const double p : {0.0, 0.1, 0.5, 1.0}) {
    const Graph g = watts_strogatz(30, 4, p, 3);
    CHECK(g.edge_count() == 30 * 4 / 2);  // rewiring never adds or drops edges
  }
  // p = 0 is exactly the ring lattice
  const Graph lattice = watts_strogatz(10, 4, 0.0, 9);
  for (node_t u = 0; u < 10; ++u) {
    CHECK(lattice.degree(u) == 4);
    CHECK(lattice.has_edge(u, (u + 1) % 10));
    CHECK(lattice.has_edge(u, (u + 2) % 10));
  }
  CHECK(watts_strogatz(30, 4, 0.2, 3) == watts_strogatz(30, 4, 0.2, 3));
  CHECK_THROWS_AS(watts_strogatz(10, 3, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(watts_strogatz(4, 4, 0.1, 1), std::invalid_argument);
}

TEST_CASE("dumbbell wiring") {
  const Dumbbell db = dumbbell(5, ClusterTopology::kComplete, 1);
  CHECK(db.graph.node_count() == 10);
  CHECK(db.bridge == Edge{0, 5});
  CHECK(db.graph.edge_count() == 2 * 10 + 1);  // two K5 plus the bridge
  CHECK(db.graph.has_edge(0, 5));
  // bridge is the only inter-cluster edge
  for (node_t u = 0; u < 5; ++u) {
    for (node_t v = 5; v < 10; ++v) {
      if (u == 0 && v == 5) continue;
      CHECK_FALSE(db.graph.has_edge(u, v));
    }
  }
  const Dumbbell ring_db = dumbbell(6, ClusterTopology::kRing, 1);
  CHECK(ring_db.graph.edge_count() == 2 * 6 + 1);
  const Dumbbell er_db = dumbbell(8, ClusterTopology::kErdosRenyi, 4, 0.3);
  CHECK(er_db.graph.node_count() == 16);
  CHECK(er_db.graph.has_edge(0, 8));
  CHECK_THROWS_AS(dumbbell(1, ClusterTopology::kComplete, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(dumbbell(2, ClusterTopology::kRing, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(dumbbell(4, ClusterTopology::kErdosRenyi, 1, 0.0),
                  std::invalid_argument);
}

TEST_CASE("edge list parsing: labels, comments, duplicates") {
  const auto parsed = from_edge_list(
      "# asn links\n"
      "7018 3356\n"
      "\n"
      "3356 1299\n"
      "7018 3356\n"   // duplicate
      "1299 1299\n"); // self-loop
  CHECK(parsed.graph.node_count() == 3);
  CHECK(parsed.graph.edge_count() == 2);
  CHECK(parsed.labels == std::vector<std::string>{"7018", "3356", "1299"});
  CHECK(parsed.duplicate_edges_dropped == 1);
  CHECK(parsed.self_loops_dropped == 1);
  CHECK(parsed.graph.has_edge(0, 1));
  CHECK(parsed.graph.has_edge(1, 2));
}

TEST_CASE("edge list parse errors carry line numbers") {
  try {
    from_edge_list("0 1\nonly-one-token\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }
  try {
    from_edge_list("0 1\n\n0 1 2\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("edge list round trip preserves graphs up to relabeling") {
  // The parser assigns ids in first-appearance order, so node identities
  // may permute; node count, edge count, and the label->edge structure
  // survive. Nodes 1 and 5 stay isolated and exist only via the header.
  Graph g(6);
  g = add_edge(g, 0, 3);
  g = add_edge(g, 2, 4);
  const auto back = from_edge_list(to_edge_list(g));
  CHECK(back.graph.node_count() == 6);
  CHECK(back.graph.edge_count() == 2);
  // Map the original ids through the parsed labels and compare edges.
  std::set<std::pair<std::string, std::string>> got;
  for (const Edge& e : back.graph.edges()) {
    got.emplace(back.labels[e.u], back.labels[e.v]);
  }
  CHECK(got == std::set<std::pair<std::string, std::string>>{{"0", "3"},
                                                             {"2", "4"}});

  const Graph ws = watts_strogatz(40, 4, 0.3, 17);
  const Graph ws_back = from_edge_list(to_edge_list(ws)).graph;
  CHECK(ws_back.node_count() == ws.node_count());
  CHECK(ws_back.edge_count() == ws.edge_count());
}

TEST_CASE("edge list istream overload and file errors") {
  std::istringstream in("a b\nb c\n");
  const auto parsed = from_edge_list(in);
  CHECK(parsed.graph.node_count() == 3);
  CHECK_THROWS_AS(from_edge_list_file("/nonexistent/netimb-test.txt"),
                  io_error);
}

TEST_CASE("large synthetic ingestion at autonomous-system scale") {
  // ~10670 nodes / 22002 edges, the ballpark of a registry snapshot.
  std::string text;
  text.reserve(1 << 19);
  const std::size_t n = 10670;
  std::size_t expected = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    text += std::to_string(i) + ' ' + std::to_string(i + 1) + '\n';
    ++expected;
  }
  for (std::size_t i = 0; i + 3 < n; ++i) {
    text += std::to_string(i) + ' ' + std::to_string(i + 3) + '\n';
    ++expected;
  }
  for (std::size_t i = 0; i < 666; ++i) {
    text += std::to_string(i) + ' ' + std::to_string(i + 7) + '\n';
    ++expected;
  }
  CHECK(expected == 22002);
  const auto parsed = from_edge_list(text);
  CHECK(parsed.graph.node_count() == n);
  CHECK(parsed.graph.edge_count() == expected);
  CHECK(parsed.duplicate_edges_dropped == 0);
}
