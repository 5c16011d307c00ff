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

#ifndef NETIMB_EDGE_LIST_HPP_
#define NETIMB_EDGE_LIST_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "netimb/graph.hpp"

namespace netimb {

// Edge-list text format: one edge per line as two whitespace-separated node
// tokens (arbitrary strings, e.g. AS numbers); lines whose first non-blank
// character is '#' are comments; blank lines are skipped. The serializer
// additionally writes a "# nodes: N" comment so graphs with isolated nodes
// survive a round trip; the parser honors that comment as a lower bound on
// the node count when present. Round trips preserve structure up to node
// relabeling (ids are assigned in first-appearance order), which leaves
// every pairwise-distance statistic unchanged.

/// Result of parsing an edge list.
struct EdgeListGraph {
  Graph graph;
  /// Original token for each dense node id, in first-appearance order.
  /// Nodes that exist only via the "# nodes: N" header have empty labels.
  std::vector<std::string> labels;
  std::size_t duplicate_edges_dropped = 0;
  std::size_t self_loops_dropped = 0;
};

/// Parses edge-list text. Node tokens are mapped to dense ids 0..n-1 in
/// first-appearance order; duplicate edges and self-loops are dropped and
/// counted, not errors. Throws parse_error (with line number) on lines that
/// do not hold exactly two tokens.
EdgeListGraph from_edge_list(std::string_view text);
EdgeListGraph from_edge_list(std::istream& in);

/// Reads and parses a file; throws io_error when unreadable.
EdgeListGraph from_edge_list_file(const std::filesystem::path& file);

/// Serializes to the text format above: "# nodes: N" header, then one
/// "u v" line per edge in lexicographic order.
std::string to_edge_list(const Graph& g);

}  // namespace netimb

#endif  // NETIMB_EDGE_LIST_HPP_
