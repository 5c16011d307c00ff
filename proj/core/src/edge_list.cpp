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

#include "netimb/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "netimb/errors.hpp"

namespace netimb {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Recognizes the serializer's "# nodes: N" header; other comments return 0.
std::size_t parse_node_hint(std::string_view comment) {
  constexpr std::string_view kTag = "# nodes:";
  if (!comment.starts_with(kTag)) return 0;
  const std::string_view rest = trim(comment.substr(kTag.size()));
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return 0;
  return value;
}

}  // namespace

EdgeListGraph from_edge_list(std::istream& in) {
  std::unordered_map<std::string, node_t> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<node_t, node_t>> pairs;  // normalized u <= v
  std::size_t node_hint = 0;
  std::size_t self_loops = 0;

  auto intern = [&](const std::string& token) -> node_t {
    const auto [it, inserted] =
        ids.emplace(token, static_cast<node_t>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      node_hint = std::max(node_hint, parse_node_hint(stripped));
      continue;
    }
    std::istringstream fields{std::string(stripped)};
    std::string a, b, extra;
    if (!(fields >> a >> b)) {
      throw parse_error("expected two node tokens", line_no);
    }
    if (fields >> extra) {
      throw parse_error("trailing tokens after edge", line_no);
    }
    const node_t u = intern(a);
    const node_t v = intern(b);
    if (u == v) {
      ++self_loops;
      continue;
    }
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::sort(pairs.begin(), pairs.end());
  const auto unique_end = std::unique(pairs.begin(), pairs.end());
  const std::size_t duplicates =
      static_cast<std::size_t>(pairs.end() - unique_end);
  pairs.erase(unique_end, pairs.end());

  const std::size_t n = std::max(node_hint, labels.size());
  labels.resize(n);  // hinted-only nodes stay unlabeled
  std::vector<std::vector<node_t>> adj(n);
  for (const auto& [u, v] : pairs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return {Graph(std::move(adj)), std::move(labels), duplicates, self_loops};
}

EdgeListGraph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

EdgeListGraph from_edge_list_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw io_error("cannot read edge list: " + file.string());
  }
  return from_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "# nodes: " + std::to_string(g.node_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace netimb
