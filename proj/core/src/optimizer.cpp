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

#include "netimb/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "netimb/csv.hpp"
#include "netimb/errors.hpp"
#include "netimb/parallel.hpp"

namespace netimb {

std::vector<CandidateScore> evaluate_candidates(const Graph& g,
                                                const QoSProfile& profile,
                                                unsigned threads) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("evaluate_candidates: need n >= 2");
  }
  const std::vector<Edge> candidates = non_edges(g);
  if (candidates.empty()) {
    throw metric_error("evaluate_candidates: graph is complete, no candidates");
  }
  std::vector<CandidateScore> scores(candidates.size());
  // Full recomputation per candidate: O(n(n+m)) each, embarrassingly
  // parallel. Single-threaded inner APSP avoids nested pools.
  parallel_for_blocks(candidates.size(), resolve_thread_count(threads), 4,
                      [&](std::size_t begin, std::size_t end) {
                        for (std::size_t i = begin; i < end; ++i) {
                          const Edge e = candidates[i];
                          const Graph with_edge = add_edge(g, e.u, e.v);
                          scores[i] = {
                              e, imbalance(with_edge, profile, 1).I};
                        }
                      });
  // Ties broken lexicographically after all scores are in, so the ranking
  // never depends on evaluation order.
  std::sort(scores.begin(), scores.end(),
            [](const CandidateScore& lhs, const CandidateScore& rhs) {
              if (lhs.I != rhs.I) return lhs.I < rhs.I;
              return lhs.edge < rhs.edge;
            });
  return scores;
}

OptimizationResult greedy_edge_addition(const Graph& g,
                                        const QoSProfile& profile,
                                        std::size_t budget, unsigned threads) {
  if (budget < 1) {
    throw std::invalid_argument("greedy_edge_addition: budget must be >= 1");
  }
  if (g.node_count() < 2) {
    throw std::invalid_argument("greedy_edge_addition: need n >= 2");
  }
  OptimizationResult result;
  result.i_before = imbalance(g, profile, threads).I;
  result.i_after = result.i_before;

  Graph current = g;
  for (std::size_t round = 0; round < budget; ++round) {
    std::vector<CandidateScore> scores;
    try {
      scores = evaluate_candidates(current, profile, threads);
    } catch (const metric_error&) {
      result.exhausted = true;  // candidate pool ran dry: partial result
      break;
    }
    const CandidateScore& best = scores.front();
    current = add_edge(current, best.edge.u, best.edge.v);
    result.chosen_edges.push_back(best.edge);
    result.trace.push_back({scores.size(), best.edge, best.I});
    result.i_after = best.I;
  }
  result.final_graph = std::move(current);
  return result;
}

std::string trace_csv(const OptimizationResult& result) {
  std::string out = "round,candidate_u,candidate_v,I\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const OptimizationRound& round = result.trace[i];
    out += std::to_string(i + 1);
    out += ',';
    out += std::to_string(round.best_edge.u);
    out += ',';
    out += std::to_string(round.best_edge.v);
    out += ',';
    out += fmt_double(round.best_I);
    out += '\n';
  }
  return out;
}

}  // namespace netimb
